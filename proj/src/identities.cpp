#include "madic/identities.hpp"

#include "madic/residue.hpp"

namespace madic {

std::string_view hform_name(HForm form) noexcept {
  return form == HForm::AllOnes ? "all-ones h" : "repetition idempotent j = h/p";
}

namespace {

template <class R>
struct Group {
  std::string name;
  std::string statement;
  std::vector<std::pair<Poly<R>, Poly<R>>> cases;
};

template <class R>
Poly<R> times(const R& ring, u32 n, const Poly<R>& f) {
  Poly<R> acc;
  for (u32 i = 0; i < n; ++i) acc = add(ring, acc, f);
  return acc;
}

// The congruence list is built identically for R and for each F_q component,
// so instance i of one evaluation lines up with instance i of the other.
template <class R>
std::vector<Group<R>> congruences(const R& ring, u32 p, u32 a, const std::vector<Poly<R>>& E, const Poly<R>& h,
                                  HForm form) {
  const std::size_t L = E.size();
  const Poly<R> one = constant(ring, ring.one());
  const Poly<R> zero;
  auto mulp = [&](const Poly<R>& x, const Poly<R>& y) { return cyclic_mul(ring, x, y, p); };
  auto mu = [&](const Poly<R>& x) { return apply_mu(ring, p, a, x); };

  std::vector<Poly<R>> Ep, D, Dp;
  for (const auto& e : E) {
    Ep.push_back(sub(ring, one, e));
    D.push_back(sub(ring, sub(ring, one, h), e));
    Dp.push_back(add(ring, h, e));
  }

  std::vector<Group<R>> out;
  out.reserve(32);  // group() hands out references into out
  auto group = [&](std::string name, std::string statement) -> Group<R>& {
    out.push_back({std::move(name), std::move(statement), {}});
    return out.back();
  };

  auto& g1 = group("even.idempotent", "E_r^2 = E_r");
  for (const auto& e : E) g1.cases.emplace_back(mulp(e, e), e);
  auto& g2 = group("even.multiplier-idempotent", "mu_a(E_r)^2 = mu_a(E_r)");
  for (const auto& e : E) g2.cases.emplace_back(mulp(mu(e), mu(e)), mu(e));
  auto& g3 = group("even.orthogonal", "E_r E_t = 0 (r != t)");
  for (std::size_t r = 0; r < L; ++r)
    for (std::size_t t = r + 1; t < L; ++t) g3.cases.emplace_back(mulp(E[r], E[t]), zero);
  auto& g4 = group("even.orbit-sum", "E_0 + ... + E_{L-1} = 1 - h");
  {
    Poly<R> sum;
    for (const auto& e : E) sum = add(ring, sum, e);
    g4.cases.emplace_back(sum, sub(ring, one, h));
  }

  auto cycle = [&](Group<R>& g, const std::vector<Poly<R>>& xs) {
    for (std::size_t r = 0; r < L; ++r) g.cases.emplace_back(mu(xs[r]), xs[(r + 1) % L]);
  };
  auto idem = [&](Group<R>& g, const std::vector<Poly<R>>& xs) {
    for (const auto& x : xs) g.cases.emplace_back(mulp(x, x), x);
  };

  idem(group("odd.idempotent", "E'_r^2 = E'_r"), Ep);
  cycle(group("odd.multiplier-cycle", "mu_a(E'_r) = E'_{r+1}"), Ep);
  auto& g5 = group("odd.pairwise-union", "E'_r + E'_t - E'_r E'_t = 1 (r != t)");
  for (std::size_t r = 0; r < L; ++r)
    for (std::size_t t = r + 1; t < L; ++t)
      g5.cases.emplace_back(sub(ring, add(ring, Ep[r], Ep[t]), mulp(Ep[r], Ep[t])), one);
  auto& g6 = group("odd.orbit-product", "E'_0 E'_1 ... E'_{L-1} = h");
  {
    Poly<R> prod = one;
    for (const auto& x : Ep) prod = mulp(prod, x);
    g6.cases.emplace_back(prod, h);
  }

  idem(group("even2.idempotent", "D_r^2 = D_r"), D);
  cycle(group("even2.multiplier-cycle", "mu_a(D_r) = D_{r+1}"), D);
  auto& g7 = group("even2.pairwise-union", "D_r + D_t - D_r D_t = 1 - h (r != t)");
  for (std::size_t r = 0; r < L; ++r)
    for (std::size_t t = r + 1; t < L; ++t)
      g7.cases.emplace_back(sub(ring, add(ring, D[r], D[t]), mulp(D[r], D[t])), sub(ring, one, h));
  auto& g8 = group("even2.orbit-product", "D_0 D_1 ... D_{L-1} = 0");
  {
    Poly<R> prod = one;
    for (const auto& x : D) prod = mulp(prod, x);
    g8.cases.emplace_back(prod, zero);
  }

  idem(group("odd2.idempotent", "D'_r^2 = D'_r"), Dp);
  cycle(group("odd2.multiplier-cycle", "mu_a(D'_r) = D'_{r+1}"), Dp);
  auto& g9 = group("odd2.pairwise-product", "D'_r D'_t = h (r != t)");
  for (std::size_t r = 0; r < L; ++r)
    for (std::size_t t = r + 1; t < L; ++t) g9.cases.emplace_back(mulp(Dp[r], Dp[t]), h);
  {
    Poly<R> sum;
    for (const auto& x : Dp) sum = add(ring, sum, x);
    const auto lm1 = times(ring, static_cast<u32>(L - 1), h);
    if (form == HForm::AllOnes) {
      group("odd2.orbit-sum", "D'_0 + ... + D'_{L-1} = 1 - (L-1) h").cases.emplace_back(sum, sub(ring, one, lm1));
    } else {
      group("odd2.orbit-sum", "D'_0 + ... + D'_{L-1} = 1 + (L-1) h").cases.emplace_back(sum, add(ring, one, lm1));
    }
  }
  return out;
}

PolyFq h_poly(const Zq& zq, u32 p, HForm form) {
  return form == HForm::AllOnes ? all_ones_h(zq, p) : repetition_idempotent(zq, p);
}

}  // namespace

std::vector<IdentityResult> check_orbit_identities(const RingCtx& ring, u32 p, u32 a,
                                                   const std::vector<RingCode>& orbit, HForm form) {
  const Zq& zq = ring.base();
  const PolyFq h = h_poly(zq, p, form);

  std::vector<PolyR> E;
  for (const auto& code : orbit) E.push_back(mod_xn_minus_1(ring, code.idempotent, p));
  const auto ring_groups = congruences(ring, p, a, E, lift(ring, h), form);

  std::vector<std::vector<Group<Zq>>> comp_groups;
  for (u32 k = 0; k < ring.s(); ++k) {
    std::vector<PolyFq> Ek;
    for (const auto& e : E) Ek.push_back(components(ring, e)[k]);
    comp_groups.push_back(congruences(zq, p, a, Ek, h, form));
  }

  std::vector<IdentityResult> results;
  for (std::size_t gi = 0; gi < ring_groups.size(); ++gi) {
    const auto& g = ring_groups[gi];
    IdentityResult res{g.name, g.statement, 0, 0, true};
    for (std::size_t ci = 0; ci < g.cases.size(); ++ci) {
      const auto& [lhs, rhs] = g.cases[ci];
      const bool ring_ok = lhs == rhs;
      bool comps_ok = true;
      const auto lhs_parts = components(ring, lhs);
      for (u32 k = 0; k < ring.s(); ++k) {
        const auto& [cl, cr] = comp_groups[k][gi].cases[ci];
        comps_ok = comps_ok && cl == cr;
        if (lhs_parts[k] != cl) res.crt_consistent = false;
      }
      if (ring_ok != comps_ok) res.crt_consistent = false;
      ++res.instances;
      if (!ring_ok) ++res.failures;
    }
    results.push_back(std::move(res));
  }
  return results;
}

IdentityResult check_combined_idempotent(const RingCtx& ring, u32 p, const std::vector<PolyFq>& field_idempotents) {
  IdentityResult res{"combined.idempotent", "(sum_k eta_k e_k)^2 = sum_k eta_k e_k", 1, 0, true};
  const auto E = mod_xn_minus_1(ring, combine(ring, field_idempotents), p);
  const bool ring_ok = cyclic_mul(ring, E, E, p) == E;
  bool comps_ok = true;
  for (const auto& e : field_idempotents) {
    const auto er = mod_xn_minus_1(ring.base(), e, p);
    comps_ok = comps_ok && cyclic_mul(ring.base(), er, er, p) == er;
  }
  res.crt_consistent = ring_ok == comps_ok;
  if (!ring_ok) res.failures = 1;
  return res;
}

}  // namespace madic
