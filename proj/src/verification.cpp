#include "madic/verification.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "madic/analysis.hpp"
#include "madic/identities.hpp"
#include "madic/residue.hpp"
#include "madic/ring.hpp"
#include "madic/serialize.hpp"

namespace madic {

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const std::vector<GridPoint>& identity_grid() {
  static const std::vector<GridPoint> grid = {
      {3, 13, 4, 3, 7}, {7, 19, 6, 3, {}}, {7, 19, 3, 4, {}}, {3, 13, 2, 2, {}}, {5, 11, 5, 5, {}},
  };
  return grid;
}

bool grid_point_valid(const GridPoint& g) {
  if (!is_prime(g.q) || !is_prime(g.p) || g.m < 2 || (g.p - 1) % g.m != 0) return false;
  if (g.s < 2 || (g.q - 1) % (g.s - 1) != 0 || g.p % g.q == 0) return false;
  return build_residue_system(g.p, g.m).is_madic_residue(g.q);
}

std::string grid_point_label(const GridPoint& g) {
  std::ostringstream os;
  os << "(q=" << g.q << ",p=" << g.p << ",m=" << g.m << ",s=" << g.s;
  if (g.a) os << ",a=" << *g.a;
  os << ")";
  return os.str();
}

namespace {

std::string join(const std::vector<u32>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "}";
}

// Published generators of the six even-like class-I codes, q = 7, p = 19, m = 6.
const std::vector<std::string> kSextic19 = {
    "1+4*x+6*x^2+6*x^3+3*x^4+4*x^6+5*x^7+x^8+2*x^10+2*x^11+2*x^12+4*x^13+5*x^14+3*x^15+x^16",
    "1+3*x+x^2+x^3+5*x^4+x^5+6*x^6+x^7+5*x^8+6*x^9+6*x^11+3*x^12+3*x^13+5*x^14+x^15+x^16",
    "1+5*x^2+x^3+4*x^4+3*x^5+5*x^7+3*x^8+4*x^9+6*x^10+2*x^11+6*x^12+2*x^13+4*x^14+2*x^15+x^16",
    "1+3*x+5*x^2+4*x^3+2*x^4+2*x^5+2*x^6+x^8+5*x^9+4*x^10+3*x^12+6*x^13+6*x^14+4*x^15+x^16",
    "1+x+5*x^2+3*x^3+3*x^4+6*x^5+6*x^7+5*x^8+x^9+6*x^10+x^11+5*x^12+x^13+x^14+3*x^15+x^16",
    "1+2*x+4*x^2+2*x^3+6*x^4+2*x^5+6*x^6+4*x^7+3*x^8+5*x^9+3*x^11+4*x^12+x^13+5*x^14+x^16",
};
// alpha = gamma^8 reproduces the printed labeling C_i = <g_i>.
constexpr u32 kSextic19RootPower = 8;

// 4-adic example, q = 3, p = 13: supports l_0..l_3 and e_i = sum_j c_ij l_j.
const std::vector<std::vector<u32>> kQuartic13Supports = {{1, 3, 9}, {2, 5, 6}, {4, 10, 12}, {7, 8, 11}};
const std::vector<std::vector<u32>> kQuartic13Idempotents = {{1, 0, 2, 2}, {0, 2, 2, 1}, {2, 2, 1, 0}, {2, 1, 0, 2}};
constexpr u32 kQuartic13RootPower = 2;
const std::vector<std::vector<u32>> kQuartic13Eta = {{1, 0, 2}, {0, 2, 2}, {0, 1, 2}};
const std::vector<std::vector<u32>> kQuartic13Chain = {{0, 1, 2}, {3, 0, 1}, {2, 3, 0}, {1, 2, 3}};
const std::vector<std::vector<u32>> kQuartic13G0 = {{1, 0, 0}, {1, 2, 0}, {0, 2, 2}, {1, 1, 2}, {1, 2, 1}, {1, 2, 2},
                                                    {0, 2, 0}, {2, 1, 0}, {0, 1, 0}, {2, 2, 1}, {1, 0, 0}};
const std::vector<std::vector<u32>> kQuartic13G1 = {{1, 0, 0}, {0, 2, 0}, {1, 2, 0}, {1, 1, 0}, {1, 2, 0}, {2, 2, 0},
                                                    {2, 2, 0}, {0, 1, 0}, {1, 1, 0}, {2, 2, 0}, {1, 0, 0}};
const char* kQuartic13G23 = "1+x+2*x^2+2*x^3+2*x^5+2*x^8+x^9";
const std::vector<std::string> kQuartic13Params = {"[13,3,9]", "[13,3,6]", "[13,4,6]", "[13,4,6]"};

PolyFq support_combination(const Zq& zq, const std::vector<u32>& coeffs) {
  std::vector<u32> v(13, 0);
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    for (u32 k : kQuartic13Supports[j]) v[k] = zq.from_int(coeffs[j]);
  return PolyFq(std::move(v));
}

PolyR ring_poly_from_table(const std::vector<std::vector<u32>>& table) {
  std::vector<RingElt> v;
  for (const auto& c : table) v.push_back(RingElt{c});
  return PolyR(std::move(v));
}

class Verifier {
 public:
  VerifyReport run() {
    residue_classes();
    sextic_19();
    quartic_13();
    grid();
    return std::move(report_);
  }

 private:
  void check(std::string id, std::string description, bool passed, std::string detail = {}) {
    report_.checks.push_back({std::move(id), std::move(description), passed, std::move(detail)});
  }
  void erratum(std::string id, std::string printed, std::string computed, std::string how) {
    report_.errata.push_back({std::move(id), std::move(printed), std::move(computed), std::move(how)});
  }

  void residue_classes() {
    const auto sys = build_residue_system(13, 3, 2u);
    const std::vector<std::vector<u32>> expected = {{1, 5, 8, 12}, {2, 3, 10, 11}, {4, 6, 7, 9}};
    std::string got;
    for (const auto& c : sys.classes()) got += join(c);
    check("classes.p13-m3", "m-adic classes for p=13, m=3, b=2", sys.classes() == expected, got);

    const auto sys13 = build_residue_system(13, 6, 2u);
    const auto sys19 = build_residue_system(19, 6, 2u);
    std::string m6, p19;
    for (const auto& c : sys13.classes()) m6 += join(c);
    for (const auto& c : sys19.classes()) p19 += join(c);
    erratum("classes.labels", "p=13 with m=6 and b primitive in Z_19^*, listing three classes of size 4",
            "the printed sets are exactly the m=3 classes mod 13; m=6 gives " + m6 + "; p=19, m=6 gives " + p19,
            "build_residue_system enumeration of m-th powers");
  }

  void sextic_19() {
    const auto base = make_prime_field(7);
    const Zq zq(7);
    const auto sys = build_residue_system(19, 6);
    std::vector<PolyFq> printed;
    for (const auto& s : kSextic19) printed.push_back(parse_poly(zq, s));

    const auto canonical = build_field_families(sys, base, 1);
    std::set<std::vector<u32>> a, b;
    for (const auto& c : canonical.even_I) a.insert(c.generator.coeffs());
    for (const auto& g : printed) b.insert(g.coeffs());
    check("sextic19.generator-set", "six even-like class-I generators (q=7,p=19,m=6) equal the printed set", a == b);

    const auto pinned = build_field_families(sys, base, kSextic19RootPower);
    bool labeled = true;
    bool distances = true;
    std::string params;
    for (u32 i = 0; i < 6; ++i) {
      labeled = labeled && pinned.even_I[i].generator == printed[i];
      const auto rep = min_distance_field(pinned.even_I[i]);
      distances = distances && rep.ranks[0] == 3 && rep.d_min == 15;
      params += parameters_string(rep) + " ";
    }
    check("sextic19.labeling", "alpha = gamma^8, b = 2 reproduce the printed labels C_0..C_5", labeled);
    check("sextic19.distance", "each code has parameters [19,3,15]", distances, params);
    const auto gr = griesmer_check(19, 3, 15, 7);
    check("sextic19.griesmer", "Griesmer sum for (19,3,15,7) is 19 and is attained", gr.bound_n == 19 && gr.attained);
  }

  void quartic_13() {
    const auto base = make_prime_field(3);
    const Zq zq(3);
    const auto sys = build_residue_system(13, 4, 2u, 7u);
    const auto fam = build_field_families(sys, base, kQuartic13RootPower);
    const auto ring = make_ring(base, 3);

    bool idem = true;
    for (u32 i = 0; i < 4; ++i)
      idem = idem && fam.even_I[i].idempotent == support_combination(zq, kQuartic13Idempotents[i]);
    check("quartic13.idempotents", "field idempotents e_0..e_3 (q=3,p=13,m=4, alpha = gamma^2) match", idem);

    bool eta = ring.eta().size() == 3;
    for (u32 k = 0; eta && k < 3; ++k) eta = ring.eta()[k].coeffs == kQuartic13Eta[k];
    check("quartic13.eta", "eta = (1-v^2, 2v+2v^2, v+2v^2) for s=3", eta);

    const std::vector<u32> slots = {0, 1, 2};
    const auto e0 = ring_even_like_I(ring, fam, slots);
    const auto chain = ring_mu_chain(ring, fam, e0, 7);
    bool chain_ok = chain.size() == kQuartic13Chain.size();
    for (std::size_t r = 0; chain_ok && r < chain.size(); ++r) chain_ok = chain[r].slots == kQuartic13Chain[r];
    check("quartic13.mu7-chain", "mu_7 orbit of E_0 has slots (0,1,2),(3,0,1),(2,3,0),(1,2,3)", chain_ok);

    // E_0 generator over R.
    const auto printed_g0 = ring_poly_from_table(kQuartic13G0);
    std::vector<std::size_t> diffs;
    for (std::size_t j = 0; j < std::max(printed_g0.size(), e0.generator.size()); ++j)
      if (printed_g0.coeff(ring, j) != e0.generator.coeff(ring, j)) diffs.push_back(j);
    const auto comps = components(ring, e0.generator);
    bool structural = e0.generator.degree() == 10u && e0.generator.leading() == ring.one();
    for (u32 k = 0; k < 3; ++k) structural = structural && comps[k] == fam.even_I[slots[k]].generator;
    check("quartic13.g0-structure", "generator of E_0 is monic of degree 10 with CRT components g_0, g_1, g_2",
          structural, format_ring_poly(e0.generator));
    if (!diffs.empty()) {
      std::string where;
      for (auto j : diffs)
        where += " x^" + std::to_string(j) + ": printed " + format_ring_elt(printed_g0.coeff(ring, j)) + ", computed " +
                 format_ring_elt(e0.generator.coeff(ring, j)) + ";";
      const auto printed_comp0 = components(ring, printed_g0)[0];
      const bool divides = mod(zq, xn_minus_one(zq, 13), printed_comp0).is_zero();
      erratum("quartic13.g0", format_ring_poly(printed_g0),
              format_ring_poly(e0.generator) + " (differs at" + where + ")",
              std::string("CRT combination of component generators; printed v=0 projection ") +
                  format_poly(printed_comp0) + (divides ? " divides" : " does not divide") + " x^13-1");
    }

    // Distance of E_0 and the remaining printed parameters.
    std::vector<std::string> computed_params;
    for (const auto& code : chain) {
      const auto rep = min_distance_ring(ring, code, 13);
      computed_params.push_back(parameters_string(rep));
      if (&code == &chain.front()) {
        check("quartic13.e0-distance", "ring distance of <E_0> is 9, component-min and full enumeration agree",
              rep.d_min == 9 && rep.exhaustive_d == 9u,
              "component-min " + std::to_string(rep.d_min) + ", exhaustive " +
                  (rep.exhaustive_d ? std::to_string(*rep.exhaustive_d) : std::string("skipped")));
      }
    }
    const auto gr = griesmer_check(13, 3, 9, 3);
    check("quartic13.griesmer", "Griesmer sum for (13,3,9,3) is 13 and is attained", gr.bound_n == 13 && gr.attained);
    for (std::size_t r = 0; r < 4; ++r) {
      if (computed_params[r] != kQuartic13Params[r])
        erratum("quartic13.params-g" + std::to_string(r), kQuartic13Params[r], computed_params[r],
                "component-min distance over the CRT components, cross-checked by full enumeration");
    }

    const auto printed_g1 = ring_poly_from_table(kQuartic13G1);
    if (printed_g1 != chain[1].generator)
      erratum("quartic13.g1", format_ring_poly(printed_g1), format_ring_poly(chain[1].generator),
              "CRT combination of the component generators of E_1 = mu_7(E_0)");
    const auto printed_g23 = lift(ring, parse_poly(zq, kQuartic13G23));
    if (chain[2].generator == chain[3].generator && chain[2].generator == printed_g23) {
      check("quartic13.g2-g3", "g_2 = g_3 as printed", true);
    } else {
      erratum("quartic13.g2-g3", std::string("g_2 = g_3 = ") + kQuartic13G23,
              "g_2 = " + format_ring_poly(chain[2].generator) + "; g_3 = " + format_ring_poly(chain[3].generator),
              "E_2 and E_3 have different CRT slot assignments, so their generators differ");
    }

    // Odd-like class-II idempotent: 1 - D_i against the printed alternative h + D_i.
    const auto h = lift(ring, all_ones_h(zq, 13));
    const auto one = constant(ring, ring.one());
    const auto D0 = sub(ring, sub(ring, one, h), e0.idempotent);
    const auto via_e = add(ring, h, e0.idempotent);
    const auto via_d = add(ring, h, D0);
    check("quartic13.odd2-form", "1 - D_0 = h + E_0", sub(ring, one, D0) == via_e);
    if (via_d != via_e)
      erratum("odd2.definition", "D'_i = 1 - D_i = h + D_i", "1 - D_i = h + E_i, and h + D_i != h + E_i",
              "direct evaluation for E_0 of the q=3, p=13, s=3 example");
    erratum("quartic13.base-field", "idempotents of the 4-adic codes of length 13 over F_4",
            "the listed idempotents have coefficients in F_3 and match the codes over F_3",
            "quartic13.idempotents check above");
  }

  void grid() {
    for (const auto& g : identity_grid()) {
      const auto label = grid_point_label(g);
      if (!grid_point_valid(g)) {
        check("grid.skip" + label, "grid point " + label + " excluded (q not in Q_0 or s incompatible)", true);
        continue;
      }
      const auto base = make_prime_field(g.q);
      const auto sys = build_residue_system(g.p, g.m, std::nullopt, g.a);
      const auto fam = build_field_families(sys, base);
      const auto ring = make_ring(base, g.s);
      const Zq& zq = fam.zq;

      // Structural invariants of the field families.
      PolyFq prod({zq.neg(1), 1});
      for (const auto& c : fam.odd_I) prod = mul(zq, prod, c.generator);
      bool ideal_ok = true;
      bool even_ok = true;
      for (Family f : {Family::EvenI, Family::OddI, Family::EvenII, Family::OddII}) {
        for (const auto& c : fam.family(f)) {
          ideal_ok = ideal_ok && generator_of_ideal(zq, c.idempotent, g.p) == c.generator;
          if (f == Family::EvenI) even_ok = even_ok && evaluate(zq, c.generator, zq.one()) == 0;
        }
      }
      check("grid.structure" + label, "prod g_hat_i * (x-1) = x^p-1; gcd(e, x^p-1) = g; g_i(1) = 0",
            prod == xn_minus_one(zq, g.p) && ideal_ok && even_ok);

      for (const auto& [config, slots] : orbit_configs(g)) {
        const auto E = ring_even_like_I(ring, fam, slots);
        const auto orbit = ring_mu_chain(ring, fam, E, sys.a());
        const auto where = label + "/" + config;

        bool all_ok = true;
        std::string failed;
        for (const auto& r : check_orbit_identities(ring, g.p, sys.a(), orbit, HForm::Repetition)) {
          all_ok = all_ok && r.holds() && r.crt_consistent;
          if (!r.holds()) failed += " " + r.name;
        }
        check("grid.identities" + where, "idempotent identities with j = h/p hold over R and on every component",
              all_ok, failed);

        for (const auto& r : check_orbit_identities(ring, g.p, sys.a(), orbit, HForm::AllOnes)) {
          if (r.holds()) continue;
          erratum("identity." + r.name + where, r.statement + " with h = 1 + x + ... + x^{p-1}",
                  std::to_string(r.failures) + " of " + std::to_string(r.instances) + " congruences fail",
                  "exact arithmetic mod x^p - 1 over R; p mod q = " + std::to_string(g.p % g.q) +
                      ", orbit length L = " + std::to_string(orbit.size()));
        }

        for (const auto& code : orbit) {
          const auto rep = min_distance_ring(ring, code, g.p, u64{1} << 20);
          if (!rep.exhaustive_d) continue;
          check("grid.ring-distance" + where + "/" + join(code.slots),
                "component-min distance equals full enumeration", rep.d_min == *rep.exhaustive_d,
                std::to_string(rep.d_min) + " vs " + std::to_string(*rep.exhaustive_d));
        }
      }
    }
  }

  static std::vector<std::pair<std::string, std::vector<u32>>> orbit_configs(const GridPoint& g) {
    std::vector<u32> consecutive, constant_slots(g.s, 0);
    for (u32 k = 0; k < g.s; ++k) consecutive.push_back(k % g.m);
    return {{"consecutive", consecutive}, {"constant", constant_slots}};
  }

  VerifyReport report_;
};

}  // namespace

VerifyReport verify_reference_examples() { return Verifier().run(); }

}  // namespace madic
