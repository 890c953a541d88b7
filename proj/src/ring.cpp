#include "madic/ring.hpp"

#include <numeric>
#include <string>

namespace madic {

RingElt RingCtx::from_base(u32 c) const {
  auto r = zero();
  r.coeffs[0] = c % q();
  return r;
}

RingElt RingCtx::v_power(u32 k) const {
  auto r = zero();
  // v^s = v, so v^k = v^{1 + (k-1) mod (s-1)} for k >= 1.
  const u32 e = k == 0 ? 0 : 1 + (k - 1) % (s_ - 1);
  r.coeffs[e] = 1;
  return r;
}

RingElt RingCtx::add(const Elem& a, const Elem& b) const {
  RingElt r{std::vector<u32>(s_)};
  for (u32 i = 0; i < s_; ++i) r.coeffs[i] = zq_.add(a.coeffs[i], b.coeffs[i]);
  return r;
}

RingElt RingCtx::sub(const Elem& a, const Elem& b) const {
  RingElt r{std::vector<u32>(s_)};
  for (u32 i = 0; i < s_; ++i) r.coeffs[i] = zq_.sub(a.coeffs[i], b.coeffs[i]);
  return r;
}

RingElt RingCtx::neg(const Elem& a) const {
  RingElt r{std::vector<u32>(s_)};
  for (u32 i = 0; i < s_; ++i) r.coeffs[i] = zq_.neg(a.coeffs[i]);
  return r;
}

RingElt RingCtx::mul(const Elem& a, const Elem& b) const {
  RingElt r = zero();
  for (u32 i = 0; i < s_; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (u32 j = 0; j < s_; ++j) {
      if (b.coeffs[j] == 0) continue;
      const u32 k = i + j;
      const u32 e = k == 0 ? 0 : 1 + (k - 1) % (s_ - 1);
      r.coeffs[e] = zq_.add(r.coeffs[e], zq_.mul(a.coeffs[i], b.coeffs[j]));
    }
  }
  return r;
}

bool RingCtx::is_zero(const Elem& a) noexcept {
  for (u32 c : a.coeffs)
    if (c != 0) return false;
  return true;
}

std::vector<u32> RingCtx::crt(const Elem& a) const {
  std::vector<u32> out;
  out.reserve(s_);
  for (u32 x : points_) {
    u32 acc = 0;
    for (u32 i = s_; i-- > 0;) acc = zq_.add(zq_.mul(acc, x), a.coeffs[i]);
    out.push_back(acc);
  }
  return out;
}

RingElt RingCtx::from_crt(std::span<const u32> values) const {
  if (values.size() != s_) throw Error(Errc::InvalidArgument, "CRT vector has the wrong length");
  RingElt r = zero();
  for (u32 k = 0; k < s_; ++k) {
    if (values[k] == 0) continue;
    for (u32 i = 0; i < s_; ++i) r.coeffs[i] = zq_.add(r.coeffs[i], zq_.mul(values[k], eta_[k].coeffs[i]));
  }
  return r;
}

bool RingCtx::is_unit(const Elem& a) const {
  for (u32 c : crt(a))
    if (c == 0) return false;
  return true;
}

RingElt RingCtx::inv(const Elem& a) const {
  auto values = crt(a);
  for (u32& c : values) {
    if (c == 0) throw Error(Errc::DivisionByZero, "inverse of a zero divisor in R");
    c = zq_.inv(c);
  }
  return from_crt(values);
}

RingCtx make_ring(const FieldCtx& base, u32 s) {
  if (base.degree() != 1) throw Error(Errc::InvalidArgument, "the ring is built over a prime field");
  const u32 q = base.characteristic();
  if (s < 2 || (q - 1) % (s - 1) != 0)
    throw Error(Errc::IncompatibleS, "s = " + std::to_string(s) + " requires (s-1) | (q-1) = " + std::to_string(q - 1));

  RingCtx ring(base.base(), s);
  const Zq& zq = ring.zq_;
  const u32 alpha = base.primitive_element().coords[0];
  ring.zeta_ = zq.pow(alpha, (q - 1) / (s - 1));
  if (order_mod(ring.zeta_, q) != s - 1) throw Error(Errc::Internal, "zeta does not have order s-1");

  // eta_0 = 1 - v^{s-1}
  RingElt eta0 = ring.zero();
  eta0.coeffs[0] = 1;
  eta0.coeffs[s - 1] = zq.sub(eta0.coeffs[s - 1], 1);
  ring.eta_.push_back(eta0);
  ring.points_.push_back(0);

  const u32 inv_s1 = zq.inv(zq.from_int(s - 1));
  for (u32 j = 0; j + 1 < s; ++j) {
    RingElt e = ring.zero();
    const u32 zj = zq.pow(ring.zeta_, j);
    u32 power = zj;
    for (u32 k = 1; k + 1 < s; ++k) {
      e.coeffs[k] = zq.mul(inv_s1, power);
      power = zq.mul(power, zj);
    }
    e.coeffs[s - 1] = zq.add(e.coeffs[s - 1], inv_s1);
    ring.eta_.push_back(std::move(e));
    ring.points_.push_back(zq.inv(zj));
  }

  RingElt total = ring.zero();
  for (u32 i = 0; i < s; ++i) {
    total = ring.add(total, ring.eta_[i]);
    for (u32 j = 0; j < s; ++j) {
      const auto prod = ring.mul(ring.eta_[i], ring.eta_[j]);
      if (prod != (i == j ? ring.eta_[i] : ring.zero()))
        throw Error(Errc::Internal, "eta idempotents are not orthogonal");
    }
  }
  if (total != ring.one()) throw Error(Errc::Internal, "eta idempotents do not sum to 1");
  return ring;
}

PolyR lift(const RingCtx& ring, const PolyFq& f) {
  std::vector<RingElt> v;
  v.reserve(f.size());
  for (u32 c : f.coeffs()) v.push_back(ring.from_base(c));
  return PolyR(std::move(v));
}

PolyR combine(const RingCtx& ring, std::span<const PolyFq> comps) {
  if (comps.size() != ring.s()) throw Error(Errc::InvalidArgument, "need exactly s components");
  std::size_t len = 0;
  for (const auto& f : comps) len = std::max(len, f.size());
  std::vector<RingElt> v;
  v.reserve(len);
  std::vector<u32> values(ring.s());
  for (std::size_t j = 0; j < len; ++j) {
    for (u32 k = 0; k < ring.s(); ++k) values[k] = comps[k].coeff(ring.base(), j);
    v.push_back(ring.from_crt(values));
  }
  return PolyR(std::move(v));
}

std::vector<PolyFq> components(const RingCtx& ring, const PolyR& f) {
  std::vector<std::vector<u32>> cols(ring.s(), std::vector<u32>(f.size()));
  for (std::size_t j = 0; j < f.size(); ++j) {
    const auto values = ring.crt(f.coeffs()[j]);
    for (u32 k = 0; k < ring.s(); ++k) cols[k][j] = values[k];
  }
  std::vector<PolyFq> out;
  out.reserve(ring.s());
  for (auto& c : cols) out.emplace_back(std::move(c));
  return out;
}

std::string format_ring_elt(const RingElt& a) {
  std::string out;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    const u32 c = a.coeffs[i];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += i == 1 ? "v" : "v^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::string format_ring_poly(const PolyR& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto& c = f.coeffs()[i];
    if (RingCtx::is_zero(c)) continue;
    if (!out.empty()) out += '+';
    std::string coeff = format_ring_elt(c);
    const bool compound = coeff.find('+') != std::string::npos;
    if (i == 0) {
      out += coeff;
      continue;
    }
    if (coeff != "1") out += (compound ? "(" + coeff + ")" : coeff) + "*";
    out += i == 1 ? "x" : "x^" + std::to_string(i);
  }
  return out;
}

bool RingCode::free() const {
  for (const auto& c : components)
    if (c.dimension() != components.front().dimension()) return false;
  return true;
}

RingCode make_ring_code(const RingCtx& ring, const FieldFamilies& fam, Family family, std::span<const u32> slots) {
  if (slots.size() != ring.s())
    throw Error(Errc::BadSlotIndex, "expected " + std::to_string(ring.s()) + " slot indices, got " +
                                        std::to_string(slots.size()));
  if (ring.q() != fam.q()) throw Error(Errc::InvalidArgument, "ring and code families use different q");
  const auto& codes = fam.family(family);
  RingCode code;
  code.family = family;
  code.slots.assign(slots.begin(), slots.end());
  std::vector<PolyFq> idems, gens;
  for (u32 i : slots) {
    if (i >= codes.size())
      throw Error(Errc::BadSlotIndex, "slot index " + std::to_string(i) + " outside [0, " +
                                          std::to_string(codes.size()) + ")");
    code.components.push_back(codes[i]);
    idems.push_back(codes[i].idempotent);
    gens.push_back(codes[i].generator);
  }
  code.idempotent = combine(ring, idems);
  code.generator = combine(ring, gens);
  return code;
}

RingCode ring_even_like_I(const RingCtx& ring, const FieldFamilies& fam, std::span<const u32> slots) {
  return make_ring_code(ring, fam, Family::EvenI, slots);
}

namespace {

const RingCode& require_even(const RingCode& code) {
  if (code.family != Family::EvenI)
    throw Error(Errc::InvalidArgument, "expected an even-like class-I ring code");
  return code;
}

RingCode checked(RingCode built, const PolyR& expected, const char* what) {
  if (built.idempotent != expected) throw Error(Errc::Internal, std::string(what) + " disagrees with its components");
  return built;
}

}  // namespace

RingCode ring_odd_like_I(const RingCtx& ring, const FieldFamilies& fam, const RingCode& even) {
  const auto& e = require_even(even);
  const auto expected = sub(ring, constant(ring, ring.one()), e.idempotent);
  return checked(make_ring_code(ring, fam, Family::OddI, e.slots), expected, "1 - E");
}

RingCode ring_even_like_II(const RingCtx& ring, const FieldFamilies& fam, const RingCode& even) {
  const auto& e = require_even(even);
  const auto j = lift(ring, repetition_idempotent(fam.zq, fam.p()));
  const auto expected = sub(ring, sub(ring, constant(ring, ring.one()), j), e.idempotent);
  return checked(make_ring_code(ring, fam, Family::EvenII, e.slots), expected, "1 - j - E");
}

RingCode ring_odd_like_II(const RingCtx& ring, const FieldFamilies& fam, const RingCode& even) {
  const auto& e = require_even(even);
  const auto j = lift(ring, repetition_idempotent(fam.zq, fam.p()));
  const auto expected = add(ring, j, e.idempotent);
  return checked(make_ring_code(ring, fam, Family::OddII, e.slots), expected, "j + E");
}

std::vector<RingCode> ring_mu_chain(const RingCtx& ring, const FieldFamilies& fam, const RingCode& code, u32 a) {
  const auto& sys = fam.sys;
  const auto j = sys.class_of(a);
  if (!j) throw Error(Errc::NotCoprime, "multiplier must be coprime to p");
  if (std::gcd(*j, sys.m()) != 1)
    throw Error(Errc::MultiplierNotCyclic, "multiplier " + std::to_string(a) + " lies in Q_" + std::to_string(*j) +
                                               " and gcd(" + std::to_string(*j) + ", m) != 1");
  std::vector<RingCode> orbit{code};
  while (true) {
    const RingCode& cur = orbit.back();
    std::vector<u32> slots;
    for (u32 i : cur.slots) slots.push_back((i + *j) % sys.m());
    if (slots == code.slots) break;
    const auto moved = apply_mu(ring, sys.p(), a, cur.idempotent);
    orbit.push_back(checked(make_ring_code(ring, fam, code.family, slots), moved, "mu_a(E)"));
  }
  return orbit;
}

}  // namespace madic
