#pragma once

#include <span>
#include <string>
#include <vector>

#include "madic/field_codes.hpp"

namespace madic {

/// Element of R = F_q[v]/(v^s - v) over the basis 1, v, ..., v^{s-1}.
struct RingElt {
  std::vector<u32> coeffs;

  bool operator==(const RingElt&) const = default;
};

/// The ring R = F_q[v]/(v^s - v) with q = 1 (mod s-1), its orthogonal
/// idempotents eta_0..eta_{s-1} and the matching evaluation points.
///
/// eta_0 = 1 - v^{s-1} picks out evaluation at v = 0, and
/// eta_{j+1} = (s-1)^{-1} (sum_{k=1}^{s-2} zeta^{jk} v^k + v^{s-1}) picks out
/// evaluation at v = zeta^{-j}, where zeta has multiplicative order s-1.
class RingCtx {
 public:
  using Elem = RingElt;

  u32 q() const noexcept { return zq_.modulus(); }
  u32 s() const noexcept { return s_; }
  const Zq& base() const noexcept { return zq_; }
  u32 zeta() const noexcept { return zeta_; }
  const std::vector<RingElt>& eta() const noexcept { return eta_; }
  /// (0, 1, zeta^{-1}, ..., zeta^{-(s-2)}); component k is evaluation at point k.
  const std::vector<u32>& crt_points() const noexcept { return points_; }

  Elem zero() const { return RingElt{std::vector<u32>(s_, 0)}; }
  Elem one() const { return from_base(1); }
  Elem from_base(u32 c) const;
  Elem v_power(u32 k) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  /// Inverse of a unit, computed componentwise.
  Elem inv(const Elem& a) const;
  static bool is_zero(const Elem& a) noexcept;
  bool is_unit(const Elem& a) const;

  /// CRT components: a evaluated at each crt point.
  std::vector<u32> crt(const Elem& a) const;
  /// sum_k eta_k * values[k].
  Elem from_crt(std::span<const u32> values) const;

 private:
  RingCtx(Zq zq, u32 s) : zq_(zq), s_(s) {}

  Zq zq_;
  u32 s_;
  u32 zeta_ = 1;
  std::vector<RingElt> eta_;
  std::vector<u32> points_;

  friend RingCtx make_ring(const FieldCtx& base, u32 s);
};

/// Requires s >= 2 and (s-1) | (q-1); throws IncompatibleS otherwise. The
/// idempotent identities are validated before returning.
RingCtx make_ring(const FieldCtx& base, u32 s);

using PolyR = Poly<RingCtx>;

/// F_q[x] -> R[x] via the constant embedding.
PolyR lift(const RingCtx& ring, const PolyFq& f);
/// sum_k eta_k f_k, coefficientwise; components are zero padded.
PolyR combine(const RingCtx& ring, std::span<const PolyFq> components);
/// Inverse of combine: the s projections of f.
std::vector<PolyFq> components(const RingCtx& ring, const PolyR& f);

std::string format_ring_elt(const RingElt& a);
std::string format_ring_poly(const PolyR& f);

/// Code over R in the decomposition R^p = sum_k eta_k F_q^p: slot k carries the
/// field code with index slots[k] of the same family.
struct RingCode {
  Family family = Family::EvenI;
  std::vector<u32> slots;
  PolyR idempotent;
  /// Slotwise combination of the component generators, zero padded to the
  /// largest component degree. Membership is defined through the idempotent.
  PolyR generator;
  std::vector<CyclicCode> components;

  /// True when every component has the same dimension.
  bool free() const;
};

/// Builds the code of the given family whose slot k is the field code
/// fam.family(family)[slots[k]].
RingCode make_ring_code(const RingCtx& ring, const FieldFamilies& fam, Family family, std::span<const u32> slots);

/// E = sum_k eta_k e_{slots[k]} over the even-like class-I field idempotents.
RingCode ring_even_like_I(const RingCtx& ring, const FieldFamilies& fam, std::span<const u32> slots);
/// E' = 1 - E for an even-like class-I code E.
RingCode ring_odd_like_I(const RingCtx& ring, const FieldFamilies& fam, const RingCode& even);
/// D = 1 - j - E, j = p^{-1}(1 + x + ... + x^{p-1}).
RingCode ring_even_like_II(const RingCtx& ring, const FieldFamilies& fam, const RingCode& even);
/// D' = j + E.
RingCode ring_odd_like_II(const RingCtx& ring, const FieldFamilies& fam, const RingCode& even);

/// Orbit E, mu_a(E), mu_a^2(E), ... up to (excluding) the return to E. Each
/// step shifts every slot index by j, where a lies in Q_j.
std::vector<RingCode> ring_mu_chain(const RingCtx& ring, const FieldFamilies& fam, const RingCode& code, u32 a);

}  // namespace madic
