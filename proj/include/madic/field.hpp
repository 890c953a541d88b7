#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace madic {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

// Small-integer number theory. Inputs are desk-scale, so trial division is fine.
bool is_prime(u64 n);
std::vector<u64> distinct_prime_factors(u64 n);
u64 pow_mod(u64 base, u64 exp, u64 mod);
u64 gcd_u64(u64 a, u64 b);
/// Least k >= 1 with a^k = 1 (mod n). Requires gcd(a, n) = 1, n >= 2.
u64 order_mod(u64 a, u64 n);
/// Smallest g in [1, p) generating (Z/p)^*. p must be prime.
u32 smallest_primitive_root(u32 p);
bool is_primitive_root(u64 g, u64 p);

/// The prime field Z/q with elements held as reduced integers in [0, q).
class Zq {
 public:
  using Elem = u32;

  explicit Zq(u32 q);

  u32 modulus() const noexcept { return q_; }

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return 1; }
  Elem from_int(std::int64_t v) const noexcept;

  Elem add(Elem a, Elem b) const noexcept {
    const u32 s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  Elem sub(Elem a, Elem b) const noexcept { return a >= b ? a - b : a + q_ - b; }
  Elem neg(Elem a) const noexcept { return a == 0 ? 0 : q_ - a; }
  Elem mul(Elem a, Elem b) const noexcept { return static_cast<Elem>(static_cast<u64>(a) * b % q_); }
  Elem inv(Elem a) const;
  Elem pow(Elem a, u64 e) const noexcept { return static_cast<Elem>(pow_mod(a, e, q_)); }

  static bool is_zero(Elem a) noexcept { return a == 0; }
  bool is_unit(Elem a) const noexcept { return a != 0; }

  bool operator==(const Zq&) const = default;

 private:
  u32 q_;
};

/// Element of F_{q^t}: coordinates over the power basis 1, y, ..., y^{t-1},
/// each reduced into [0, q).
struct FieldElt {
  std::vector<u32> coords;

  bool operator==(const FieldElt&) const = default;
  auto operator<=>(const FieldElt&) const = default;
};

/// F_{q^t} = F_q[y]/(modulus) with a fixed canonical modulus and primitive
/// element. Immutable after construction.
class FieldCtx {
 public:
  using Elem = FieldElt;

  u32 characteristic() const noexcept { return q_; }
  unsigned degree() const noexcept { return t_; }
  /// Number of elements q^t.
  u64 size() const noexcept { return size_; }
  /// Monic modulus, ascending coefficients, length t+1. For t = 1 this is y.
  const std::vector<u32>& modulus() const noexcept { return modulus_; }
  const FieldElt& primitive_element() const noexcept { return primitive_; }
  Zq base() const { return Zq(q_); }

  Elem zero() const { return FieldElt{std::vector<u32>(t_, 0)}; }
  Elem one() const;
  Elem from_base(u32 c) const;
  /// Decodes the integer index sum c_i q^i into an element.
  Elem from_index(u64 index) const;
  u64 to_index(const Elem& a) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem pow(Elem a, u64 e) const;

  static bool is_zero(const Elem& a) noexcept;
  bool is_unit(const Elem& a) const noexcept { return !is_zero(a); }
  /// Returns the base-field value if a lies in F_q.
  bool in_base(const Elem& a) const noexcept;

  u64 multiplicative_order(const Elem& a) const;

  bool operator==(const FieldCtx& o) const {
    return q_ == o.q_ && t_ == o.t_ && modulus_ == o.modulus_ && primitive_ == o.primitive_;
  }

 private:
  FieldCtx(u32 q, unsigned t, std::vector<u32> modulus);
  void reduce(std::vector<u32>& product) const;

  u32 q_;
  unsigned t_;
  u64 size_;
  std::vector<u32> modulus_;
  FieldElt primitive_;

  friend FieldCtx make_prime_field(u32 q);
  friend FieldCtx make_extension(u32 base_q, unsigned t);
};

FieldCtx make_prime_field(u32 q);
/// Builds F_{q^t} on the smallest monic irreducible of degree t (coefficient
/// tuples compared constant term first); the primitive element is the smallest
/// generator under the same ordering.
FieldCtx make_extension(u32 base_q, unsigned t);

/// Largest field size accepted by make_extension.
inline constexpr u64 kMaxFieldSize = u64{1} << 31;

}  // namespace madic
