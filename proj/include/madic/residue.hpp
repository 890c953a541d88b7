#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "madic/field.hpp"
#include "madic/poly.hpp"

namespace madic {

/// The m-adic residue classes modulo a prime p:
///   Q_0 = { x^m mod p }, Q_i = b^i Q_0,
/// together with the multiplier a used to cycle the classes.
class ResidueSystem {
 public:
  u32 p() const noexcept { return p_; }
  u32 m() const noexcept { return m_; }
  u32 b() const noexcept { return b_; }
  u32 a() const noexcept { return a_; }
  /// j with a in Q_j.
  u32 a_class_index() const noexcept { return a_class_; }

  /// Sorted class Q_i.
  const std::vector<u32>& cls(std::size_t i) const { return classes_.at(i); }
  const std::vector<std::vector<u32>>& classes() const noexcept { return classes_; }
  std::size_t class_size() const noexcept { return (p_ - 1) / m_; }

  /// Index i with x in Q_i, or nullopt when x = 0 mod p.
  std::optional<u32> class_of(u64 x) const;
  bool is_madic_residue(u64 x) const { return class_of(x) == 0u; }

 private:
  u32 p_ = 0, m_ = 0, b_ = 0, a_ = 0, a_class_ = 0;
  std::vector<std::vector<u32>> classes_;
  std::vector<u32> class_of_;  // indexed by residue, class_of_[0] unused

  friend ResidueSystem build_residue_system(u32, u32, std::optional<u32>, std::optional<u32>);
};

/// Defaults: b is the smallest primitive root mod p and a the smallest element
/// of Q_1.
ResidueSystem build_residue_system(u32 p, u32 m, std::optional<u32> b = std::nullopt,
                                   std::optional<u32> a = std::nullopt);

/// Multiplier on exponents: x -> a*x mod p, elementwise, result sorted.
std::vector<u32> apply_mu(u32 p, u32 a, const std::vector<u32>& exponents);

/// Multiplier on a polynomial of R[x]/(x^p - 1) viewed as a coordinate vector:
/// the new coefficient at i is the old coefficient at a*i mod p, i.e.
/// f(x) -> f(x^{a^{-1}}). Under this action the code with nonzeros Q_i is sent
/// to the code with nonzeros a*Q_i = Q_{i+j}.
template <class R>
Poly<R> apply_mu(const R& ring, u32 p, u32 a, const Poly<R>& f) {
  if (gcd_u64(a % p, p) != 1) throw Error(Errc::NotCoprime, "multiplier must be coprime to p");
  const auto reduced = mod_xn_minus_1(ring, f, p);
  std::vector<typename R::Elem> v(p, ring.zero());
  for (u32 i = 0; i < p; ++i) {
    const auto src = static_cast<std::size_t>(static_cast<u64>(a) * i % p);
    v[i] = reduced.coeff(ring, src);
  }
  return Poly<R>(std::move(v));
}

}  // namespace madic
