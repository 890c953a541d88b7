#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "madic/error.hpp"

namespace madic {

/// Dense univariate polynomial over a coefficient ring R, ascending degree.
/// R supplies Elem plus zero/one/add/sub/neg/mul/inv/is_unit and a static
/// is_zero. Trailing zeros are always trimmed, so the zero polynomial has no
/// stored coefficients and no degree.
template <class R>
class Poly {
 public:
  using Elem = typename R::Elem;

  Poly() = default;
  explicit Poly(std::vector<Elem> coeffs) : c_(std::move(coeffs)) { trim(); }

  const std::vector<Elem>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  std::optional<std::size_t> degree() const noexcept {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
  }
  /// Number of stored coefficients (degree + 1, or 0 for the zero polynomial).
  std::size_t size() const noexcept { return c_.size(); }
  const Elem& leading() const { return c_.back(); }

  Elem coeff(const R& ring, std::size_t i) const { return i < c_.size() ? c_[i] : ring.zero(); }

  bool operator==(const Poly&) const = default;

 private:
  void trim() {
    while (!c_.empty() && R::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<Elem> c_;
};

template <class R>
Poly<R> constant(const R&, typename R::Elem c) {
  return Poly<R>({std::move(c)});
}

template <class R>
Poly<R> monomial(const R& ring, typename R::Elem c, std::size_t k) {
  std::vector<typename R::Elem> v(k + 1, ring.zero());
  v[k] = std::move(c);
  return Poly<R>(std::move(v));
}

/// x^n - 1.
template <class R>
Poly<R> xn_minus_one(const R& ring, std::size_t n) {
  std::vector<typename R::Elem> v(n + 1, ring.zero());
  v[0] = ring.neg(ring.one());
  v[n] = ring.add(v[n], ring.one());
  return Poly<R>(std::move(v));
}

/// 1 + x + ... + x^{n-1}.
template <class R>
Poly<R> all_ones(const R& ring, std::size_t n) {
  return Poly<R>(std::vector<typename R::Elem>(n, ring.one()));
}

template <class R>
Poly<R> add(const R& ring, const Poly<R>& a, const Poly<R>& b) {
  std::vector<typename R::Elem> v(std::max(a.size(), b.size()), ring.zero());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = a.coeffs()[i];
  for (std::size_t i = 0; i < b.size(); ++i) v[i] = ring.add(v[i], b.coeffs()[i]);
  return Poly<R>(std::move(v));
}

template <class R>
Poly<R> neg(const R& ring, const Poly<R>& a) {
  std::vector<typename R::Elem> v;
  v.reserve(a.size());
  for (const auto& c : a.coeffs()) v.push_back(ring.neg(c));
  return Poly<R>(std::move(v));
}

template <class R>
Poly<R> sub(const R& ring, const Poly<R>& a, const Poly<R>& b) {
  return add(ring, a, neg(ring, b));
}

template <class R>
Poly<R> scale(const R& ring, const typename R::Elem& c, const Poly<R>& a) {
  std::vector<typename R::Elem> v;
  v.reserve(a.size());
  for (const auto& x : a.coeffs()) v.push_back(ring.mul(c, x));
  return Poly<R>(std::move(v));
}

template <class R>
Poly<R> mul(const R& ring, const Poly<R>& a, const Poly<R>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<typename R::Elem> v(a.size() + b.size() - 1, ring.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (R::is_zero(a.coeffs()[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      v[i + j] = ring.add(v[i + j], ring.mul(a.coeffs()[i], b.coeffs()[j]));
  }
  return Poly<R>(std::move(v));
}

/// Quotient and remainder with deg(remainder) < deg(divisor). The divisor's
/// leading coefficient must be a unit of R.
template <class R>
std::pair<Poly<R>, Poly<R>> divmod(const R& ring, const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  if (!ring.is_unit(b.leading()))
    throw Error(Errc::NonUnitLeadingCoefficient, "divisor leading coefficient is not a unit");
  if (a.size() < b.size()) return {Poly<R>{}, a};
  const auto lead_inv = ring.inv(b.leading());
  std::vector<typename R::Elem> rem = a.coeffs();
  std::vector<typename R::Elem> quo(a.size() - b.size() + 1, ring.zero());
  for (std::size_t d = quo.size(); d-- > 0;) {
    const auto c = ring.mul(rem[d + b.size() - 1], lead_inv);
    quo[d] = c;
    if (R::is_zero(c)) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      rem[d + j] = ring.sub(rem[d + j], ring.mul(c, b.coeffs()[j]));
  }
  rem.resize(b.size() - 1);
  return {Poly<R>(std::move(quo)), Poly<R>(std::move(rem))};
}

template <class R>
Poly<R> mod(const R& ring, const Poly<R>& a, const Poly<R>& b) {
  return divmod(ring, a, b).second;
}

/// Reduction modulo x^n - 1: coefficient i folds onto i mod n.
template <class R>
Poly<R> mod_xn_minus_1(const R& ring, const Poly<R>& a, std::size_t n) {
  if (a.size() <= n) return a;
  std::vector<typename R::Elem> v(n, ring.zero());
  for (std::size_t i = 0; i < a.size(); ++i) v[i % n] = ring.add(v[i % n], a.coeffs()[i]);
  return Poly<R>(std::move(v));
}

/// Product in R[x]/(x^n - 1).
template <class R>
Poly<R> cyclic_mul(const R& ring, const Poly<R>& a, const Poly<R>& b, std::size_t n) {
  const auto ar = mod_xn_minus_1(ring, a, n);
  const auto br = mod_xn_minus_1(ring, b, n);
  if (ar.is_zero() || br.is_zero()) return {};
  std::vector<typename R::Elem> v(n, ring.zero());
  for (std::size_t i = 0; i < ar.size(); ++i) {
    if (R::is_zero(ar.coeffs()[i])) continue;
    for (std::size_t j = 0; j < br.size(); ++j) {
      const std::size_t k = (i + j) % n;
      v[k] = ring.add(v[k], ring.mul(ar.coeffs()[i], br.coeffs()[j]));
    }
  }
  return Poly<R>(std::move(v));
}

template <class R>
typename R::Elem evaluate(const R& ring, const Poly<R>& a, const typename R::Elem& x) {
  auto acc = ring.zero();
  for (std::size_t i = a.size(); i-- > 0;) acc = ring.add(ring.mul(acc, x), a.coeffs()[i]);
  return acc;
}

template <class R>
Poly<R> make_monic(const R& ring, const Poly<R>& a) {
  if (a.is_zero()) return a;
  return scale(ring, ring.inv(a.leading()), a);
}

/// base^exp mod modulus.
template <class R>
Poly<R> powmod(const R& ring, Poly<R> base, unsigned long long exp, const Poly<R>& modulus) {
  Poly<R> result = mod(ring, constant(ring, ring.one()), modulus);
  base = mod(ring, base, modulus);
  while (exp > 0) {
    if (exp & 1ULL) result = mod(ring, mul(ring, result, base), modulus);
    base = mod(ring, mul(ring, base, base), modulus);
    exp >>= 1;
  }
  return result;
}

template <class R>
struct GcdExt {
  Poly<R> g;  ///< monic gcd
  Poly<R> u;  ///< g = u*a + w*b
  Poly<R> w;
};

/// Extended Euclid over a field.
template <class R>
GcdExt<R> gcd_ext(const R& ring, const Poly<R>& a, const Poly<R>& b) {
  if (a.is_zero() && b.is_zero()) throw Error(Errc::BothZero, "gcd of two zero polynomials");
  Poly<R> r0 = a, r1 = b;
  Poly<R> s0 = constant(ring, ring.one()), s1;
  Poly<R> t0, t1 = constant(ring, ring.one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(ring, r0, r1);
    r0 = std::exchange(r1, std::move(r));
    s0 = std::exchange(s1, sub(ring, s0, mul(ring, q, s1)));
    t0 = std::exchange(t1, sub(ring, t0, mul(ring, q, t1)));
  }
  const auto inv = ring.inv(r0.leading());
  return {scale(ring, inv, r0), scale(ring, inv, s0), scale(ring, inv, t0)};
}

template <class R>
Poly<R> gcd(const R& ring, const Poly<R>& a, const Poly<R>& b) {
  return gcd_ext(ring, a, b).g;
}

}  // namespace madic
