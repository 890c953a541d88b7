#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "madic/field.hpp"
#include "madic/poly.hpp"

namespace madic {

using PolyFq = Poly<Zq>;

/// Irreducible factor of x^p - 1 over F_q: the product of (x - alpha^k) over
/// one q-cyclotomic coset of exponents.
struct CyclotomicFactor {
  std::vector<u32> coset;  ///< sorted exponents
  PolyFq factor;           ///< monic, coefficients in F_q
};

/// Splitting data for x^p - 1 over F_q. alpha = gamma^root_power where
/// gamma = w^((q^t-1)/p) for the canonical primitive element w of F_{q^t},
/// t = ord_p(q).
struct Splitting {
  u32 q = 0;
  u32 p = 0;
  u32 root_power = 1;
  FieldCtx ext;
  FieldElt alpha;
  std::vector<CyclotomicFactor> factors;  ///< ordered by smallest coset element

  /// prod_{k in exponents} (x - alpha^k); throws QNotResidue if the result is
  /// not defined over F_q.
  PolyFq roots_product(const std::vector<u32>& exponents) const;
};

Splitting factor_xp_minus_1(const FieldCtx& base, u32 p, u32 root_power = 1);

/// Idempotent generator of the cyclic code <g> in F_q[x]/(x^p - 1), via the
/// Bezout identity u*g + w*(x^p-1)/g = 1 and e = u*g mod (x^p - 1).
PolyFq idempotent_of_cyclic(const Zq& zq, const PolyFq& g, u32 p);

/// Monic generator gcd(e, x^p - 1) of the ideal generated by e.
PolyFq generator_of_ideal(const Zq& zq, const PolyFq& e, u32 p);

/// Text form: terms joined by '+', each "c", "c*x^k", "x^k" or "x"; ascending
/// degree, zero terms dropped, unit coefficients omitted.
std::string format_poly(const PolyFq& f);
PolyFq parse_poly(const Zq& zq, std::string_view text);

}  // namespace madic
