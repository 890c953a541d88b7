#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "madic/cyclic.hpp"
#include "madic/residue.hpp"

namespace madic {

enum class Family { EvenI, OddI, EvenII, OddII };

std::string_view family_name(Family f) noexcept;  // "even-I", ...
std::optional<Family> parse_family(std::string_view name) noexcept;

/// Cyclic code of prime length p over F_q, carried with both its generator
/// polynomial and its idempotent generator.
struct CyclicCode {
  u32 q = 0;
  u32 p = 0;
  Family family = Family::EvenI;
  u32 index = 0;
  PolyFq generator;
  PolyFq idempotent;

  u32 dimension() const { return p - static_cast<u32>(generator.degree().value_or(p)); }
};

/// All four m-adic residue code families of length p over F_q for one residue
/// system and one choice of primitive p-th root alpha.
struct FieldFamilies {
  ResidueSystem sys;
  Zq zq;
  Splitting splitting;
  std::vector<CyclicCode> even_I;   ///< g_i = (x^p-1)/prod_{k in Q_i}(x - alpha^k)
  std::vector<CyclicCode> odd_I;    ///< complements: prod_{k in Q_i}(x - alpha^k)
  std::vector<CyclicCode> even_II;  ///< (x-1) times the odd-like class-I generator
  std::vector<CyclicCode> odd_II;   ///< g_i / (x-1)

  u32 p() const noexcept { return sys.p(); }
  u32 q() const noexcept { return zq.modulus(); }
  const std::vector<CyclicCode>& family(Family f) const;
};

/// Builds every family. Requires gcd(p, q) = 1 and q in Q_0.
FieldFamilies build_field_families(const ResidueSystem& sys, const FieldCtx& base, u32 root_power = 1);

std::vector<CyclicCode> even_like_I(const ResidueSystem& sys, const FieldCtx& base, u32 root_power = 1);
std::vector<CyclicCode> odd_like_I(const ResidueSystem& sys, const FieldCtx& base, u32 root_power = 1);
std::vector<CyclicCode> even_like_II(const ResidueSystem& sys, const FieldCtx& base, u32 root_power = 1);
std::vector<CyclicCode> odd_like_II(const ResidueSystem& sys, const FieldCtx& base, u32 root_power = 1);

/// The all-ones polynomial h = 1 + x + ... + x^{p-1}.
PolyFq all_ones_h(const Zq& zq, u32 p);
/// p^{-1} h, the idempotent of the repetition code; equals h iff p = 1 (mod q).
PolyFq repetition_idempotent(const Zq& zq, u32 p);

}  // namespace madic
