#pragma once

#include <string>
#include <vector>

#include "madic/ring.hpp"

namespace madic {

/// Which polynomial plays the role of "h" in the idempotent identities.
enum class HForm {
  AllOnes,     ///< h = 1 + x + ... + x^{p-1}, as printed
  Repetition,  ///< j = p^{-1} h, the idempotent of the repetition code
};

std::string_view hform_name(HForm form) noexcept;

struct IdentityResult {
  std::string name;       ///< stable identifier, e.g. "even.orbit-sum"
  std::string statement;  ///< human-readable form
  u64 instances = 0;      ///< number of congruences evaluated
  u64 failures = 0;
  /// Every congruence gives the same verdict when evaluated independently on
  /// each CRT component over F_q.
  bool crt_consistent = true;

  bool holds() const noexcept { return failures == 0; }
};

/// Evaluates the idempotent identities for the even-like class-I orbit
/// E_0, ..., E_{L-1} (E_{r+1} = mu_a(E_r)) and the derived families
///   E' = 1 - E,  D = 1 - h - E,  D' = h + E.
/// The orbit-sum targets are 1 - h (for E), h (product of E'), 0 (product of
/// D) and, for D', 1 - (L-1) h under HForm::AllOnes or the algebraically
/// forced 1 + (L-1) j under HForm::Repetition.
std::vector<IdentityResult> check_orbit_identities(const RingCtx& ring, u32 p, u32 a,
                                                   const std::vector<RingCode>& orbit, HForm form);

/// E = sum_k eta_k e_k is idempotent for arbitrary field idempotents e_k.
IdentityResult check_combined_idempotent(const RingCtx& ring, u32 p, const std::vector<PolyFq>& field_idempotents);

}  // namespace madic
