#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "madic/field_codes.hpp"
#include "madic/ring.hpp"

namespace madic {

inline constexpr u64 kDefaultCap = u64{1} << 24;

struct DistanceReport {
  u32 n = 0;
  /// Dimension of each component (a single entry for a field code).
  std::vector<u32> ranks;
  u32 d_min = 0;  ///< 0 only for the zero code
  /// Weight distribution A_0..A_n of the enumeration behind d_min; empty when
  /// d_min was taken as a minimum over components.
  std::vector<u64> weight_distribution;
  std::string method;  ///< "exhaustive" or "component-min"
  u64 enumerated = 0;
  /// Ring codes: distance from full enumeration over all component messages,
  /// absent when the enumeration exceeds the cap.
  std::optional<u32> exhaustive_d;
  std::optional<u64> exhaustive_enumerated;

  /// The common component rank, if all components agree.
  std::optional<u32> free_rank() const;
};

/// q^k, or nullopt on overflow past cap.
std::optional<u64> message_count(u64 q, u64 k, u64 cap);

/// Exhaustive weight distribution A_0..A_n of <generator> with n = p, built
/// from the messages times the cyclic-shift generator matrix.
std::vector<u64> weight_enumerator(const Zq& zq, const PolyFq& generator, u32 n, u64 cap = kDefaultCap);

DistanceReport min_distance_field(const Zq& zq, const PolyFq& generator, u32 n, u64 cap = kDefaultCap);
DistanceReport min_distance_field(const CyclicCode& code, u64 cap = kDefaultCap);

/// Full enumeration of the R-code sum_k eta_k <g_k> with arithmetic in the
/// v-basis of R; returns its weight distribution.
std::vector<u64> ring_weight_enumerator(const RingCtx& ring, std::span<const PolyFq> component_generators, u32 n,
                                        u64 cap = kDefaultCap);

/// Minimum over components; also cross-checks by full enumeration when the
/// product of component message counts fits under the cap.
DistanceReport min_distance_ring(const RingCtx& ring, std::span<const PolyFq> component_generators, u32 n,
                                 u64 cap = kDefaultCap);
DistanceReport min_distance_ring(const RingCtx& ring, const RingCode& code, u32 n, u64 cap = kDefaultCap);

struct GriesmerResult {
  u64 bound_n = 0;  ///< sum_{i<k} ceil(d / q^i)
  bool attained = false;
};

GriesmerResult griesmer_check(u64 n, u64 k, u64 d, u64 q);

}  // namespace madic
