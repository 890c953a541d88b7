#pragma once

#include <optional>
#include <string>
#include <vector>

#include "madic/field.hpp"

namespace madic {

struct Check {
  std::string id;
  std::string description;
  bool passed = false;
  std::string detail;
};

/// A printed reference value that the independent computation contradicts.
struct Erratum {
  std::string id;
  std::string printed;
  std::string computed;
  std::string verification;  ///< how the computed value was obtained
};

struct VerifyReport {
  std::vector<Check> checks;
  std::vector<Erratum> errata;

  bool ok() const;
};

/// One point of the identity grid. The multiplier defaults to the smallest
/// element of Q_1.
struct GridPoint {
  u32 q, p, m, s;
  std::optional<u32> a;
};

const std::vector<GridPoint>& identity_grid();
/// q in Q_0, m | p-1, (s-1) | (q-1).
bool grid_point_valid(const GridPoint& g);
std::string grid_point_label(const GridPoint& g);

/// Runs the built-in reproduction of the published worked examples plus the
/// identity, distance and structure checks over the grid.
VerifyReport verify_reference_examples();

}  // namespace madic
