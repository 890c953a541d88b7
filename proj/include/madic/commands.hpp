#pragma once

#include <optional>
#include <string>
#include <vector>

#include "madic/analysis.hpp"
#include "madic/serialize.hpp"

namespace madic {

/// Parameters of one job. Unset optionals take the canonical defaults, which
/// are echoed back in every report.
struct JobParams {
  std::optional<u32> q, p, m, s, b, a;
  u32 index = 0;
  u32 root_power = 1;
  std::string family = "even-I";
  std::vector<u32> slots;  ///< empty: (0, 1, ..., s-1) mod m
  u64 cap = kDefaultCap;
  std::optional<std::string> generator;  ///< field generator in text form
  std::optional<std::string> document;   ///< exported JSON to re-analyze
  std::optional<u64> n, k, d;
};

struct Report {
  json data;
  std::string text;
  bool success = true;  ///< false when verify-paper has a failing check
};

Report cmd_classes(const JobParams& job);
Report cmd_field_code(const JobParams& job);
Report cmd_ring_code(const JobParams& job);
/// Distance of a field code (q and p plus a generator, or a family code), a
/// ring code (s given), or an exported code document.
Report cmd_distance(const JobParams& job);
Report cmd_griesmer(const JobParams& job);
Report cmd_export(const JobParams& job);
Report cmd_verify_paper(const JobParams& job);

/// Dispatches on the verb name; throws InvalidArgument for unknown verbs.
Report run_command(const std::string& verb, const JobParams& job);

}  // namespace madic
