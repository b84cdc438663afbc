#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "socs/society.hpp"

namespace socs::cli {

struct ScanOptions {
  int n = 6;
  int iterations = 2000;
  std::uint64_t seed = 1;
  std::optional<int> target_a;  // defaults to floor(n/4) + 1
  std::string output_path = "scan-best.society.json";
};

struct ScanOutcome {
  int generated = 0;
  int kept = 0;  // verified (2,2)-agreeable
  int minimum_a = 0;
  int hits = 0;  // societies with a <= target
  int target_a = 0;
};

/// Searches for low-agreement (2,2)-agreeable toroidal societies of size n,
/// alternating seeded random squares with corner-jittered copies of the
/// uniform construction. Writes the best (lowest agreement) society found to
/// `output_path` and reports progress on `out`.
ScanOutcome run_scan(const ScanOptions& options, std::ostream& out);

}  // namespace socs::cli
