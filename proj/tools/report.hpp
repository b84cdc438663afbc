#pragma once

#include <optional>
#include <string>
#include <vector>

#include "socs/agreement.hpp"
#include "socs/bounds.hpp"
#include "socs/society.hpp"

namespace socs::cli {

/// Everything `socs analyze` reports about one society. The JSON and table
/// renderings carry identical numbers; timing is written to stderr by the
/// command itself so both forms stay byte-stable.
struct AnalysisReport {
  SocietyKind kind;
  std::size_t size = 0;
  AgreementResult agreement;
  CliqueResult clique;
  std::optional<int> k;
  std::optional<int> m;
  std::optional<AgreeabilityResult> agreeability;
  std::vector<BoundReport> bounds;
};

AnalysisReport build_report(const Society& s, std::optional<int> k, std::optional<int> m,
                            const SubsetBudget& budget);

std::string to_json(const AnalysisReport& report);
std::string to_table(const AnalysisReport& report);

std::string bounds_to_json(const std::vector<BoundReport>& reports);
std::string bounds_to_table(const std::vector<BoundReport>& reports);

}  // namespace socs::cli
