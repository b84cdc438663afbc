#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "socs/society.hpp"

namespace socs {

/// Voters as vertices, edges between voters whose approval sets intersect.
/// Vertex order equals voter order.
class AgreementGraph {
 public:
  AgreementGraph(std::vector<std::string> names, std::vector<std::vector<bool>> adjacency);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  bool adjacent(std::size_t i, std::size_t j) const { return adjacency_[i][j]; }
  std::size_t edge_count() const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<bool>> adjacency_;
};

struct AgreementResult {
  int number;                               // a(S), always >= 1
  Platform witness;                         // a platform of maximal depth
  std::vector<std::string> witness_voters;  // the voters approving `witness`
};

struct CliqueResult {
  int number = 0;                    // omega(G)
  std::vector<std::string> witness;  // lexicographically least maximum clique
};

struct AgreeabilityResult {
  bool agreeable = false;
  // A violating m-subset (voter names) when not agreeable.
  std::optional<std::vector<std::string>> counterexample;
};

/// Cap on the number of subsets an agreeability check may enumerate.
struct SubsetBudget {
  std::uint64_t limit = 2'000'000;
  bool force = false;  // enumerate regardless of the limit
};

/// Exact agreement number: the maximum over platforms of the number of
/// approval sets containing it, with the lexicographically smallest witness.
/// Sweeps the candidate grid of per-axis set starts (plus 0 on circular axes
/// holding a full-circle arc); a maximal-depth region's infimum corner on
/// each axis is some set's start because all sets are closed.
AgreementResult agreement_number(const Society& s);

/// Independent oracle for agreement_number: evaluates depth at every tuple
/// of per-axis set endpoints (starts and ends, reduced mod L on circles)
/// with its own membership arithmetic.
AgreementResult brute_force_agreement(const Society& s);

AgreementGraph agreement_graph(const Society& s);

/// Exact maximum clique (branch and bound with greedy-coloring pruning);
/// witness is the lexicographically least maximum clique in voter order.
CliqueResult clique_number(const AgreementGraph& g);

/// Whether k out of every m voters agree on some platform: every m-subset of
/// voters must contain k whose sets share a point. k = 1 is vacuously true.
/// Enumerates subsets in lexicographic order; refuses when C(|S|, m) exceeds
/// the budget unless forced. Requires 1 <= k <= m <= |S|.
AgreeabilityResult is_km_agreeable(const Society& s, int k, int m,
                                   const SubsetBudget& budget = {});

/// The largest k for which the society is (k, m)-agreeable: the minimum over
/// m-subsets of the subsociety agreement number.
int max_k_for_m(const Society& s, int m, const SubsetBudget& budget = {});

/// Graph-level analogue: every m-subset of vertices includes a clique of
/// size k. Implied by (k, m)-agreeability but not equivalent on circles and
/// tori.
bool km_clique_property(const AgreementGraph& g, int k, int m,
                        const SubsetBudget& budget = {});

}  // namespace socs
