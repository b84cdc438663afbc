#include "socs/agreement.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "socs/errors.hpp"

namespace socs {

AgreementGraph::AgreementGraph(std::vector<std::string> names,
                               std::vector<std::vector<bool>> adjacency)
    : names_(std::move(names)), adjacency_(std::move(adjacency)) {
  if (names_.empty() || adjacency_.size() != names_.size()) {
    throw ValidationError("agreement graph shape mismatch");
  }
  for (std::size_t i = 0; i < adjacency_.size(); ++i) {
    if (adjacency_[i].size() != names_.size()) {
      throw ValidationError("agreement graph adjacency must be square");
    }
    if (adjacency_[i][i]) {
      throw ValidationError("agreement graph must not have self-loops");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (adjacency_[i][j] != adjacency_[j][i]) {
        throw ValidationError("agreement graph adjacency must be symmetric");
      }
    }
  }
}

std::size_t AgreementGraph::edge_count() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) {
      count += adjacency_[i][j] ? 1 : 0;
    }
  }
  return count;
}

namespace {

using Mask = std::vector<std::uint64_t>;

Mask empty_mask(std::size_t n) { return Mask((n + 63) / 64, 0); }

void mask_set(Mask& m, std::size_t i) { m[i >> 6] |= std::uint64_t{1} << (i & 63); }

int and_popcount(const Mask& a, const Mask& b) {
  int total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    total += std::popcount(a[i] & b[i]);
  }
  return total;
}

int mask_popcount(const Mask& a) {
  int total = 0;
  for (std::uint64_t w : a) {
    total += std::popcount(w);
  }
  return total;
}

// Per-axis candidate coordinates and the voter mask at every coordinate
// tuple, precomputed flat in row-major (lexicographic) order.
struct DepthIndex {
  std::vector<std::vector<Rat>> candidates;  // per axis, sorted unique
  std::vector<Mask> tuple_masks;             // one per tuple, lex order

  std::vector<Rat> tuple_coords(std::size_t flat) const {
    std::vector<Rat> coords(candidates.size());
    for (std::size_t a = candidates.size(); a-- > 0;) {
      coords[a] = candidates[a][flat % candidates[a].size()];
      flat /= candidates[a].size();
    }
    return coords;
  }
};

DepthIndex build_depth_index(const Society& s) {
  DepthIndex index;
  const std::size_t dims = s.dimension();
  index.candidates.resize(dims);
  std::vector<std::vector<Mask>> axis_masks(dims);
  for (std::size_t a = 0; a < dims; ++a) {
    const Axis& axis = s.axis(a);
    std::vector<Rat>& cands = index.candidates[a];
    bool has_full_circle = false;
    for (const Voter& v : s.voters()) {
      const AxisSet& f = v.box.factor(a);
      cands.push_back(f.start());
      if (axis.is_circular() && f.length() == axis.circumference()) {
        has_full_circle = true;
      }
    }
    if (has_full_circle || cands.empty()) {
      cands.push_back(Rat(0));
    }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

    axis_masks[a].reserve(cands.size());
    for (const Rat& c : cands) {
      Mask m = empty_mask(s.size());
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (contains(s.voter(i).box.factor(a), axis, c)) {
          mask_set(m, i);
        }
      }
      axis_masks[a].push_back(std::move(m));
    }
  }

  std::size_t tuple_count = 1;
  for (const auto& c : index.candidates) {
    tuple_count *= c.size();
  }
  index.tuple_masks.reserve(tuple_count);
  for (std::size_t flat = 0; flat < tuple_count; ++flat) {
    std::size_t rem = flat;
    Mask m;
    for (std::size_t a = dims; a-- > 0;) {
      const Mask& axis_mask = axis_masks[a][rem % index.candidates[a].size()];
      rem /= index.candidates[a].size();
      if (m.empty()) {
        m = axis_mask;
      } else {
        for (std::size_t w = 0; w < m.size(); ++w) {
          m[w] &= axis_mask[w];
        }
      }
    }
    index.tuple_masks.push_back(std::move(m));
  }
  return index;
}

AgreementResult result_from(const Society& s, std::vector<Rat> coords, const Mask& mask) {
  std::vector<std::string> approving;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (mask[i >> 6] & (std::uint64_t{1} << (i & 63))) {
      approving.push_back(s.voter(i).name);
    }
  }
  return AgreementResult{mask_popcount(mask), Platform(std::move(coords), s.spectrum()),
                         std::move(approving)};
}

}  // namespace

AgreementResult agreement_number(const Society& s) {
  const DepthIndex index = build_depth_index(s);
  int best = -1;
  std::size_t best_flat = 0;
  for (std::size_t flat = 0; flat < index.tuple_masks.size(); ++flat) {
    int depth = mask_popcount(index.tuple_masks[flat]);
    if (depth > best) {
      best = depth;
      best_flat = flat;
    }
  }
  return result_from(s, index.tuple_coords(best_flat), index.tuple_masks[best_flat]);
}

AgreementResult brute_force_agreement(const Society& s) {
  // Deliberately self-contained: endpoint grid plus local membership
  // arithmetic, independent of the candidate-sweep implementation.
  const std::size_t dims = s.dimension();
  std::vector<std::vector<Rat>> grid(dims);
  for (std::size_t a = 0; a < dims; ++a) {
    const Axis& axis = s.axis(a);
    for (const Voter& v : s.voters()) {
      const AxisSet& f = v.box.factor(a);
      grid[a].push_back(f.start());
      if (f.is_interval()) {
        grid[a].push_back(f.end());
      } else {
        grid[a].push_back(reduce_mod(f.start() + f.length(), axis.circumference()));
      }
    }
    std::sort(grid[a].begin(), grid[a].end());
    grid[a].erase(std::unique(grid[a].begin(), grid[a].end()), grid[a].end());
  }

  auto member = [&](std::size_t voter, std::size_t a, const Rat& p) {
    const AxisSet& f = s.voter(voter).box.factor(a);
    if (f.is_interval()) {
      return f.start() <= p && p <= f.end();
    }
    return reduce_mod(p - f.start(), s.axis(a).circumference()) <= f.length();
  };

  std::size_t tuple_count = 1;
  for (const auto& g : grid) {
    tuple_count *= g.size();
  }

  int best = -1;
  std::vector<Rat> best_coords;
  Mask best_mask;
  for (std::size_t flat = 0; flat < tuple_count; ++flat) {
    std::vector<Rat> coords(dims);
    std::size_t rem = flat;
    for (std::size_t a = dims; a-- > 0;) {
      coords[a] = grid[a][rem % grid[a].size()];
      rem /= grid[a].size();
    }
    Mask m = empty_mask(s.size());
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      bool in_all = true;
      for (std::size_t a = 0; a < dims && in_all; ++a) {
        in_all = member(i, a, coords[a]);
      }
      if (in_all) {
        mask_set(m, i);
        ++depth;
      }
    }
    if (depth > best) {
      best = depth;
      best_coords = std::move(coords);
      best_mask = std::move(m);
    }
  }
  return result_from(s, std::move(best_coords), best_mask);
}

AgreementGraph agreement_graph(const Society& s) {
  const std::size_t n = s.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (boxes_intersect(s.voter(i).box, s.voter(j).box, s.spectrum())) {
        adj[i][j] = adj[j][i] = true;
      }
    }
  }
  std::vector<std::string> names;
  names.reserve(n);
  for (const Voter& v : s.voters()) {
    names.push_back(v.name);
  }
  return AgreementGraph(std::move(names), std::move(adj));
}

namespace {

// Branch-and-bound clique machinery over adjacency bitmasks.
struct GraphBits {
  std::size_t n;
  std::vector<Mask> adj;

  explicit GraphBits(const AgreementGraph& g) : n(g.size()), adj(g.size(), empty_mask(g.size())) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && g.adjacent(i, j)) {
          mask_set(adj[i], j);
        }
      }
    }
  }

  bool edge(int u, int v) const { return adj[u][v >> 6] & (std::uint64_t{1} << (v & 63)); }
};

// Greedy-colors `p` in place (sorted by color, ascending); returns colors
// parallel to the reordered `p`. The color of a vertex bounds the largest
// clique it can top off within the preceding candidates.
std::vector<int> color_sort(const GraphBits& g, std::vector<int>& p) {
  std::vector<std::vector<int>> classes;
  for (int v : p) {
    bool placed = false;
    for (auto& cls : classes) {
      bool conflict = std::any_of(cls.begin(), cls.end(), [&](int u) { return g.edge(u, v); });
      if (!conflict) {
        cls.push_back(v);
        placed = true;
        break;
      }
    }
    if (!placed) {
      classes.push_back({v});
    }
  }
  std::vector<int> colors;
  std::vector<int> sorted;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (int v : classes[c]) {
      sorted.push_back(v);
      colors.push_back(static_cast<int>(c) + 1);
    }
  }
  p = std::move(sorted);
  return colors;
}

void expand_max_clique(const GraphBits& g, int current_size, std::vector<int> p, int& best) {
  std::vector<int> colors = color_sort(g, p);
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
    if (current_size + colors[i] <= best) {
      return;
    }
    int v = p[i];
    std::vector<int> next;
    for (int j = 0; j < i; ++j) {
      if (g.edge(v, p[j])) {
        next.push_back(p[j]);
      }
    }
    if (next.empty()) {
      best = std::max(best, current_size + 1);
    } else {
      expand_max_clique(g, current_size + 1, std::move(next), best);
    }
  }
}

bool exists_clique(const GraphBits& g, std::vector<int> p, int need) {
  if (need <= 0) {
    return true;
  }
  if (static_cast<int>(p.size()) < need) {
    return false;
  }
  std::vector<int> colors = color_sort(g, p);
  if (colors.back() < need) {
    return false;
  }
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
    if (colors[i] < need) {
      return false;
    }
    int v = p[i];
    std::vector<int> next;
    for (int j = 0; j < i; ++j) {
      if (g.edge(v, p[j])) {
        next.push_back(p[j]);
      }
    }
    if (exists_clique(g, std::move(next), need - 1)) {
      return true;
    }
  }
  return false;
}

mpz_class binomial(unsigned long n, unsigned long m) {
  mpz_class result;
  mpz_bin_uiui(result.get_mpz_t(), n, m);
  return result;
}

void check_budget(std::size_t n, int m, const SubsetBudget& budget) {
  mpz_class count = binomial(n, static_cast<unsigned long>(m));
  if (!budget.force && count > mpz_class(static_cast<unsigned long>(budget.limit))) {
    throw BudgetExceededError("subset enumeration needs " + count.get_str() +
                                  " subsets, above the budget of " + std::to_string(budget.limit),
                              count.get_d(), static_cast<double>(budget.limit));
  }
}

// Lexicographic successor of an m-combination of {0..n-1}; false at the end.
bool next_combination(std::vector<int>& combo, int n) {
  const int m = static_cast<int>(combo.size());
  for (int i = m - 1; i >= 0; --i) {
    if (combo[i] < n - m + i) {
      ++combo[i];
      for (int j = i + 1; j < m; ++j) {
        combo[j] = combo[j - 1] + 1;
      }
      return true;
    }
  }
  return false;
}

}  // namespace

CliqueResult clique_number(const AgreementGraph& g) {
  const GraphBits bits(g);
  std::vector<int> all(bits.n);
  std::iota(all.begin(), all.end(), 0);

  int best = 1;  // a single vertex is always a clique
  expand_max_clique(bits, 0, all, best);

  // Lexicographically least maximum clique: grow greedily, committing the
  // smallest vertex that still extends to a clique of the required size.
  std::vector<int> chosen;
  std::vector<int> pool = all;
  int need = best;
  while (need > 0) {
    for (std::size_t i = 0; i < pool.size(); ++i) {
      int v = pool[i];
      std::vector<int> rest;
      for (std::size_t j = i + 1; j < pool.size(); ++j) {
        if (bits.edge(v, pool[j])) {
          rest.push_back(pool[j]);
        }
      }
      if (exists_clique(bits, rest, need - 1)) {
        chosen.push_back(v);
        pool = std::move(rest);
        --need;
        break;
      }
    }
  }

  std::vector<std::string> names;
  names.reserve(chosen.size());
  for (int v : chosen) {
    names.push_back(g.names()[v]);
  }
  return CliqueResult{best, std::move(names)};
}

namespace {

void validate_km(int k, int m, std::size_t n, const char* op) {
  if (k < 1 || m < k || static_cast<std::size_t>(m) > n) {
    throw ValidationError(std::string(op) + " requires 1 <= k <= m <= " + std::to_string(n) +
                          ", got k=" + std::to_string(k) + " m=" + std::to_string(m));
  }
}

Mask combo_mask(const std::vector<int>& combo, std::size_t n) {
  Mask m = empty_mask(n);
  for (int i : combo) {
    mask_set(m, static_cast<std::size_t>(i));
  }
  return m;
}

// Maximum depth over the candidate grid restricted to the voters in `subset`.
// Complete for subsets: a maximal-depth region's binding start on each axis
// belongs to a set in the subset, and subset starts are in the grid.
int subset_agreement(const DepthIndex& index, const Mask& subset, int stop_at) {
  int best = 0;
  for (const Mask& m : index.tuple_masks) {
    best = std::max(best, and_popcount(m, subset));
    if (best >= stop_at) {
      return best;
    }
  }
  return best;
}

}  // namespace

AgreeabilityResult is_km_agreeable(const Society& s, int k, int m, const SubsetBudget& budget) {
  validate_km(k, m, s.size(), "is_km_agreeable");
  if (k == 1) {
    return AgreeabilityResult{true, std::nullopt};
  }
  check_budget(s.size(), m, budget);
  const DepthIndex index = build_depth_index(s);
  std::vector<int> combo(m);
  std::iota(combo.begin(), combo.end(), 0);
  do {
    Mask subset = combo_mask(combo, s.size());
    if (subset_agreement(index, subset, k) < k) {
      std::vector<std::string> names;
      names.reserve(combo.size());
      for (int i : combo) {
        names.push_back(s.voter(static_cast<std::size_t>(i)).name);
      }
      return AgreeabilityResult{false, std::move(names)};
    }
  } while (next_combination(combo, static_cast<int>(s.size())));
  return AgreeabilityResult{true, std::nullopt};
}

int max_k_for_m(const Society& s, int m, const SubsetBudget& budget) {
  if (m < 1 || static_cast<std::size_t>(m) > s.size()) {
    throw ValidationError("max_k_for_m requires 1 <= m <= " + std::to_string(s.size()));
  }
  check_budget(s.size(), m, budget);
  const DepthIndex index = build_depth_index(s);
  std::vector<int> combo(m);
  std::iota(combo.begin(), combo.end(), 0);
  int lowest = m;
  do {
    Mask subset = combo_mask(combo, s.size());
    lowest = std::min(lowest, subset_agreement(index, subset, lowest));
    if (lowest <= 1) {
      return 1;  // every nonempty subsociety has agreement at least 1
    }
  } while (next_combination(combo, static_cast<int>(s.size())));
  return lowest;
}

bool km_clique_property(const AgreementGraph& g, int k, int m, const SubsetBudget& budget) {
  validate_km(k, m, g.size(), "km_clique_property");
  if (k == 1) {
    return true;
  }
  check_budget(g.size(), m, budget);
  const GraphBits bits(g);
  std::vector<int> combo(m);
  std::iota(combo.begin(), combo.end(), 0);
  do {
    if (!exists_clique(bits, combo, k)) {
      return false;
    }
  } while (next_combination(combo, static_cast<int>(g.size())));
  return true;
}

}  // namespace socs
