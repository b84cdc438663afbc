#pragma once

// Test-side oracles, deliberately independent of the library's candidate
// sweeps: endpoint-grid intersection checks, exhaustive clique search, and a
// minimal XML well-formedness scan for the SVG output.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "socs/agreement.hpp"
#include "socs/axis.hpp"
#include "socs/society.hpp"

namespace socs::testing {

inline bool oracle_member(const AxisSet& set, const Axis& axis, const Rat& p) {
  if (set.is_interval()) {
    return set.start() <= p && p <= set.end();
  }
  return reduce_mod(p - set.start(), axis.circumference()) <= set.length();
}

// Endpoint grid of a family: every start and every end, reduced mod L.
inline std::vector<Rat> oracle_endpoints(const std::vector<AxisSet>& sets, const Axis& axis) {
  std::vector<Rat> points;
  for (const AxisSet& s : sets) {
    points.push_back(s.start());
    if (s.is_interval()) {
      points.push_back(s.end());
    } else {
      points.push_back(reduce_mod(s.start() + s.length(), axis.circumference()));
    }
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

inline bool oracle_has_common_point(const std::vector<AxisSet>& sets, const Axis& axis) {
  for (const Rat& p : oracle_endpoints(sets, axis)) {
    bool in_all = std::all_of(sets.begin(), sets.end(),
                              [&](const AxisSet& s) { return oracle_member(s, axis, p); });
    if (in_all) {
      return true;
    }
  }
  return false;
}

// Exhaustive maximum clique by subset enumeration; usable up to ~20 vertices.
inline int oracle_max_clique(const AgreementGraph& g) {
  const int n = static_cast<int>(g.size());
  int best = 0;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    bool clique = true;
    for (int i = 0; i < n && clique; ++i) {
      if (!(mask & (std::uint32_t{1} << i))) continue;
      for (int j = i + 1; j < n && clique; ++j) {
        if (!(mask & (std::uint32_t{1} << j))) continue;
        clique = g.adjacent(i, j);
      }
    }
    if (clique) {
      best = std::max(best, std::popcount(mask));
    }
  }
  return best;
}

// Minimal XML well-formedness check: prolog allowed, tags balanced,
// attribute values quoted. Returns an error description or nullopt.
inline std::optional<std::string> xml_defect(const std::string& text) {
  std::vector<std::string> stack;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '<') {
      ++i;
      continue;
    }
    if (text.compare(i, 2, "<?") == 0) {
      auto end = text.find("?>", i);
      if (end == std::string::npos) return "unterminated processing instruction";
      i = end + 2;
      continue;
    }
    bool closing = text.compare(i, 2, "</") == 0;
    std::size_t name_start = i + (closing ? 2 : 1);
    std::size_t j = name_start;
    while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == ':' ||
                               text[j] == '-' || text[j] == '_')) {
      ++j;
    }
    if (j == name_start) return "empty tag name at offset " + std::to_string(i);
    std::string name = text.substr(name_start, j - name_start);
    // Scan to the closing '>', checking quotes.
    bool self_closing = false;
    while (j < text.size() && text[j] != '>') {
      if (text[j] == '"') {
        j = text.find('"', j + 1);
        if (j == std::string::npos) return "unterminated attribute value in <" + name + ">";
      }
      if (text[j] == '/' && j + 1 < text.size() && text[j + 1] == '>') {
        self_closing = true;
      }
      ++j;
    }
    if (j >= text.size()) return "unterminated tag <" + name + ">";
    if (closing) {
      if (stack.empty() || stack.back() != name) return "mismatched closing tag </" + name + ">";
      stack.pop_back();
    } else if (!self_closing) {
      stack.push_back(name);
    }
    i = j + 1;
  }
  if (!stack.empty()) return "unclosed tag <" + stack.back() + ">";
  return std::nullopt;
}

}  // namespace socs::testing
