#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "socs/society.hpp"

namespace socs {

/// Parameters for seeded random societies. Reproducible across platforms:
/// the generator draws from std::mt19937_64 (a fully specified engine) and
/// maps to bounded integers by rejection sampling, never through
/// platform-dependent distributions.
struct RandomSpec {
  std::vector<Axis> spectrum;
  int n = 1;
  /// Per-axis inclusive (min, max) approval-set size range; must fit the
  /// axis (length <= circumference on circles).
  std::vector<std::pair<Rat, Rat>> size_range;
  std::uint64_t seed = 0;
};

/// Built-in example societies used as fixtures throughout the tests:
///   fig1   five meeting-planning rectangles (2-box)
///   fig2   six intervals, agreement number 4 (linear)
///   fig3   three pairwise-intersecting arcs, agreement number 2 (circular)
///   fig5   five wrapped squares on a 5x5 torus, agreement number 2
///   cyl-ex the fig3 arcs crossed with a shared unit interval (cylindrical)
/// Throws ValidationError on an unknown id.
Society fixture(const std::string& id);

/// The uniform toroidal family: n congruent squares with corners evenly
/// spaced along a fixed diagonal path. For n = 4l+1, squares of side n on a
/// torus of circumference 2n with lower-left corners (2i, 4i mod 2n); for
/// other n, the construction for the next 4l+1 truncated to its first n
/// voters. Always (2,2)-agreeable with agreement number ceil((n-1)/4) + 1.
Society uniform_toroidal(int n);

/// Disjoint bands along the first axis, each holding `per_stratum` equally
/// rotated arcs of length `arc_length_fraction` of the second-axis circle.
/// The default fraction 5/9 with five arcs per stratum gives per-stratum
/// agreement 3. `kind` selects Cylindrical or Toroidal; the fraction must be
/// at least floor(p/2)/p so arcs within a stratum pairwise intersect.
Society stratified(SocietyKind kind, int strata, int per_stratum,
                   const Rat& arc_length_fraction = Rat(5, 9));

/// Deterministic from the seed: per voter per axis, the start is drawn from
/// the lattice of multiples of 1/1000 (scaled by the circumference on
/// circles) and the length uniformly from the 1/1000 lattice within the size
/// range.
Society random_society(const RandomSpec& spec);

}  // namespace socs
