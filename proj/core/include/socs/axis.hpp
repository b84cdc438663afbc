#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "socs/rational.hpp"

namespace socs {

enum class AxisKind { Linear, Circular };

/// One factor of a spectrum: an unbounded line or a circle of given
/// circumference.
class Axis {
 public:
  static Axis linear() { return Axis(AxisKind::Linear, Rat(0)); }

  /// Throws ValidationError unless circumference > 0.
  static Axis circular(Rat circumference);

  AxisKind kind() const { return kind_; }
  bool is_circular() const { return kind_ == AxisKind::Circular; }

  /// Only meaningful for circular axes.
  const Rat& circumference() const;

  friend bool operator==(const Axis& a, const Axis& b) {
    return a.kind_ == b.kind_ && (a.kind_ == AxisKind::Linear || a.circumference_ == b.circumference_);
  }

 private:
  Axis(AxisKind kind, Rat circumference) : kind_(kind), circumference_(std::move(circumference)) {}

  AxisKind kind_;
  Rat circumference_;
};

/// A closed connected subset of one axis: an interval [start, end] on a line,
/// or an arc traversed counterclockwise from `start` for `length` on a
/// circle. Arcs are stored as (start, length) so that a full circle
/// (length = circumference) stays representable and wraparound is
/// unambiguous. Degenerate sets (single platform) are allowed; empty sets are
/// not constructible.
class AxisSet {
 public:
  /// Closed interval [start, end]; requires start <= end.
  static AxisSet interval(Rat start, Rat end);

  /// Closed arc on `axis`; requires 0 <= start < L and 0 <= length <= L.
  static AxisSet arc(Rat start, Rat length, const Axis& axis);

  AxisKind kind() const { return kind_; }
  bool is_interval() const { return kind_ == AxisKind::Linear; }
  bool is_arc() const { return kind_ == AxisKind::Circular; }

  const Rat& start() const { return start_; }
  /// Interval right endpoint. Only meaningful for intervals.
  const Rat& end() const;
  /// Arc length. Only meaningful for arcs.
  const Rat& length() const;

  /// Throws ValidationError unless this set is valid on `axis`.
  void validate_for(const Axis& axis) const;

  friend bool operator==(const AxisSet& a, const AxisSet& b) {
    return a.kind_ == b.kind_ && a.start_ == b.start_ && a.second_ == b.second_;
  }

 private:
  AxisSet(AxisKind kind, Rat start, Rat second)
      : kind_(kind), start_(std::move(start)), second_(std::move(second)) {}

  AxisKind kind_;
  Rat start_;
  Rat second_;  // interval end, or arc length
};

/// A voter's approval set: the product of one AxisSet per spectrum axis.
class BoxSet {
 public:
  explicit BoxSet(std::vector<AxisSet> factors);

  const std::vector<AxisSet>& factors() const { return factors_; }
  const AxisSet& factor(std::size_t axis_index) const { return factors_.at(axis_index); }
  std::size_t dimension() const { return factors_.size(); }

  /// Throws ValidationError unless the factor count and every factor match
  /// the spectrum.
  void validate_for(const std::vector<Axis>& spectrum) const;

  friend bool operator==(const BoxSet& a, const BoxSet& b) { return a.factors_ == b.factors_; }

 private:
  std::vector<AxisSet> factors_;
};

/// A single point of a spectrum. Circular coordinates are reduced to [0, L)
/// at construction.
class Platform {
 public:
  Platform(std::vector<Rat> coords, const std::vector<Axis>& spectrum);

  const std::vector<Rat>& coords() const { return coords_; }
  const Rat& operator[](std::size_t i) const { return coords_.at(i); }
  std::size_t dimension() const { return coords_.size(); }

  friend bool operator==(const Platform& a, const Platform& b) { return a.coords_ == b.coords_; }

 private:
  std::vector<Rat> coords_;
};

/// Closed-set membership; p is reduced mod circumference on circular axes.
bool contains(const AxisSet& set, const Axis& axis, const Rat& p);

/// Whether two sets on the same axis share at least one platform. Tangent
/// sets (shared endpoint only) do intersect: all sets are closed.
bool sets_intersect(const AxisSet& a, const AxisSet& b, const Axis& axis);

/// A platform contained in every set, or nullopt if the intersection is
/// empty. If any point is common, some set's start is common (or 0 when all
/// arcs are full circles); returns the smallest such candidate, circular
/// candidates ordered as values in [0, L). Throws ValidationError on an
/// empty family.
std::optional<Rat> axis_common_point(const std::vector<AxisSet>& sets, const Axis& axis);

/// Product-set common point: present iff each axis's factor family has a
/// common point; combines the per-axis witnesses. Throws ValidationError on
/// an empty family.
std::optional<Platform> box_common_point(const std::vector<BoxSet>& boxes,
                                         const std::vector<Axis>& spectrum);

bool boxes_intersect(const BoxSet& a, const BoxSet& b, const std::vector<Axis>& spectrum);

}  // namespace socs
