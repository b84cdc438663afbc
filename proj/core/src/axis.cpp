#include "socs/axis.hpp"

#include <algorithm>

#include "socs/errors.hpp"

namespace socs {

Axis Axis::circular(Rat circumference) {
  if (circumference <= Rat(0)) {
    throw ValidationError("circular axis circumference must be positive, got " +
                          circumference.str());
  }
  return Axis(AxisKind::Circular, std::move(circumference));
}

const Rat& Axis::circumference() const {
  if (kind_ != AxisKind::Circular) {
    throw ValidationError("linear axis has no circumference");
  }
  return circumference_;
}

AxisSet AxisSet::interval(Rat start, Rat end) {
  if (start > end) {
    throw ValidationError("interval start " + start.str() + " exceeds end " + end.str());
  }
  return AxisSet(AxisKind::Linear, std::move(start), std::move(end));
}

AxisSet AxisSet::arc(Rat start, Rat length, const Axis& axis) {
  const Rat& circ = axis.circumference();
  if (start < Rat(0) || start >= circ) {
    throw ValidationError("arc start " + start.str() + " outside [0, " + circ.str() + ")");
  }
  if (length < Rat(0) || length > circ) {
    throw ValidationError("arc length " + length.str() + " outside [0, " + circ.str() + "]");
  }
  return AxisSet(AxisKind::Circular, std::move(start), std::move(length));
}

const Rat& AxisSet::end() const {
  if (kind_ != AxisKind::Linear) {
    throw ValidationError("arc has no interval endpoint");
  }
  return second_;
}

const Rat& AxisSet::length() const {
  if (kind_ != AxisKind::Circular) {
    throw ValidationError("interval has no arc length");
  }
  return second_;
}

void AxisSet::validate_for(const Axis& axis) const {
  if (kind_ != axis.kind()) {
    throw ValidationError("approval set kind does not match its axis");
  }
  if (kind_ == AxisKind::Circular) {
    const Rat& circ = axis.circumference();
    if (start_ < Rat(0) || start_ >= circ) {
      throw ValidationError("arc start " + start_.str() + " outside [0, " + circ.str() + ")");
    }
    if (second_ < Rat(0) || second_ > circ) {
      throw ValidationError("arc length " + second_.str() + " outside [0, " + circ.str() + "]");
    }
  } else if (start_ > second_) {
    throw ValidationError("interval start exceeds end");
  }
}

BoxSet::BoxSet(std::vector<AxisSet> factors) : factors_(std::move(factors)) {
  if (factors_.empty() || factors_.size() > 2) {
    throw ValidationError("approval set must have one or two factors");
  }
}

void BoxSet::validate_for(const std::vector<Axis>& spectrum) const {
  if (factors_.size() != spectrum.size()) {
    throw ValidationError("approval set factor count does not match spectrum");
  }
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    factors_[i].validate_for(spectrum[i]);
  }
}

Platform::Platform(std::vector<Rat> coords, const std::vector<Axis>& spectrum)
    : coords_(std::move(coords)) {
  if (coords_.size() != spectrum.size()) {
    throw ValidationError("platform coordinate count does not match spectrum");
  }
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (spectrum[i].is_circular()) {
      coords_[i] = reduce_mod(coords_[i], spectrum[i].circumference());
    }
  }
}

bool contains(const AxisSet& set, const Axis& axis, const Rat& p) {
  if (set.is_interval()) {
    return set.start() <= p && p <= set.end();
  }
  const Rat& circ = axis.circumference();
  return reduce_mod(p - set.start(), circ) <= set.length();
}

bool sets_intersect(const AxisSet& a, const AxisSet& b, const Axis& axis) {
  if (a.is_interval()) {
    return std::max(a.start(), b.start()) <= std::min(a.end(), b.end());
  }
  const Rat& circ = axis.circumference();
  return reduce_mod(b.start() - a.start(), circ) <= a.length() ||
         reduce_mod(a.start() - b.start(), circ) <= b.length();
}

std::optional<Rat> axis_common_point(const std::vector<AxisSet>& sets, const Axis& axis) {
  if (sets.empty()) {
    throw ValidationError("axis_common_point requires a nonempty family");
  }
  if (axis.is_circular()) {
    bool all_full = std::all_of(sets.begin(), sets.end(), [&](const AxisSet& s) {
      return s.length() == axis.circumference();
    });
    if (all_full) {
      return Rat(0);
    }
  }
  std::vector<Rat> candidates;
  candidates.reserve(sets.size());
  for (const AxisSet& s : sets) {
    candidates.push_back(s.start());
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const Rat& c : candidates) {
    bool in_all = std::all_of(sets.begin(), sets.end(),
                              [&](const AxisSet& s) { return contains(s, axis, c); });
    if (in_all) {
      return c;
    }
  }
  return std::nullopt;
}

std::optional<Platform> box_common_point(const std::vector<BoxSet>& boxes,
                                         const std::vector<Axis>& spectrum) {
  if (boxes.empty()) {
    throw ValidationError("box_common_point requires a nonempty family");
  }
  std::vector<Rat> coords;
  coords.reserve(spectrum.size());
  for (std::size_t axis_index = 0; axis_index < spectrum.size(); ++axis_index) {
    std::vector<AxisSet> factors;
    factors.reserve(boxes.size());
    for (const BoxSet& b : boxes) {
      factors.push_back(b.factor(axis_index));
    }
    auto witness = axis_common_point(factors, spectrum[axis_index]);
    if (!witness) {
      return std::nullopt;
    }
    coords.push_back(std::move(*witness));
  }
  return Platform(std::move(coords), spectrum);
}

bool boxes_intersect(const BoxSet& a, const BoxSet& b, const std::vector<Axis>& spectrum) {
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    if (!sets_intersect(a.factor(i), b.factor(i), spectrum[i])) {
      return false;
    }
  }
  return true;
}

}  // namespace socs
