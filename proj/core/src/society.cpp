#include "socs/society.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

#include "socs/errors.hpp"

namespace socs {

std::string to_string(SocietyKind kind) {
  switch (kind) {
    case SocietyKind::Linear: return "linear";
    case SocietyKind::Circular: return "circular";
    case SocietyKind::TwoBox: return "2box";
    case SocietyKind::Cylindrical: return "cylindrical";
    case SocietyKind::Toroidal: return "toroidal";
  }
  return "unknown";
}

Society::Society(std::vector<Axis> spectrum, std::vector<Voter> voters)
    : spectrum_(std::move(spectrum)), voters_(std::move(voters)) {
  if (spectrum_.empty() || spectrum_.size() > 2) {
    throw ValidationError("spectrum must have one or two axes");
  }
  if (voters_.empty()) {
    throw ValidationError("society must have at least one voter");
  }
  std::unordered_set<std::string> names;
  for (const Voter& v : voters_) {
    if (v.name.empty()) {
      throw ValidationError("voter name must be nonempty");
    }
    if (!names.insert(v.name).second) {
      throw ValidationError("duplicate voter name '" + v.name + "'");
    }
    v.box.validate_for(spectrum_);
  }
}

SocietyKind Society::kind() const {
  if (spectrum_.size() == 1) {
    return spectrum_[0].is_circular() ? SocietyKind::Circular : SocietyKind::Linear;
  }
  const bool c0 = spectrum_[0].is_circular();
  const bool c1 = spectrum_[1].is_circular();
  if (c0 && c1) return SocietyKind::Toroidal;
  if (!c0 && !c1) return SocietyKind::TwoBox;
  return SocietyKind::Cylindrical;
}

namespace {

void require_two_axes(const Society& s, const char* op) {
  if (s.dimension() != 2) {
    throw ValidationError(std::string(op) + " requires a two-axis society");
  }
}

}  // namespace

Society project(const Society& s, std::size_t axis_index) {
  require_two_axes(s, "project");
  if (axis_index >= s.dimension()) {
    throw ValidationError("axis index out of range");
  }
  std::vector<Voter> voters;
  voters.reserve(s.size());
  for (const Voter& v : s.voters()) {
    voters.push_back(Voter{v.name, BoxSet({v.box.factor(axis_index)})});
  }
  return Society({s.axis(axis_index)}, std::move(voters));
}

Society subsociety_at(const Society& s, std::size_t axis_index, const Rat& p) {
  require_two_axes(s, "subsociety_at");
  if (axis_index >= s.dimension()) {
    throw ValidationError("axis index out of range");
  }
  std::vector<Voter> voters;
  for (const Voter& v : s.voters()) {
    if (contains(v.box.factor(axis_index), s.axis(axis_index), p)) {
      voters.push_back(v);
    }
  }
  if (voters.empty()) {
    throw EmptySubsocietyError("no voter approves of the given platform coordinate");
  }
  return Society(s.spectrum(), std::move(voters));
}

Society slice_cylinder(const Society& s, const Rat& x) {
  if (s.kind() != SocietyKind::Cylindrical) {
    throw ValidationError("slice_cylinder requires a cylindrical society");
  }
  const std::size_t linear_index = s.axis(0).is_circular() ? 1 : 0;
  const std::size_t circular_index = 1 - linear_index;
  std::vector<Voter> voters;
  for (const Voter& v : s.voters()) {
    if (contains(v.box.factor(linear_index), s.axis(linear_index), x)) {
      voters.push_back(Voter{v.name, BoxSet({v.box.factor(circular_index)})});
    }
  }
  if (voters.empty()) {
    throw EmptySubsocietyError("the slice at " + x.str() + " contains no voters");
  }
  return Society({s.axis(circular_index)}, std::move(voters));
}

Society cut_unroll(const Society& s, const Rat& p) {
  if (s.kind() != SocietyKind::Circular) {
    throw ValidationError("cut_unroll requires a circular society");
  }
  const Axis& circle = s.axis(0);
  const Rat& circ = circle.circumference();
  const Axis line = Axis::linear();
  const Rat cut = reduce_mod(p, circ);
  const Rat far_end = cut + circ;

  std::vector<Voter> voters;
  for (const Voter& v : s.voters()) {
    const AxisSet& arc = v.box.factor(0);
    const Rat start_offset = reduce_mod(arc.start() - cut, circ);
    if (!contains(arc, circle, cut)) {
      Rat lo = cut + start_offset;
      voters.push_back(Voter{v.name, BoxSet({AxisSet::interval(lo, lo + arc.length())})});
      continue;
    }
    if (arc.length() == circ) {
      // Full circle: two touching pieces split at the arc's marked start.
      Rat split = cut + start_offset;
      voters.push_back(Voter{v.name + "#a", BoxSet({AxisSet::interval(cut, split)})});
      voters.push_back(Voter{v.name + "#b", BoxSet({AxisSet::interval(split, far_end)})});
      continue;
    }
    const Rat end_offset = reduce_mod(arc.start() + arc.length() - cut, circ);
    const Rat head_start =
        start_offset == Rat(0) ? far_end : cut + start_offset;
    voters.push_back(Voter{v.name + "#a", BoxSet({AxisSet::interval(cut, cut + end_offset)})});
    voters.push_back(Voter{v.name + "#b", BoxSet({AxisSet::interval(head_start, far_end)})});
  }
  return Society({line}, std::move(voters));
}

}  // namespace socs
