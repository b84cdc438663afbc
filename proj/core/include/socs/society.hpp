#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "socs/axis.hpp"

namespace socs {

enum class SocietyKind { Linear, Circular, TwoBox, Cylindrical, Toroidal };

std::string to_string(SocietyKind kind);

struct Voter {
  std::string name;
  BoxSet box;
};

/// A spectrum (one or two axes) together with named voters and their product
/// approval sets. Immutable after construction; every operation on societies
/// is a pure function.
class Society {
 public:
  /// Validates: 1-2 axes, at least one voter, unique nonempty names, every
  /// approval set matching the spectrum. Throws ValidationError.
  Society(std::vector<Axis> spectrum, std::vector<Voter> voters);

  const std::vector<Axis>& spectrum() const { return spectrum_; }
  const Axis& axis(std::size_t i) const { return spectrum_.at(i); }
  const std::vector<Voter>& voters() const { return voters_; }
  const Voter& voter(std::size_t i) const { return voters_.at(i); }
  std::size_t size() const { return voters_.size(); }
  std::size_t dimension() const { return spectrum_.size(); }

  /// Classification derived from the axis kinds alone.
  SocietyKind kind() const;

 private:
  std::vector<Axis> spectrum_;
  std::vector<Voter> voters_;
};

/// The one-axis society with the same voters and the chosen factor of each
/// approval set. Requires a two-axis society.
Society project(const Society& s, std::size_t axis_index);

/// Restriction of `s` to the voters whose `axis_index` factor contains `p`
/// (same spectrum, original voter order). Requires a two-axis society.
/// Throws EmptySubsocietyError when no voter qualifies.
Society subsociety_at(const Society& s, std::size_t axis_index, const Rat& p);

/// The circular society induced on the fiber over linear-axis point `x` of a
/// cylindrical society: voters whose linear factor contains x, keeping their
/// circular factors. Throws EmptySubsocietyError when the slice is empty.
Society slice_cylinder(const Society& s, const Rat& x);

/// Cuts a circular society at platform `p` and unrolls it onto the segment
/// [p, p + L]. Each arc containing p contributes two voters with suffixed
/// names ("v" -> "v#a" for the piece starting at p, "v#b" for the piece
/// ending at p + L); every other arc contributes one interval. Full-circle
/// arcs split into two touching intervals covering [p, p + L], so their two
/// pieces share one platform. The result has |S| + (number of sets
/// containing p) voters.
Society cut_unroll(const Society& s, const Rat& p);

}  // namespace socs
