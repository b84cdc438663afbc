#include <doctest.h>

#include <optional>
#include <vector>

#include "socs/axis.hpp"
#include "socs/errors.hpp"
#include "socs/generators.hpp"
#include "socs/rational.hpp"
#include "support/oracles.hpp"

using namespace socs;

TEST_CASE("rational parsing and canonical text") {
  CHECK(Rat::parse("3/6") == Rat(1, 2));
  CHECK(Rat::parse("-3/6").str() == "-1/2");
  CHECK(Rat::parse("0.2") == Rat(1, 5));
  CHECK(Rat::parse("-1.25") == Rat(-5, 4));
  // Leading zeros in the fraction must stay decimal, never octal.
  CHECK(Rat::parse("0.8") == Rat(4, 5));
  CHECK(Rat::parse("0.10") == Rat(1, 10));
  CHECK(Rat::parse("0.090") == Rat(9, 100));
  CHECK(Rat::parse("7").str() == "7");
  CHECK(Rat(6, 4).str() == "3/2");
  CHECK(Rat(3, -6) == Rat(-1, 2));
  CHECK_THROWS_AS(Rat::parse(""), ValidationError);
  CHECK_THROWS_AS(Rat::parse("1/0"), ValidationError);
  CHECK_THROWS_AS(Rat::parse("1.2.3"), ValidationError);
  CHECK_THROWS_AS(Rat::parse("x"), ValidationError);
  CHECK_THROWS_AS(Rat(1, 0), ValidationError);
}

TEST_CASE("rational floor, ceil, and modulus") {
  CHECK(Rat(7, 2).floor_long() == 3);
  CHECK(Rat(7, 2).ceil_long() == 4);
  CHECK(Rat(-7, 2).floor_long() == -4);
  CHECK(Rat(-7, 2).ceil_long() == -3);
  CHECK(Rat(5).floor_long() == 5);
  CHECK(reduce_mod(Rat(7), Rat(5)) == Rat(2));
  CHECK(reduce_mod(Rat(-1), Rat(5)) == Rat(4));
  CHECK(reduce_mod(Rat(10), Rat(5)) == Rat(0));
  CHECK(reduce_mod(Rat(-13, 2), Rat(5)) == Rat(7, 2));
}

TEST_CASE("axis and set construction invariants") {
  CHECK_THROWS_AS(Axis::circular(Rat(0)), ValidationError);
  CHECK_THROWS_AS(Axis::circular(Rat(-1)), ValidationError);
  CHECK_THROWS_AS(AxisSet::interval(Rat(2), Rat(1)), ValidationError);
  Axis circle = Axis::circular(Rat(360));
  CHECK_THROWS_AS(AxisSet::arc(Rat(360), Rat(10), circle), ValidationError);
  CHECK_THROWS_AS(AxisSet::arc(Rat(-1), Rat(10), circle), ValidationError);
  CHECK_THROWS_AS(AxisSet::arc(Rat(0), Rat(361), circle), ValidationError);
  // Degenerate single-platform sets are allowed.
  CHECK(AxisSet::interval(Rat(1), Rat(1)).end() == Rat(1));
  CHECK(AxisSet::arc(Rat(5), Rat(0), circle).length() == Rat(0));
}

TEST_CASE("closed membership") {
  Axis line = Axis::linear();
  Axis circle = Axis::circular(Rat(360));
  AxisSet seg = AxisSet::interval(Rat(1, 2), Rat(3));
  CHECK(contains(seg, line, Rat(3)));
  CHECK(contains(seg, line, Rat(1, 2)));
  CHECK_FALSE(contains(seg, line, Rat(301, 100)));

  AxisSet red = AxisSet::arc(Rat(240), Rat(200), circle);
  CHECK(contains(red, circle, Rat(40)));  // wraps past 0
  CHECK(contains(red, circle, Rat(240)));
  CHECK(contains(red, circle, Rat(80)));
  CHECK_FALSE(contains(red, circle, Rat(81)));
  CHECK(contains(red, circle, Rat(400)));  // reduced mod 360 first

  AxisSet full = AxisSet::arc(Rat(0), Rat(360), circle);
  CHECK(contains(full, circle, Rat(123, 7)));
}

TEST_CASE("axis_common_point on intervals") {
  Axis line = Axis::linear();
  std::vector<AxisSet> sets = {
      AxisSet::interval(Rat(1, 2), Rat(3)),
      AxisSet::interval(Rat(1), Rat(2)),
      AxisSet::interval(Rat(4, 5), Rat(16, 5)),
      AxisSet::interval(Rat(1, 5), Rat(8, 5)),
  };
  auto common = axis_common_point(sets, line);
  REQUIRE(common.has_value());
  CHECK(*common == Rat(1));

  sets.push_back(AxisSet::interval(Rat(10), Rat(11)));
  CHECK_FALSE(axis_common_point(sets, line).has_value());
  CHECK_THROWS_AS(axis_common_point({}, line), ValidationError);
}

TEST_CASE("axis_common_point on arcs") {
  Axis circle = Axis::circular(Rat(360));
  std::vector<AxisSet> arcs = {
      AxisSet::arc(Rat(0), Rat(200), circle),
      AxisSet::arc(Rat(120), Rat(200), circle),
      AxisSet::arc(Rat(240), Rat(200), circle),
  };
  CHECK_FALSE(axis_common_point(arcs, circle).has_value());

  // Any pair does share a point.
  CHECK(axis_common_point({arcs[0], arcs[1]}, circle) == Rat(120));
  CHECK(axis_common_point({arcs[1], arcs[2]}, circle) == Rat(240));
  CHECK(axis_common_point({arcs[0], arcs[2]}, circle) == Rat(0));

  // A family of full circles has no binding start; the rule picks 0.
  CHECK(axis_common_point({AxisSet::arc(Rat(77), Rat(360), circle)}, circle) == Rat(0));

  // Wrapping pair: the smallest common set start wins, not the smallest
  // common platform.
  Axis ten = Axis::circular(Rat(10));
  std::vector<AxisSet> wrap = {AxisSet::arc(Rat(8), Rat(4), ten), AxisSet::arc(Rat(9), Rat(4), ten)};
  CHECK(axis_common_point(wrap, ten) == Rat(9));
}

TEST_CASE("box_common_point") {
  Society meeting = fixture("fig1");
  std::vector<BoxSet> boxes;
  for (const Voter& v : meeting.voters()) boxes.push_back(v.box);
  CHECK_FALSE(box_common_point(boxes, meeting.spectrum()).has_value());

  auto single = box_common_point({boxes[0]}, meeting.spectrum());
  REQUIRE(single.has_value());
  CHECK(single->coords() == std::vector<Rat>{Rat(1, 2), Rat(3, 10)});

  Society torus = uniform_toroidal(9);
  std::vector<BoxSet> three = {torus.voter(0).box, torus.voter(1).box, torus.voter(2).box};
  auto point = box_common_point(three, torus.spectrum());
  REQUIRE(point.has_value());
  CHECK(point->coords() == std::vector<Rat>{Rat(4), Rat(8)});
}

namespace {

std::vector<AxisSet> axis_family(const Society& s, std::size_t axis_index) {
  std::vector<AxisSet> sets;
  for (const Voter& v : s.voters()) sets.push_back(v.box.factor(axis_index));
  return sets;
}

RandomSpec spec_for(std::vector<Axis> spectrum, int n, std::uint64_t seed) {
  RandomSpec spec;
  spec.spectrum = std::move(spectrum);
  spec.n = n;
  for (const Axis& a : spec.spectrum) {
    Rat max_len = a.is_circular() ? a.circumference() : Rat(1);
    spec.size_range.emplace_back(Rat(0), max_len);
  }
  spec.seed = seed;
  return spec;
}

}  // namespace

TEST_CASE("candidate completeness matches the endpoint-grid oracle") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    Axis axis = seed % 2 == 0 ? Axis::linear() : Axis::circular(Rat(1));
    Society s = random_society(spec_for({axis}, 2 + static_cast<int>(seed % 7), seed));
    auto sets = axis_family(s, 0);
    bool found = axis_common_point(sets, axis).has_value();
    bool oracle = socs::testing::oracle_has_common_point(sets, axis);
    CAPTURE(seed);
    CHECK(found == oracle);
  }
}

TEST_CASE("rotation invariance of arc intersection") {
  Axis circle = Axis::circular(Rat(1));
  for (std::uint64_t seed = 200; seed < 260; ++seed) {
    Society s = random_society(spec_for({circle}, 3 + static_cast<int>(seed % 5), seed));
    auto sets = axis_family(s, 0);
    bool base = axis_common_point(sets, circle).has_value();
    for (const Rat& delta : {Rat(1, 3), Rat(7, 10), Rat(999, 1000)}) {
      std::vector<AxisSet> rotated;
      for (const AxisSet& a : sets) {
        rotated.push_back(AxisSet::arc(reduce_mod(a.start() + delta, Rat(1)), a.length(), circle));
      }
      CAPTURE(seed);
      CHECK(axis_common_point(rotated, circle).has_value() == base);
    }
  }
}

TEST_CASE("box decomposition: product common point iff every factor family agrees") {
  std::vector<std::vector<Axis>> spectra = {
      {Axis::linear(), Axis::linear()},
      {Axis::linear(), Axis::circular(Rat(1))},
      {Axis::circular(Rat(1)), Axis::circular(Rat(1))},
  };
  std::uint64_t seed = 500;
  for (const auto& spectrum : spectra) {
    for (int trial = 0; trial < 40; ++trial, ++seed) {
      Society s = random_society(spec_for(spectrum, 2 + trial % 6, seed));
      std::vector<BoxSet> boxes;
      for (const Voter& v : s.voters()) boxes.push_back(v.box);
      bool per_axis = true;
      for (std::size_t a = 0; a < spectrum.size(); ++a) {
        per_axis = per_axis && axis_common_point(axis_family(s, a), spectrum[a]).has_value();
      }
      auto joint = box_common_point(boxes, spectrum);
      CAPTURE(seed);
      CHECK(joint.has_value() == per_axis);
      if (joint) {
        for (const Voter& v : s.voters()) {
          for (std::size_t a = 0; a < spectrum.size(); ++a) {
            CHECK(contains(v.box.factor(a), spectrum[a], (*joint)[a]));
          }
        }
      }
    }
  }
}

TEST_CASE("closedness: every set contains its own endpoints") {
  std::uint64_t seed = 900;
  for (int trial = 0; trial < 60; ++trial, ++seed) {
    Axis axis = trial % 2 == 0 ? Axis::linear() : Axis::circular(Rat(1));
    Society s = random_society(spec_for({axis}, 4, seed));
    for (const Voter& v : s.voters()) {
      const AxisSet& set = v.box.factor(0);
      CHECK(contains(set, axis, set.start()));
      if (set.is_interval()) {
        CHECK(contains(set, axis, set.end()));
      } else {
        CHECK(contains(set, axis, reduce_mod(set.start() + set.length(), axis.circumference())));
      }
    }
  }
}

TEST_CASE("intersection test agrees with common-point search on pairs") {
  std::uint64_t seed = 1300;
  for (int trial = 0; trial < 80; ++trial, ++seed) {
    Axis axis = trial % 2 == 0 ? Axis::linear() : Axis::circular(Rat(1));
    Society s = random_society(spec_for({axis}, 2, seed));
    const AxisSet& a = s.voter(0).box.factor(0);
    const AxisSet& b = s.voter(1).box.factor(0);
    CHECK(sets_intersect(a, b, axis) == axis_common_point({a, b}, axis).has_value());
    CHECK(sets_intersect(a, b, axis) == sets_intersect(b, a, axis));
  }
}
