#include "socs/generators.hpp"

#include <random>
#include <string>

#include "socs/errors.hpp"

namespace socs {

namespace {

Voter box_voter(std::string name, std::vector<AxisSet> factors) {
  return Voter{std::move(name), BoxSet(std::move(factors))};
}

Society fig1() {
  Axis x = Axis::linear();
  Axis y = Axis::linear();
  auto rect = [&](const char* name, Rat x0, Rat y0, Rat x1, Rat y1) {
    return box_voter(name, {AxisSet::interval(x0, x1), AxisSet::interval(y0, y1)});
  };
  return Society({x, y}, {
                             rect("blue", Rat(1, 2), Rat(3, 10), Rat(2), Rat(9, 5)),
                             rect("green", Rat(7, 10), Rat(1, 2), Rat(11, 5), Rat(2)),
                             rect("red", Rat(5, 2), Rat(5, 2), Rat(4), Rat(4)),
                             rect("orange", Rat(27, 10), Rat(23, 10), Rat(21, 5), Rat(19, 5)),
                             rect("violet", Rat(3), Rat(4, 5), Rat(19, 5), Rat(8, 5)),
                         });
}

Society fig2() {
  Axis x = Axis::linear();
  auto seg = [&](const char* name, Rat a, Rat b) {
    return box_voter(name, {AxisSet::interval(std::move(a), std::move(b))});
  };
  return Society({x}, {
                          seg("red", Rat(1, 2), Rat(3)),
                          seg("blue", Rat(7, 2), Rat(9, 2)),
                          seg("orange", Rat(1), Rat(2)),
                          seg("green", Rat(23, 10), Rat(5)),
                          seg("violet", Rat(4, 5), Rat(16, 5)),
                          seg("teal", Rat(1, 5), Rat(8, 5)),
                      });
}

Society fig3() {
  Axis c = Axis::circular(Rat(360));
  auto arc = [&](const char* name, Rat start, Rat length) {
    return box_voter(name, {AxisSet::arc(std::move(start), std::move(length), c)});
  };
  return Society({c}, {
                          arc("blue", Rat(0), Rat(200)),
                          arc("green", Rat(120), Rat(200)),
                          arc("red", Rat(240), Rat(200)),
                      });
}

Society fig5() {
  Axis cx = Axis::circular(Rat(5));
  Axis cy = Axis::circular(Rat(5));
  auto sq = [&](const char* name, Rat x0, Rat y0) {
    // Every approval set is a 13/5 x 13/5 square; three of them wrap.
    return box_voter(name, {AxisSet::arc(std::move(x0), Rat(13, 5), cx),
                            AxisSet::arc(std::move(y0), Rat(13, 5), cy)});
  };
  return Society({cx, cy}, {
                               sq("purple", Rat(1, 5), Rat(1, 5)),
                               sq("blue", Rat(6, 5), Rat(11, 5)),
                               sq("green", Rat(11, 5), Rat(21, 5)),
                               sq("orange", Rat(16, 5), Rat(6, 5)),
                               sq("red", Rat(21, 5), Rat(16, 5)),
                           });
}

Society cylinder_example() {
  Axis x = Axis::linear();
  Axis c = Axis::circular(Rat(360));
  auto v = [&](const char* name, Rat start) {
    return box_voter(name, {AxisSet::interval(Rat(0), Rat(1)),
                            AxisSet::arc(std::move(start), Rat(200), c)});
  };
  return Society({x, c}, {v("blue", Rat(0)), v("green", Rat(120)), v("red", Rat(240))});
}

}  // namespace

Society fixture(const std::string& id) {
  if (id == "fig1") return fig1();
  if (id == "fig2") return fig2();
  if (id == "fig3") return fig3();
  if (id == "fig5") return fig5();
  if (id == "cyl-ex") return cylinder_example();
  throw ValidationError("unknown fixture '" + id +
                        "' (expected fig1, fig2, fig3, fig5, or cyl-ex)");
}

Society uniform_toroidal(int n) {
  if (n < 1) {
    throw ValidationError("uniform_toroidal requires n >= 1");
  }
  const long ell = (static_cast<long>(n) + 2) / 4;  // ceil((n-1)/4)
  const long base = 4 * ell + 1;
  const Rat circumference(2 * base);
  const Rat side(base);
  Axis cx = Axis::circular(circumference);
  Axis cy = Axis::circular(circumference);

  std::vector<Voter> voters;
  voters.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    Rat x = reduce_mod(Rat(2 * i), circumference);
    Rat y = reduce_mod(Rat(4 * i), circumference);
    voters.push_back(box_voter("v" + std::to_string(i),
                               {AxisSet::arc(std::move(x), side, cx),
                                AxisSet::arc(std::move(y), side, cy)}));
  }
  return Society({cx, cy}, std::move(voters));
}

Society stratified(SocietyKind kind, int strata, int per_stratum,
                   const Rat& arc_length_fraction) {
  if (kind != SocietyKind::Cylindrical && kind != SocietyKind::Toroidal) {
    throw ValidationError("stratified societies are cylindrical or toroidal");
  }
  if (strata < 1 || per_stratum < 1) {
    throw ValidationError("stratified requires strata >= 1 and per_stratum >= 1");
  }
  if (arc_length_fraction > Rat(1)) {
    throw ValidationError("arc length fraction exceeds the full circle");
  }
  // Arcs spaced L/p apart pairwise intersect iff the fraction is at least
  // floor(p/2)/p.
  const Rat min_fraction(per_stratum / 2, per_stratum);
  if (arc_length_fraction < min_fraction) {
    throw ValidationError("arc length fraction " + arc_length_fraction.str() +
                          " below " + min_fraction.str() +
                          "; arcs within a stratum would not pairwise intersect");
  }

  Axis first = kind == SocietyKind::Cylindrical ? Axis::linear() : Axis::circular(Rat(strata));
  Axis second = Axis::circular(Rat(360));
  const Rat arc_length = arc_length_fraction * Rat(360);
  const Rat spacing = Rat(360, per_stratum);

  std::vector<Voter> voters;
  voters.reserve(static_cast<std::size_t>(strata) * static_cast<std::size_t>(per_stratum));
  for (int i = 0; i < strata; ++i) {
    // Band [i, i + 1/2]; the gaps keep the strata disjoint.
    AxisSet band = kind == SocietyKind::Cylindrical
                       ? AxisSet::interval(Rat(i), Rat(i) + Rat(1, 2))
                       : AxisSet::arc(Rat(i), Rat(1, 2), first);
    for (int j = 0; j < per_stratum; ++j) {
      AxisSet arc = AxisSet::arc(reduce_mod(spacing * Rat(j), Rat(360)), arc_length, second);
      voters.push_back(box_voter("s" + std::to_string(i) + "v" + std::to_string(j),
                                 {band, std::move(arc)}));
    }
  }
  return Society({std::move(first), std::move(second)}, std::move(voters));
}

namespace {

// Exactly uniform over [0, bound); rejection keeps the mapping unbiased and
// identical on every platform.
std::uint64_t uniform_u64(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    std::uint64_t r = rng();
    if (r >= threshold) {
      return r % bound;
    }
  }
}

}  // namespace

Society random_society(const RandomSpec& spec) {
  if (spec.n < 1) {
    throw ValidationError("random societies need at least one voter");
  }
  if (spec.spectrum.empty() || spec.spectrum.size() > 2) {
    throw ValidationError("random spectrum must have one or two axes");
  }
  if (spec.size_range.size() != spec.spectrum.size()) {
    throw ValidationError("one size range per axis required");
  }
  for (std::size_t a = 0; a < spec.spectrum.size(); ++a) {
    const auto& [lo, hi] = spec.size_range[a];
    if (lo < Rat(0) || lo > hi) {
      throw ValidationError("size range must satisfy 0 <= min <= max");
    }
    if (spec.spectrum[a].is_circular() && hi > spec.spectrum[a].circumference()) {
      throw ValidationError("size range exceeds the axis circumference");
    }
  }

  std::mt19937_64 rng(spec.seed);
  std::vector<Voter> voters;
  voters.reserve(static_cast<std::size_t>(spec.n));
  for (int i = 0; i < spec.n; ++i) {
    std::vector<AxisSet> factors;
    factors.reserve(spec.spectrum.size());
    for (std::size_t a = 0; a < spec.spectrum.size(); ++a) {
      const Axis& axis = spec.spectrum[a];
      const auto& [lo, hi] = spec.size_range[a];
      Rat start = Rat(static_cast<long>(uniform_u64(rng, 1000)), 1000);
      Rat length = lo + (hi - lo) * Rat(static_cast<long>(uniform_u64(rng, 1001)), 1000);
      if (axis.is_circular()) {
        factors.push_back(AxisSet::arc(start * axis.circumference(), length, axis));
      } else {
        factors.push_back(AxisSet::interval(start, start + length));
      }
    }
    voters.push_back(box_voter("v" + std::to_string(i), std::move(factors)));
  }
  return Society(spec.spectrum, std::move(voters));
}

}  // namespace socs
