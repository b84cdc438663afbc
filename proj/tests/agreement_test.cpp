#include <doctest.h>

#include <vector>

#include "socs/agreement.hpp"
#include "socs/errors.hpp"
#include "socs/generators.hpp"
#include "support/oracles.hpp"

using namespace socs;

namespace {

RandomSpec spec_for(std::vector<Axis> spectrum, int n, std::uint64_t seed, Rat min_frac,
                    Rat max_frac) {
  RandomSpec spec;
  spec.spectrum = std::move(spectrum);
  spec.n = n;
  for (const Axis& a : spec.spectrum) {
    Rat unit = a.is_circular() ? a.circumference() : Rat(1);
    spec.size_range.emplace_back(min_frac * unit, max_frac * unit);
  }
  spec.seed = seed;
  return spec;
}

}  // namespace

TEST_CASE("agreement numbers of the built-in societies") {
  AgreementResult fig2 = agreement_number(fixture("fig2"));
  CHECK(fig2.number == 4);
  CHECK(fig2.witness.coords() == std::vector<Rat>{Rat(1)});
  CHECK(fig2.witness_voters == std::vector<std::string>{"red", "orange", "violet", "teal"});

  CHECK(agreement_number(fixture("fig3")).number == 2);
  CHECK(agreement_number(fixture("fig1")).number == 2);
  CHECK(agreement_number(fixture("fig5")).number == 2);
  CHECK(agreement_number(fixture("cyl-ex")).number == 2);
  CHECK(agreement_number(uniform_toroidal(9)).number == 3);

  Axis line = Axis::linear();
  Society disjoint({line}, {Voter{"a", BoxSet({AxisSet::interval(Rat(0), Rat(1))})},
                            Voter{"b", BoxSet({AxisSet::interval(Rat(2), Rat(3))})}});
  CHECK(agreement_number(disjoint).number == 1);

  Society single({line}, {Voter{"a", BoxSet({AxisSet::interval(Rat(0), Rat(1))})}});
  CHECK(agreement_number(single).number == 1);
  CHECK(brute_force_agreement(single).number == 1);
}

TEST_CASE("witness invariants: the reported voters approve the witness") {
  for (const char* id : {"fig1", "fig2", "fig3", "fig5", "cyl-ex"}) {
    Society s = fixture(id);
    AgreementResult r = agreement_number(s);
    CHECK(r.number == static_cast<int>(r.witness_voters.size()));
    std::size_t matched = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      bool in_all = true;
      for (std::size_t a = 0; a < s.dimension(); ++a) {
        in_all = in_all && contains(s.voter(i).box.factor(a), s.axis(a), r.witness[a]);
      }
      if (in_all) {
        ++matched;
        CHECK(std::find(r.witness_voters.begin(), r.witness_voters.end(), s.voter(i).name) !=
              r.witness_voters.end());
      }
    }
    CHECK(matched == r.witness_voters.size());
  }
}

TEST_CASE("agreement graphs") {
  AgreementGraph k3 = agreement_graph(fixture("fig3"));
  CHECK(k3.size() == 3);
  CHECK(k3.edge_count() == 3);

  // All five fig5 squares pairwise intersect: (2,2)-agreeability forces a
  // complete agreement graph.
  AgreementGraph g5 = agreement_graph(fixture("fig5"));
  CHECK(g5.edge_count() == 10);

  Axis line = Axis::linear();
  std::vector<Voter> apart;
  for (int i = 0; i < 4; ++i) {
    apart.push_back(Voter{"v" + std::to_string(i),
                          BoxSet({AxisSet::interval(Rat(3 * i), Rat(3 * i + 1))})});
  }
  CHECK(agreement_graph(Society({line}, apart)).edge_count() == 0);
}

TEST_CASE("clique numbers") {
  CHECK(clique_number(agreement_graph(fixture("fig3"))).number == 3);
  CHECK(clique_number(agreement_graph(fixture("fig5"))).number == 5);

  CliqueResult fig2 = clique_number(agreement_graph(fixture("fig2")));
  CHECK(fig2.number == 4);
  CHECK(fig2.number == agreement_number(fixture("fig2")).number);

  Axis line = Axis::linear();
  std::vector<Voter> apart;
  for (int i = 0; i < 5; ++i) {
    apart.push_back(Voter{"v" + std::to_string(i),
                          BoxSet({AxisSet::interval(Rat(3 * i), Rat(3 * i + 1))})});
  }
  CliqueResult empty = clique_number(agreement_graph(Society({line}, apart)));
  CHECK(empty.number == 1);
  CHECK(empty.witness == std::vector<std::string>{"v0"});
}

TEST_CASE("clique witness is the lexicographically least maximum clique") {
  // Two disjoint triangles; the one containing the first voter wins.
  Axis line = Axis::linear();
  std::vector<Voter> voters;
  for (int i = 0; i < 3; ++i) {
    voters.push_back(Voter{"a" + std::to_string(i), BoxSet({AxisSet::interval(Rat(0), Rat(1))})});
  }
  for (int i = 0; i < 3; ++i) {
    voters.push_back(Voter{"b" + std::to_string(i), BoxSet({AxisSet::interval(Rat(5), Rat(6))})});
  }
  CliqueResult r = clique_number(agreement_graph(Society({line}, voters)));
  CHECK(r.number == 3);
  CHECK(r.witness == std::vector<std::string>{"a0", "a1", "a2"});
}

TEST_CASE("clique search matches the exhaustive oracle") {
  std::uint64_t seed = 4000;
  for (int trial = 0; trial < 40; ++trial, ++seed) {
    std::vector<Axis> spectrum = trial % 2 == 0
                                     ? std::vector<Axis>{Axis::circular(Rat(1))}
                                     : std::vector<Axis>{Axis::linear(), Axis::circular(Rat(1))};
    Society s = random_society(spec_for(spectrum, 4 + trial % 6, seed, Rat(0), Rat(3, 4)));
    AgreementGraph g = agreement_graph(s);
    CAPTURE(seed);
    CHECK(clique_number(g).number == socs::testing::oracle_max_clique(g));
  }
}

TEST_CASE("agreement equals brute force on random societies") {
  std::vector<std::vector<Axis>> spectra = {
      {Axis::linear()},
      {Axis::circular(Rat(1))},
      {Axis::linear(), Axis::linear()},
      {Axis::linear(), Axis::circular(Rat(1))},
      {Axis::circular(Rat(1)), Axis::circular(Rat(1))},
  };
  std::uint64_t seed = 7000;
  for (const auto& spectrum : spectra) {
    for (int trial = 0; trial < 30; ++trial, ++seed) {
      Society s = random_society(spec_for(spectrum, 1 + trial % 9, seed, Rat(0), Rat(1)));
      CAPTURE(seed);
      CHECK(agreement_number(s).number == brute_force_agreement(s).number);
    }
  }
}

TEST_CASE("km agreeability of the built-in societies") {
  CHECK(is_km_agreeable(fixture("fig2"), 2, 3).agreeable);
  CHECK(is_km_agreeable(fixture("fig3"), 2, 2).agreeable);
  CHECK(is_km_agreeable(fixture("fig5"), 2, 2).agreeable);

  Society strat = stratified(SocietyKind::Cylindrical, 4, 5, Rat(5, 9));
  CHECK(is_km_agreeable(strat, 2, 5).agreeable);
  AgreeabilityResult r = is_km_agreeable(strat, 2, 4);
  CHECK_FALSE(r.agreeable);
  REQUIRE(r.counterexample.has_value());
  CHECK(*r.counterexample == std::vector<std::string>{"s0v0", "s1v0", "s2v0", "s3v0"});

  // (1, m) carries no constraint.
  CHECK(is_km_agreeable(strat, 1, 4).agreeable);
  CHECK_FALSE(is_km_agreeable(strat, 1, 4).counterexample.has_value());

  CHECK_THROWS_AS(is_km_agreeable(fixture("fig3"), 2, 4), ValidationError);  // m > |S|
  CHECK_THROWS_AS(is_km_agreeable(fixture("fig3"), 0, 2), ValidationError);
  CHECK_THROWS_AS(is_km_agreeable(fixture("fig3"), 3, 2), ValidationError);
}

TEST_CASE("max k per m") {
  CHECK(max_k_for_m(fixture("fig2"), 3) == 2);
  CHECK(max_k_for_m(fixture("fig3"), 2) == 2);
  CHECK(max_k_for_m(uniform_toroidal(9), 2) == 2);
  CHECK(max_k_for_m(fixture("fig2"), 1) == 1);

  // Consistency: (max_k, m) holds and (max_k + 1, m) fails.
  for (const char* id : {"fig1", "fig2", "fig3", "fig5"}) {
    Society s = fixture(id);
    for (int m = 1; m <= static_cast<int>(s.size()); ++m) {
      int k = max_k_for_m(s, m);
      CAPTURE(id);
      CHECK(is_km_agreeable(s, k, m).agreeable);
      if (k < m) {
        CHECK_FALSE(is_km_agreeable(s, k + 1, m).agreeable);
      }
    }
  }
}

TEST_CASE("km agreeability is monotone in k") {
  std::uint64_t seed = 9000;
  for (int trial = 0; trial < 25; ++trial, ++seed) {
    Society s = random_society(spec_for({Axis::linear(), Axis::circular(Rat(1))}, 6, seed,
                                        Rat(1, 4), Rat(1)));
    for (int m = 2; m <= 4; ++m) {
      int top = max_k_for_m(s, m);
      for (int k = 1; k <= m; ++k) {
        CAPTURE(seed);
        CHECK(is_km_agreeable(s, k, m).agreeable == (k <= top));
      }
    }
  }
}

TEST_CASE("agreeing voters are pairwise adjacent: km implies the clique property") {
  std::uint64_t seed = 11000;
  for (int trial = 0; trial < 25; ++trial, ++seed) {
    Society s = random_society(spec_for({Axis::circular(Rat(1)), Axis::circular(Rat(1))}, 6, seed,
                                        Rat(1, 4), Rat(1)));
    AgreementGraph g = agreement_graph(s);
    for (int m = 2; m <= 4; ++m) {
      int k = max_k_for_m(s, m);
      if (k >= 2) {
        CAPTURE(seed);
        CHECK(km_clique_property(g, k, m));
      }
    }
  }
}

TEST_CASE("km clique property on small graphs") {
  CHECK(km_clique_property(agreement_graph(fixture("fig3")), 2, 2));
  CHECK(km_clique_property(agreement_graph(fixture("fig5")), 2, 2));

  Axis line = Axis::linear();
  std::vector<Voter> apart;
  for (int i = 0; i < 3; ++i) {
    apart.push_back(Voter{"v" + std::to_string(i),
                          BoxSet({AxisSet::interval(Rat(3 * i), Rat(3 * i + 1))})});
  }
  CHECK_FALSE(km_clique_property(agreement_graph(Society({line}, apart)), 2, 2));
}

TEST_CASE("subset budget") {
  RandomSpec spec;
  spec.spectrum = {Axis::linear()};
  spec.n = 30;
  spec.size_range = {{Rat(1, 2), Rat(1)}};
  spec.seed = 42;
  Society big = random_society(spec);
  CHECK_THROWS_AS(is_km_agreeable(big, 2, 15), BudgetExceededError);
  CHECK_THROWS_AS(max_k_for_m(big, 15), BudgetExceededError);

  SubsetBudget tiny{10, false};
  CHECK_THROWS_AS(is_km_agreeable(fixture("fig2"), 2, 3, tiny), BudgetExceededError);
  SubsetBudget forced{10, true};
  CHECK(is_km_agreeable(fixture("fig2"), 2, 3, forced).agreeable);
  CHECK_THROWS_AS(km_clique_property(agreement_graph(big), 2, 15), BudgetExceededError);
}

TEST_CASE("agreement never exceeds the clique number; equality on lines") {
  std::uint64_t seed = 17000;
  for (int trial = 0; trial < 40; ++trial, ++seed) {
    Society linear = random_society(spec_for({Axis::linear()}, 2 + trial % 9, seed,
                                             Rat(0), Rat(1)));
    CAPTURE(seed);
    CHECK(agreement_number(linear).number ==
          clique_number(agreement_graph(linear)).number);

    Society torus = random_society(spec_for({Axis::circular(Rat(1)), Axis::circular(Rat(1))},
                                            2 + trial % 9, seed, Rat(0), Rat(1)));
    CHECK(agreement_number(torus).number <= clique_number(agreement_graph(torus)).number);
  }
}

TEST_CASE("circular agreement sits above half the clique number") {
  std::uint64_t seed = 19000;
  for (int trial = 0; trial < 60; ++trial, ++seed) {
    Society s = random_society(spec_for({Axis::circular(Rat(1))}, 2 + trial % 9, seed,
                                        Rat(1, 8), Rat(1)));
    int omega = clique_number(agreement_graph(s)).number;
    CAPTURE(seed);
    CHECK(agreement_number(s).number >= (omega + 2) / 2);  // ceil((omega+1)/2)
  }
}

TEST_CASE("projections bound the product agreement from above") {
  std::uint64_t seed = 21000;
  for (int trial = 0; trial < 40; ++trial, ++seed) {
    Society s = random_society(spec_for({Axis::linear(), Axis::circular(Rat(1))}, 2 + trial % 8,
                                        seed, Rat(1, 4), Rat(1)));
    int a = agreement_number(s).number;
    CAPTURE(seed);
    CHECK(a <= agreement_number(project(s, 0)).number);
    CHECK(a <= agreement_number(project(s, 1)).number);
  }
}

TEST_CASE("projections of agreeable societies stay agreeable") {
  std::uint64_t seed = 23000;
  for (int trial = 0; trial < 30; ++trial, ++seed) {
    Society s = random_society(spec_for({Axis::linear(), Axis::linear()}, 4 + trial % 6, seed,
                                        Rat(1, 4), Rat(1)));
    for (int m = 2; m <= 3; ++m) {
      int k = max_k_for_m(s, m);
      if (k >= 2) {
        CAPTURE(seed);
        CHECK(is_km_agreeable(project(s, 0), k, m).agreeable);
        CHECK(is_km_agreeable(project(s, 1), k, m).agreeable);
      }
    }
  }
}

TEST_CASE("cut-unroll identities at a maximal witness") {
  std::uint64_t seed = 15000;
  for (int trial = 0; trial < 60; ++trial, ++seed) {
    // Sizes up to the full circle: the size identity holds regardless.
    Society s = random_society(spec_for({Axis::circular(Rat(1))}, 2 + trial % 8, seed,
                                        Rat(1, 4), Rat(1)));
    AgreementResult r = agreement_number(s);
    Society unrolled = cut_unroll(s, r.witness[0]);
    CAPTURE(seed);
    CHECK(unrolled.size() == s.size() + static_cast<std::size_t>(r.number));

    bool has_full_circle = false;
    for (const Voter& v : s.voters()) {
      has_full_circle = has_full_circle || v.box.factor(0).length() == Rat(1);
    }
    if (!has_full_circle) {
      // With proper arcs the two pieces of a cut set stay disjoint, so the
      // agreement number survives the unrolling.
      CHECK(agreement_number(unrolled).number == r.number);
    }
  }

  // A full circle is the boundary case: its pieces touch, so the touching
  // platform is counted once per piece.
  Axis circle = Axis::circular(Rat(360));
  Society full({circle}, {Voter{"v", BoxSet({AxisSet::arc(Rat(90), Rat(360), circle)})}});
  CHECK(agreement_number(full).number == 1);
  CHECK(agreement_number(cut_unroll(full, Rat(0))).number == 2);
}

TEST_CASE("translation invariance of the measurable quantities") {
  std::uint64_t seed = 13000;
  for (int trial = 0; trial < 20; ++trial, ++seed) {
    Society s = random_society(spec_for({Axis::circular(Rat(1)), Axis::circular(Rat(1))},
                                        5, seed, Rat(1, 5), Rat(1)));
    std::vector<Voter> shifted;
    for (const Voter& v : s.voters()) {
      shifted.push_back(Voter{
          v.name, BoxSet({AxisSet::arc(reduce_mod(v.box.factor(0).start() + Rat(3, 7), Rat(1)),
                                       v.box.factor(0).length(), s.axis(0)),
                          AxisSet::arc(reduce_mod(v.box.factor(1).start() + Rat(5, 11), Rat(1)),
                                       v.box.factor(1).length(), s.axis(1))})});
    }
    Society t(s.spectrum(), shifted);
    CAPTURE(seed);
    CHECK(agreement_number(s).number == agreement_number(t).number);
    CHECK(clique_number(agreement_graph(s)).number == clique_number(agreement_graph(t)).number);
    CHECK(is_km_agreeable(s, 2, 2).agreeable == is_km_agreeable(t, 2, 2).agreeable);
  }
}
