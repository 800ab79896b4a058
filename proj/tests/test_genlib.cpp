#include "doctest.h"
#include "oracles.hpp"
#include "spreadlab/errors.hpp"
#include "spreadlab/genlib.hpp"

using namespace spreadlab;
using namespace spreadlab::genlib;

namespace {
PermGroup make(unsigned deg, std::initializer_list<const char*> cycles) {
  std::vector<Permutation> gens;
  for (auto c : cycles) gens.push_back(Permutation::from_cycles(deg, c));
  return PermGroup(std::move(gens));
}
Permutation cyc(unsigned deg, const char* s) { return Permutation::from_cycles(deg, s); }
}  // namespace

TEST_SUITE("genlib") {

TEST_CASE("generates basics") {
  auto a5 = make(5, {"(1,2,3,4,5)", "(1,2,3)"});
  CHECK(generates(a5, cyc(5, "(1,2,3,4,5)"), cyc(5, "(1,2,3)")));
  CHECK(!generates(a5, cyc(5, "(1,2,3,4,5)"), cyc(5, "(2,5)(3,4)")));  // inside D10
  // identity partner: true iff <y> = G
  auto c5 = make(5, {"(1,2,3,4,5)"});
  CHECK(generates(c5, Permutation(5), cyc(5, "(1,2,3,4,5)")));
  CHECK(!generates(a5, Permutation(5), cyc(5, "(1,2,3,4,5)")));
  CHECK_THROWS_AS(generates(a5, cyc(5, "(1,2)"), cyc(5, "(1,2,3)")), MembershipError);
}

TEST_CASE("a V4 involution of Sym4 never lies in a generating pair") {
  auto s4 = make(4, {"(1,2,3,4)", "(1,2)"});
  auto x = cyc(4, "(1,2)(3,4)");
  auto all = oracle::closure(s4.generators());
  for (const auto& y : all) CHECK(!generates(s4, x, y));
}

TEST_CASE("NonGen sets for the 5-cycle class of Alt5") {
  auto a5 = make(5, {"(1,2,3,4,5)", "(1,2,3)"});
  Config cfg;
  const auto& tbl = a5.elements(cfg);
  const auto& ct = a5.classes(cfg);
  auto rep = tbl.index_of(cyc(5, "(1,2,3,4,5)"));
  int cid = int(ct.class_of(std::uint32_t(rep)));
  auto fam = nongen_family(a5, cfg, Domain::Class, cid);
  REQUIRE(fam.sets.size() == 12);
  for (std::size_t i = 0; i < fam.sets.size(); ++i) {
    // count member orders inside NonGen(y)
    std::size_t invol = 0, threes = 0, fives = 0;
    fam.sets[i].for_each([&](std::size_t p) {
      auto o = tbl.at(fam.universe[p]).element_order();
      if (o == 2) ++invol;
      if (o == 3) ++threes;
      if (o == 5) ++fives;
    });
    // brute-force ground truth: the unique maximal overgroup of a 5-cycle is
    // dihedral of order 10, so 5 involutions and the 4 powers of y fail
    CHECK(invol == 5);
    CHECK(threes == 0);
    CHECK(fives == 4);
  }
}

TEST_CASE("NonGen sets are empty exactly for generators of a cyclic group") {
  auto c6 = make(6, {"(1,2,3,4,5,6)"});
  Config cfg;
  const auto& tbl = c6.elements(cfg);
  auto fam = nongen_family(c6, cfg, Domain::All);
  for (std::size_t i = 0; i < fam.y_list.size(); ++i) {
    bool gen = tbl.at(fam.y_list[i]).element_order() == 6;
    CHECK(fam.sets[i].none() == gen);
  }
}

TEST_CASE("a 6-cycle of Sym6 fails with some prime-order elements") {
  auto s6 = make(6, {"(1,2)", "(1,2,3,4,5,6)"});
  Config cfg;
  const auto& tbl = s6.elements(cfg);
  const auto& ct = s6.classes(cfg);
  auto rep = tbl.index_of(cyc(6, "(1,2,3,4,5,6)"));
  int cid = int(ct.class_of(std::uint32_t(rep)));
  auto fam = nongen_family(s6, cfg, Domain::Class, cid);
  for (const auto& s : fam.sets) CHECK(s.any());
}

TEST_CASE("spread matches the paper's desk values") {
  Config cfg;
  auto s6 = make(6, {"(1,2)", "(1,2,3,4,5,6)"});
  auto c33 = make(6, {"(1,2,3)", "(4,5,6)"});
  auto s4 = make(4, {"(1,2,3,4)", "(1,2)"});
  auto a5 = make(5, {"(1,2,3,4,5)", "(1,2,3)"});

  auto r1 = spread_exact(s6, cfg);
  CHECK(r1.value == SpreadValue::finite(2));
  CHECK(r1.blocking_set.size() == 3);
  CHECK(verify_blocking_set(s6, cfg, r1.blocking_set, Domain::All));

  CHECK(spread_exact(c33, cfg).value == SpreadValue::finite(3));
  CHECK(spread_exact(s4, cfg).value == SpreadValue::finite(0));
  CHECK(spread_exact(a5, cfg).value == SpreadValue::finite(2));
  CHECK(spread_exact(make(6, {"(1,2,3,4,5,6)"}), cfg).value.infinite);
}

TEST_CASE("uniform spread of Alt6 is 2 with the unique 4-cycle witness") {
  Config cfg;
  auto a6 = make(6, {"(1,2,3)", "(2,3,4,5,6)"});
  REQUIRE(a6.order() == 360);
  auto r = uniform_spread_exact(a6, cfg);
  CHECK(r.value == SpreadValue::finite(2));
  CHECK(r.witness_class == "4a");
  // uniqueness: exactly one class attains u_C >= 2
  int attaining = 0;
  for (const auto& [label, v] : r.per_class)
    if (!v.infinite && !v.indeterminate && v.k >= 2) ++attaining;
  CHECK(attaining == 1);
}

TEST_CASE("uniform spread: Sym6 is 0, C5xC5 is 0 with spread 5") {
  Config cfg;
  auto s6 = make(6, {"(1,2)", "(1,2,3,4,5,6)"});
  CHECK(uniform_spread_exact(s6, cfg).value == SpreadValue::finite(0));
  auto c55 = make(10, {"(1,2,3,4,5)", "(6,7,8,9,10)"});
  CHECK(uniform_spread_exact(c55, cfg).value == SpreadValue::finite(0));
  CHECK(spread_exact(c55, cfg).value == SpreadValue::finite(5));
}

TEST_CASE("witness_check on the Sym6 6-cycle class fails at k=1") {
  Config cfg;
  auto s6 = make(6, {"(1,2)", "(1,2,3,4,5,6)"});
  const auto& tbl = s6.elements(cfg);
  const auto& ct = s6.classes(cfg);
  auto rep = tbl.index_of(cyc(6, "(1,2,3,4,5,6)"));
  int cid = int(ct.class_of(std::uint32_t(rep)));
  auto w = witness_check(s6, cfg, cid, 1);
  CHECK(w.outcome == WitnessResult::Outcome::Fails);
  REQUIRE(w.blocking.size() == 1);
  // the blocking element defeats every 6-cycle
  for (auto y : ct.at(std::size_t(cid)).members.to_indices())
    CHECK(!generates(s6, w.blocking[0], tbl.at(y)));
}

TEST_CASE("witness monotonicity in k") {
  Config cfg;
  auto a5 = make(5, {"(1,2,3,4,5)", "(1,2,3)"});
  const auto& ct = a5.classes(cfg);
  const auto& tbl = a5.elements(cfg);
  auto rep = tbl.index_of(cyc(5, "(1,2,3,4,5)"));
  int cid = int(ct.class_of(std::uint32_t(rep)));
  auto w2 = witness_check(a5, cfg, cid, 2);
  auto w1 = witness_check(a5, cfg, cid, 1);
  CHECK(w2.outcome == WitnessResult::Outcome::Witnesses);
  CHECK(w1.outcome == WitnessResult::Outcome::Witnesses);
  auto w3 = witness_check(a5, cfg, cid, 3);
  CHECK(w3.outcome == WitnessResult::Outcome::Fails);  // u(Alt5) = 2
}

TEST_CASE("restricted spread s0/u0 for Sym6 over Alt6") {
  Config cfg;
  auto s6 = make(6, {"(1,2)", "(1,2,3,4,5,6)"});
  auto a6 = make(6, {"(1,2,3)", "(2,3,4,5,6)"});
  auto s0 = restricted_spread(s6, a6, cfg, RestrictedKind::S0);
  CHECK(s0 == SpreadValue::finite(2));
  // the paper's explicit blocking triple really blocks
  std::vector<Permutation> triple = {cyc(6, "(1,2)(3,4)"), cyc(6, "(1,2)(5,6)"),
                                     cyc(6, "(3,4)(5,6)")};
  CHECK(verify_blocking_set(s6, cfg, triple, Domain::All));

  // a class witnesses u0 >= 1 iff its elements have order 6
  const auto& ct = s6.classes(cfg);
  for (std::uint32_t ci = 0; ci < ct.count(); ++ci) {
    if (ct.at(ci).element_order == 1) continue;
    auto w = restricted_witness_check(s6, a6, cfg, int(ci), 1);
    bool witnesses = w.outcome == WitnessResult::Outcome::Witnesses;
    CHECK(witnesses == (ct.at(ci).element_order == 6));
  }
  auto u0 = restricted_spread(s6, a6, cfg, RestrictedKind::U0);
  CHECK(u0 == SpreadValue::finite(1));
}

TEST_CASE("restricted spread can be infinite") {
  Config cfg;
  // Sym3 with N = C3: every nontrivial element of N generates with any
  // transposition, so no blocking set inside N exists
  auto s3 = make(3, {"(1,2)", "(1,2,3)"});
  auto c3 = make(3, {"(1,2,3)"});
  CHECK(restricted_spread(s3, c3, cfg, RestrictedKind::S0).infinite);
}

TEST_CASE("exact_P values on Alt5") {
  Config cfg;
  auto a5 = make(5, {"(1,2,3,4,5)", "(1,2,3)"});
  const auto& tbl = a5.elements(cfg);
  const auto& ct = a5.classes(cfg);
  auto rep = tbl.index_of(cyc(5, "(1,2,3,4,5)"));
  int c5a = int(ct.class_of(std::uint32_t(rep)));
  CHECK(exact_P(a5, cfg, cyc(5, "(1,2)(3,4)"), c5a) == Rational(1, 3));
  CHECK(exact_P(a5, cfg, cyc(5, "(1,2,3)"), c5a) == Rational(0, 1));
  // a generator z has P = 0 against every class
  auto c6 = make(6, {"(1,2,3,4,5,6)"});
  const auto& km = c6.classes(cfg);
  for (std::uint32_t ci = 0; ci < km.count(); ++ci)
    CHECK(exact_P(c6, cfg, cyc(6, "(1,2,3,4,5,6)"), int(ci)) == Rational(0, 1));
}

TEST_CASE("exact_P is conjugation invariant") {
  Config cfg;
  auto s5 = make(5, {"(1,2,3,4,5)", "(1,2)"});
  const auto& ct = s5.classes(cfg);
  std::mt19937_64 rng(17);
  auto z = cyc(5, "(1,2)");
  for (int t = 0; t < 5; ++t) {
    auto g = s5.random_element(rng);
    for (std::uint32_t ci = 1; ci < ct.count(); ++ci)
      CHECK(exact_P(s5, cfg, z, int(ci)) == exact_P(s5, cfg, z.conjugated_by(g), int(ci)));
  }
}

TEST_CASE("oracle equivalence: hitting-set spread equals definitional brute force") {
  Config cfg;
  std::vector<PermGroup> pool = {
      make(4, {"(1,2)(3,4)", "(1,3)(2,4)"}),                // C2xC2
      make(6, {"(1,2,3)", "(4,5,6)"}),                      // C3xC3
      make(3, {"(1,2)", "(1,2,3)"}),                        // Sym3
      make(4, {"(1,2,3,4)", "(1,2)"}),                      // Sym4
      make(4, {"(1,2)(3,4)", "(1,2,3)"}),                   // Alt4
      make(4, {"(1,2,3,4)", "(1,3)"}),                      // D8
      make(7, {"(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"}),       // C7:C3
      make(5, {"(1,2,3,4,5)", "(2,5)(3,4)"}),               // D10
      make(6, {"(1,2,3,4,5,6)", "(2,6)(3,5)"}),             // D12
  };
  for (const auto& g : pool) {
    auto all = oracle::closure(g.generators());
    auto bs = oracle::brute_spread(all, 8);
    auto r = spread_exact(g, cfg);
    REQUIRE(!r.value.indeterminate);
    REQUIRE(bs >= 0);
    CHECK(r.value == SpreadValue::finite(std::uint64_t(bs)));

    auto bu = oracle::brute_uniform_spread(all, oracle::brute_classes(all), 8);
    auto ru = uniform_spread_exact(g, cfg);
    REQUIRE(bu >= 0);
    CHECK(ru.value == SpreadValue::finite(std::uint64_t(bu)));
    CHECK(ru.value.k <= r.value.k);  // u <= s
  }
}

TEST_CASE("u1 witness finder agrees with witness_check") {
  Config cfg;
  auto a5 = make(5, {"(1,2,3,4,5)", "(1,2,3)"});
  int cid = find_u1_witness_class(a5, cfg);
  REQUIRE(cid >= 0);
  CHECK(witness_check(a5, cfg, cid, 1).outcome == WitnessResult::Outcome::Witnesses);
  // Sym4 has u = 0: no class works
  CHECK(find_u1_witness_class(make(4, {"(1,2,3,4)", "(1,2)"}), cfg) == -1);
}

TEST_CASE("trivial group is rejected upstream") {
  Config cfg;
  CHECK_THROWS_AS(spread_exact(PermGroup::trivial(2), cfg), InvalidInput);
}

}  // TEST_SUITE
