#include "doctest.h"
#include "oracles.hpp"
#include "spreadlab/errors.hpp"
#include <set>
#include "spreadlab/perm_group.hpp"

using namespace spreadlab;

namespace {
PermGroup make(unsigned deg, std::initializer_list<const char*> cycles) {
  std::vector<Permutation> gens;
  for (auto c : cycles) gens.push_back(Permutation::from_cycles(deg, c));
  return PermGroup(std::move(gens));
}
}  // namespace

TEST_SUITE("perm_group") {

TEST_CASE("orders of familiar groups") {
  CHECK(make(5, {"(1,2,3,4,5)", "(1,2,3)"}).order() == 60);  // Alt5
  CHECK(make(2, {"(1,2)"}).order() == 2);
  CHECK(make(6, {"(1,2)", "(1,2,3,4,5,6)"}).order() == 720);  // Sym6
  CHECK(make(7, {"(1,2,3,4,5,6,7)", "(1,2)"}).order() == 5040);
  CHECK(make(4, {"(1,2)(3,4)", "(1,3)(2,4)"}).order() == 4);  // V4
  CHECK(make(7, {"(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"}).order() == 21);  // C7:C3
  CHECK(PermGroup::trivial(3).order() == 1);
  CHECK(PermGroup(3, {Permutation(3)}).order() == 1);
}

TEST_CASE("order equals exhaustive closure on a battery") {
  // the oracle check from the module invariants
  std::vector<PermGroup> gs;
  gs.push_back(make(5, {"(1,2,3,4,5)", "(1,2,3)"}));
  gs.push_back(make(6, {"(1,2)", "(1,2,3,4,5,6)"}));
  gs.push_back(make(6, {"(1,2,3)", "(4,5,6)", "(1,4)(2,5)(3,6)"}));
  gs.push_back(make(8, {"(1,2,3,4,5,6,7,8)", "(2,8)(3,7)(4,6)"}));  // D8
  gs.push_back(make(4, {"(1,2,3,4)", "(1,2)"}));
  gs.push_back(make(7, {"(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"}));
  gs.push_back(make(3, {"(1,2)", "(2,3)", "(1,3)"}));  // redundant gens
  for (const auto& g : gs)
    CHECK(g.order() == oracle::closure_order(g.generators()));
}

TEST_CASE("membership is exact") {
  auto a5 = make(5, {"(1,2,3,4,5)", "(1,2,3)"});
  CHECK(a5.contains(Permutation::from_cycles(5, "(1,2)(3,4)")));
  CHECK(!a5.contains(Permutation::from_cycles(5, "(1,2)")));
  CHECK(a5.contains(Permutation(5)));

  auto all = oracle::closure(a5.generators());
  std::size_t in = 0;
  for (const auto& p : all)
    if (a5.contains(p)) ++in;
  CHECK(in == all.size());
}

TEST_CASE("element table is sorted and indexable") {
  auto s4 = make(4, {"(1,2,3,4)", "(1,2)"});
  Config cfg;
  const auto& tbl = s4.elements(cfg);
  CHECK(tbl.size() == 24);
  CHECK(tbl.at(0).is_identity());  // ascending images put the identity first
  for (std::uint32_t i = 1; i < tbl.size(); ++i) CHECK(tbl.at(i - 1) < tbl.at(i));
  for (std::uint32_t i = 0; i < tbl.size(); ++i)
    CHECK(tbl.index_of(tbl.at(i)) == i);
  CHECK(tbl.index_of(Permutation::from_cycles(4, "(1,2)")) >= 0);
}

TEST_CASE("bound errors carry the limit") {
  auto s6 = make(6, {"(1,2)", "(1,2,3,4,5,6)"});
  Config cfg;
  cfg.element_enum_bound = 100;
  CHECK_THROWS_AS(s6.elements(cfg), BoundExceeded);
}

TEST_CASE("cyclic and abelian detection") {
  CHECK(make(6, {"(1,2,3,4,5,6)"}).is_cyclic());
  CHECK(!make(4, {"(1,2)(3,4)", "(1,3)(2,4)"}).is_cyclic());
  CHECK(make(4, {"(1,2)(3,4)", "(1,3)(2,4)"}).is_abelian());
  CHECK(!make(5, {"(1,2,3,4,5)", "(1,2,3)"}).is_cyclic());
  // C6 given by two generators
  CHECK(make(5, {"(1,2)", "(3,4,5)"}).is_cyclic());
}

TEST_CASE("uniform random elements hit the whole group") {
  auto s3 = make(3, {"(1,2)", "(2,3)"});
  std::mt19937_64 rng(7);
  std::set<std::string> seen;
  for (int i = 0; i < 200; ++i) seen.insert(s3.random_element(rng).cycle_string());
  CHECK(seen.size() == 6);
}

}  // TEST_SUITE
