#include "doctest.h"
#include "oracles.hpp"
#include "spreadlab/classes.hpp"
#include "spreadlab/perm_group.hpp"

#include <set>

using namespace spreadlab;

namespace {
PermGroup make(unsigned deg, std::initializer_list<const char*> cycles) {
  std::vector<Permutation> gens;
  for (auto c : cycles) gens.push_back(Permutation::from_cycles(deg, c));
  return PermGroup(std::move(gens));
}
}  // namespace

TEST_SUITE("classes") {

TEST_CASE("Alt5 has 5 classes of known sizes") {
  auto g = make(5, {"(1,2,3,4,5)", "(1,2,3)"});
  Config cfg;
  const auto& ct = g.classes(cfg);
  REQUIRE(ct.count() == 5);
  std::multiset<std::uint64_t> sizes;
  for (const auto& c : ct.all()) sizes.insert(c.size);
  CHECK(sizes == std::multiset<std::uint64_t>{1, 15, 20, 12, 12});
  CHECK(ct.at(0).element_order == 1);  // identity class first
  CHECK(ct.at(0).label == "1a");
}

TEST_CASE("C2xC2 has 4 singleton classes") {
  auto g = make(4, {"(1,2)(3,4)", "(1,3)(2,4)"});
  Config cfg;
  const auto& ct = g.classes(cfg);
  REQUIRE(ct.count() == 4);
  for (const auto& c : ct.all()) CHECK(c.size == 1);
}

TEST_CASE("Sym6 separates the two order-6 cycle types") {
  auto g = make(6, {"(1,2)", "(1,2,3,4,5,6)"});
  Config cfg;
  const auto& ct = g.classes(cfg);
  const auto& tbl = g.elements(cfg);
  auto six_cycle = tbl.index_of(Permutation::from_cycles(6, "(1,2,3,4,5,6)"));
  auto mixed = tbl.index_of(Permutation::from_cycles(6, "(1,2,3)(4,5)"));
  REQUIRE(six_cycle >= 0);
  REQUIRE(mixed >= 0);
  CHECK(ct.class_of(std::uint32_t(six_cycle)) != ct.class_of(std::uint32_t(mixed)));
  CHECK(ct.at(ct.class_of(std::uint32_t(six_cycle))).element_order == 6);
  CHECK(ct.at(ct.class_of(std::uint32_t(mixed))).element_order == 6);
}

TEST_CASE("class equation and centralizer product") {
  for (auto g : {make(4, {"(1,2,3,4)", "(1,2)"}), make(5, {"(1,2,3,4,5)", "(1,2,3)"}),
                 make(7, {"(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"})}) {
    Config cfg;
    const auto& ct = g.classes(cfg);
    std::uint64_t sum = 0;
    for (const auto& c : ct.all()) {
      sum += c.size;
      CHECK(g.order() % c.size == 0);
      CHECK(c.size * ct.centralizer_order(c.rep, g.order()) == g.order());
    }
    CHECK(sum == g.order());
  }
}

TEST_CASE("centralizer orders match direct counts") {
  auto g = make(5, {"(1,2,3,4,5)", "(1,2,3)"});
  Config cfg;
  auto x = Permutation::from_cycles(5, "(1,2,3,4,5)");
  CHECK(centralizer_order(g, x, cfg) == 5);
  CHECK(centralizer_order(g, Permutation(5), cfg) == 60);
  // direct commuting count as the oracle
  auto all = oracle::closure(g.generators());
  std::size_t commuting = 0;
  for (const auto& e : all)
    if (e * x == x * e) ++commuting;
  CHECK(commuting == 5);

  auto v4 = make(4, {"(1,2)(3,4)", "(1,3)(2,4)"});
  for (const auto& e : oracle::closure(v4.generators()))
    CHECK(centralizer_order(v4, e, cfg) == 4);
}

TEST_CASE("labels are conjugation-invariant") {
  auto g = make(6, {"(1,2)", "(1,2,3,4,5,6)"});
  Config cfg;
  const auto& ct = g.classes(cfg);
  const auto& tbl = g.elements(cfg);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    auto x = g.random_element(rng);
    auto c = g.random_element(rng);
    auto xi = tbl.index_of(x);
    auto xc = tbl.index_of(x.conjugated_by(c));
    CHECK(ct.class_of(std::uint32_t(xi)) == ct.class_of(std::uint32_t(xc)));
  }
}

TEST_CASE("classes match the brute-force partition") {
  auto g = make(4, {"(1,2,3,4)", "(1,2)"});
  Config cfg;
  const auto& ct = g.classes(cfg);
  auto all = oracle::closure(g.generators());
  auto bc = oracle::brute_classes(all);
  CHECK(bc.size() == ct.count());
}

TEST_CASE("labels by order then size") {
  auto g = make(6, {"(1,2)", "(1,2,3,4,5,6)"});
  Config cfg;
  const auto& ct = g.classes(cfg);
  // Sym6: 11 classes
  CHECK(ct.count() == 11);
  CHECK(ct.find_label("1a") == 0);
  CHECK(ct.find_label("6a") >= 0);
  CHECK(ct.find_label("6b") >= 0);
  CHECK(ct.find_label("7a") == -1);
  CHECK(ct.classes_of_order(2).size() == 3);
}

}  // TEST_SUITE
