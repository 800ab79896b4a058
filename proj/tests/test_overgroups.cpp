#include <random>
#include <set>
#include <map>
#include <algorithm>

#include "doctest.h"
#include "spreadlab/genlib.hpp"
#include "spreadlab/overgroups.hpp"

using namespace spreadlab;
using namespace spreadlab::overgroups;

namespace {
PermGroup make(unsigned deg, std::initializer_list<const char*> cycles) {
  std::vector<Permutation> gens;
  for (auto c : cycles) gens.push_back(Permutation::from_cycles(deg, c));
  return PermGroup(std::move(gens));
}
Permutation cyc(unsigned deg, const char* s) { return Permutation::from_cycles(deg, s); }
}  // namespace

TEST_SUITE("overgroups") {

TEST_CASE("maximal subgroups of Alt5: A4, D10, S3 classes") {
  Config cfg;
  auto a5 = make(5, {"(1,2,3,4,5)", "(1,2,3)"});
  auto mx = all_maximal_subgroups(a5, cfg);
  REQUIRE(mx->class_count == 3);
  std::multiset<std::uint64_t> orders;
  std::map<std::uint64_t, std::size_t> per_class_size;
  for (std::size_t i = 0; i < mx->subgroups.size(); ++i)
    orders.insert(mx->subgroups[i].order);
  CHECK(orders.count(12) == 5);   // point stabilizers
  CHECK(orders.count(10) == 6);   // dihedral
  CHECK(orders.count(6) == 10);   // Sym3 type
  CHECK(mx->subgroups.size() == 21);
}

TEST_CASE("maximal subgroups of Sym4") {
  Config cfg;
  auto s4 = make(4, {"(1,2,3,4)", "(1,2)"});
  auto mx = all_maximal_subgroups(s4, cfg);
  // A4, three D8 (Sylow 2), four S3 (point stabilizers)
  std::multiset<std::uint64_t> orders;
  for (const auto& s : mx->subgroups) orders.insert(s.order);
  CHECK(orders.count(12) == 1);
  CHECK(orders.count(8) == 3);
  CHECK(orders.count(6) == 4);
  CHECK(mx->class_count == 3);
}

TEST_CASE("M(x) for a 5-cycle of Alt5 is a single D10") {
  Config cfg;
  auto a5 = make(5, {"(1,2,3,4,5)", "(1,2,3)"});
  auto mx = maximal_overgroups(a5, cfg, cyc(5, "(1,2,3,4,5)"));
  REQUIRE(mx.members.size() == 1);
  CHECK(mx.members[0].order == 10);
}

TEST_CASE("M(x) for a 3-cycle of Alt5 has orders 12 and 6 only") {
  Config cfg;
  auto a5 = make(5, {"(1,2,3,4,5)", "(1,2,3)"});
  auto mx = maximal_overgroups(a5, cfg, cyc(5, "(1,2,3)"));
  REQUIRE(!mx.members.empty());
  std::multiset<std::uint64_t> orders;
  for (const auto& h : mx.members) orders.insert(h.order);
  for (auto o : orders) CHECK((o == 12 || o == 6));
  CHECK(orders.count(12) == 2);  // stabilizers of the two fixed points
}

TEST_CASE("M(x) is empty for a generator of a cyclic group") {
  Config cfg;
  auto c6 = make(6, {"(1,2,3,4,5,6)"});
  auto mx = maximal_overgroups(c6, cfg, cyc(6, "(1,2,3,4,5,6)"));
  CHECK(mx.members.empty());
}

TEST_CASE("per-anchor DFS route matches the registry route") {
  Config cfg;
  auto s5 = make(5, {"(1,2,3,4,5)", "(1,2)"});
  auto by_registry = maximal_overgroups(s5, cfg, cyc(5, "(1,2,3,4,5)"));
  Config tiny = cfg;
  tiny.all_maximals_bound = 10;  // force the DFS route
  auto by_dfs = maximal_overgroups(s5, tiny, cyc(5, "(1,2,3,4,5)"));
  REQUIRE(by_registry.members.size() == by_dfs.members.size());
  std::multiset<std::uint64_t> a, b;
  for (const auto& h : by_registry.members) a.insert(h.order);
  for (const auto& h : by_dfs.members) b.insert(h.order);
  CHECK(a == b);
  CHECK(by_registry.class_count == by_dfs.class_count);
}

TEST_CASE("reported overgroups pass the random maximality probe") {
  Config cfg;
  auto a5 = make(5, {"(1,2,3,4,5)", "(1,2,3)"});
  auto mx = maximal_overgroups(a5, cfg, cyc(5, "(1,2,3)"));
  std::mt19937_64 rng(cfg.seed);
  for (const auto& h : mx.members) CHECK(verify_maximality(a5, cfg, h, 50, rng));
}

TEST_CASE("fpr values on Alt5") {
  Config cfg;
  auto a5 = make(5, {"(1,2,3,4,5)", "(1,2,3)"});
  const auto& ct = a5.classes(cfg);
  const auto& tbl = a5.elements(cfg);
  // point stabilizer of 5 (order 12) among the maximals
  auto mx = all_maximal_subgroups(a5, cfg);
  const Subgroup* a4 = nullptr;
  for (const auto& h : mx->subgroups)
    if (h.order == 12 && !h.members.test(std::uint32_t(
                             tbl.index_of(cyc(5, "(1,2)(4,5)"))))) {
      // any order-12 member works; pick one not containing (1,2)(4,5) to fix it
      a4 = &h;
    }
  REQUIRE(mx->subgroups.size() > 0);
  const Subgroup& h12 = *std::find_if(mx->subgroups.begin(), mx->subgroups.end(),
                                      [](const Subgroup& s) { return s.order == 12; });
  int c5 = int(ct.class_of(std::uint32_t(tbl.index_of(cyc(5, "(1,2,3,4,5)")))));
  int c3 = int(ct.class_of(std::uint32_t(tbl.index_of(cyc(5, "(1,2,3)")))));
  int c1 = int(ct.class_of(tbl.identity_index()));
  CHECK(fpr(a5, cfg, std::uint32_t(c5), h12) == Rational(0, 1));
  CHECK(fpr(a5, cfg, std::uint32_t(c3), h12) == Rational(2, 5));
  CHECK(fpr(a5, cfg, std::uint32_t(c1), h12) == Rational(1, 1));
  (void)a4;
}

TEST_CASE("fpr double count: class intersection equals fixed cosets") {
  Config cfg;
  for (auto g : {make(5, {"(1,2,3,4,5)", "(1,2,3)"}), make(4, {"(1,2,3,4)", "(1,2)"}),
                 make(6, {"(1,2)", "(1,2,3,4,5,6)"})}) {
    const auto& ct = g.classes(cfg);
    const auto& tbl = g.elements(cfg);
    auto mx = all_maximal_subgroups(g, cfg);
    for (std::uint32_t ci = 0; ci < mx->class_count; ++ci) {
      const Subgroup& h = mx->subgroups[mx->class_rep[ci]];
      for (std::uint32_t zc = 0; zc < ct.count(); ++zc) {
        auto a = fpr_class_intersection(g, cfg, zc, h);
        auto b = fpr_coset_count(g, cfg, tbl.at(ct.at(zc).rep), h);
        CHECK(a == b);
      }
    }
  }
}

TEST_CASE("prob_bound on Alt5 matches the derived fractions") {
  Config cfg;
  auto a5 = make(5, {"(1,2,3,4,5)", "(1,2,3)"});
  auto bounds = prob_bound(a5, cfg, cyc(5, "(1,2,3,4,5)"));
  // single D10 overgroup: involutions 5/15 = 1/3, 3-elements 0
  std::map<std::string, Rational> by_label(bounds.begin(), bounds.end());
  CHECK(by_label.at("2a") == Rational(1, 3));
  CHECK(by_label.at("3a") == Rational(0, 1));
}

TEST_CASE("sandwich: exact_P <= prob_bound on Alt5 and Sym4") {
  Config cfg;
  for (auto g : {make(5, {"(1,2,3,4,5)", "(1,2,3)"}), make(4, {"(1,2,3,4)", "(1,2)"})}) {
    const auto& ct = g.classes(cfg);
    const auto& tbl = g.elements(cfg);
    for (std::uint32_t xc = 0; xc < ct.count(); ++xc) {
      if (ct.at(xc).element_order == 1) continue;
      auto bounds = prob_bound(g, cfg, tbl.at(ct.at(xc).rep));
      std::map<std::string, Rational> by_label(bounds.begin(), bounds.end());
      for (std::uint32_t zc = 0; zc < ct.count(); ++zc) {
        if (ct.at(zc).element_order == 1) continue;
        auto p = genlib::exact_P(g, cfg, tbl.at(ct.at(zc).rep), int(xc));
        CHECK(p <= by_label.at(ct.at(zc).label));
      }
    }
  }
}

TEST_CASE("certify_uspread on Alt5 5-cycle class at k=2") {
  Config cfg;
  auto a5 = make(5, {"(1,2,3,4,5)", "(1,2,3)"});
  const auto& ct = a5.classes(cfg);
  const auto& tbl = a5.elements(cfg);
  int c5 = int(ct.class_of(std::uint32_t(tbl.index_of(cyc(5, "(1,2,3,4,5)")))));
  auto cert = certify_uspread(a5, cfg, c5, 2, CertifyMode::FprBound);
  CHECK(cert.certified);
  CHECK(cert.max_value == Rational(1, 3));
  auto exact = certify_uspread(a5, cfg, c5, 2, CertifyMode::ExactP);
  CHECK(exact.certified);
  // the involution class has a fixed-point-ratio sum above 1, so k=1 refuses
  int c2 = int(ct.class_of(std::uint32_t(tbl.index_of(cyc(5, "(1,2)(3,4)")))));
  auto bad = certify_uspread(a5, cfg, c2, 1, CertifyMode::FprBound);
  CHECK(!bad.certified);
  CHECK(bad.max_value >= Rational(1, 1));
}

TEST_CASE("certification soundness: certified (C,k) implies witness_check true") {
  Config cfg;
  auto a5 = make(5, {"(1,2,3,4,5)", "(1,2,3)"});
  const auto& ct = a5.classes(cfg);
  for (std::uint32_t ci = 0; ci < ct.count(); ++ci) {
    if (ct.at(ci).element_order == 1) continue;
    for (std::uint32_t k = 1; k <= 3; ++k) {
      auto cert = certify_uspread(a5, cfg, int(ci), k, CertifyMode::ExactP);
      if (cert.certified) {
        auto w = genlib::witness_check(a5, cfg, int(ci), k);
        CHECK(w.outcome == genlib::WitnessResult::Outcome::Witnesses);
      }
    }
  }
}

TEST_CASE("socle filter keeps only complements") {
  Config cfg;
  auto s6 = make(6, {"(1,2)", "(1,2,3,4,5,6)"});
  auto a6 = make(6, {"(1,2,3)", "(2,3,4,5,6)"});
  auto x = cyc(6, "(1,2,3,4,5,6)");
  auto unfiltered = maximal_overgroups(s6, cfg, x);
  auto filtered = maximal_overgroups(s6, cfg, x, &a6);
  CHECK(filtered.members.size() <= unfiltered.members.size());
  // Alt6 itself contains no odd permutation, so it never passes the filter,
  // and every kept H satisfies |H A6| = |G|
  for (const auto& h : filtered.members) CHECK(h.order != 360);
}

}  // TEST_SUITE
