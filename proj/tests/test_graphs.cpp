#include "doctest.h"
#include <random>
#include "spreadlab/errors.hpp"
#include "spreadlab/genlib.hpp"
#include "spreadlab/graphs.hpp"

using namespace spreadlab;
using namespace spreadlab::graphs;

namespace {
PermGroup make(unsigned deg, std::initializer_list<const char*> cycles) {
  std::vector<Permutation> gens;
  for (auto c : cycles) gens.push_back(Permutation::from_cycles(deg, c));
  return PermGroup(std::move(gens));
}
}  // namespace

TEST_SUITE("graphs") {

TEST_CASE("C2xC2 gives the complete graph on 3 vertices") {
  Config cfg;
  auto g = make(4, {"(1,2)(3,4)", "(1,3)(2,4)"});
  auto gg = generating_graph(g, cfg);
  REQUIRE(gg.vertex_count() == 3);
  CHECK(gg.edge_count == 3);
  CHECK(!gg.has_isolated());
  CHECK(gg.diameter() == 1);
}

TEST_CASE("Sym4 has isolated vertices, e.g. (1,2)(3,4)") {
  Config cfg;
  auto g = make(4, {"(1,2,3,4)", "(1,2)"});
  auto gg = generating_graph(g, cfg);
  const auto& tbl = g.elements(cfg);
  auto iso = gg.isolated_vertices();
  REQUIRE(!iso.empty());
  bool v4_isolated = false;
  for (auto v : iso)
    if (tbl.at(gg.vertex_elem[v]) == Permutation::from_cycles(4, "(1,2)(3,4)"))
      v4_isolated = true;
  CHECK(v4_isolated);
}

TEST_CASE("Alt5 is connected with diameter 2") {
  Config cfg;
  auto g = make(5, {"(1,2,3,4,5)", "(1,2,3)"});
  auto gg = generating_graph(g, cfg);
  CHECK(!gg.has_isolated());
  CHECK(gg.connected());
  CHECK(gg.diameter() == 2);
}

TEST_CASE("dichotomy branches") {
  Config cfg;
  CHECK(dichotomy_check(make(6, {"(1,2)", "(1,2,3,4,5,6)"}), cfg).branch ==
        DichotomyResult::Branch::DiameterAtMostTwo);
  CHECK(dichotomy_check(make(4, {"(1,2,3,4)", "(1,2)"}), cfg).branch ==
        DichotomyResult::Branch::Isolated);
  CHECK(dichotomy_check(make(6, {"(1,2,3,4,5,6)"}), cfg).branch ==
        DichotomyResult::Branch::DiameterAtMostTwo);
}

TEST_CASE("degrees are conjugation invariant and the handshake holds") {
  Config cfg;
  auto g = make(5, {"(1,2,3,4,5)", "(1,2)"});
  auto gg = generating_graph(g, cfg);
  const auto& tbl = g.elements(cfg);
  std::uint64_t degsum = 0;
  for (const auto& row : gg.adj) degsum += row.count();
  CHECK(degsum == 2 * gg.edge_count);
  std::mt19937_64 rng(5);
  std::vector<std::int32_t> vpos(tbl.size(), -1);
  for (std::uint32_t v = 0; v < gg.vertex_count(); ++v) vpos[gg.vertex_elem[v]] = v;
  for (int t = 0; t < 30; ++t) {
    auto x = g.random_element(rng);
    if (x.is_identity()) continue;
    auto c = g.random_element(rng);
    auto a = vpos[tbl.index_of(x)];
    auto b = vpos[tbl.index_of(x.conjugated_by(c))];
    CHECK(gg.adj[a].count() == gg.adj[b].count());
  }
}

TEST_CASE("isolated vertex iff spread zero on a battery") {
  Config cfg;
  for (auto g : {make(4, {"(1,2,3,4)", "(1,2)"}), make(5, {"(1,2,3,4,5)", "(1,2,3)"}),
                 make(4, {"(1,2)(3,4)", "(1,2,3)"}), make(6, {"(1,2)", "(1,2,3,4,5,6)"}),
                 make(6, {"(1,2,3)", "(4,5,6)"})}) {
    if (g.is_cyclic()) continue;
    auto gg = generating_graph(g, cfg);
    auto s = genlib::spread_exact(g, cfg);
    CHECK(gg.has_isolated() == (s.value == genlib::SpreadValue::finite(0)));
  }
}

TEST_CASE("product replacement: redundant 3-tuples are connected") {
  Config cfg;
  CHECK(prg_redundant_connected(make(4, {"(1,2)(3,4)", "(1,3)(2,4)"}), cfg, 3));
  CHECK(prg_redundant_connected(make(3, {"(1,2)", "(1,2,3)"}), cfg, 3));
  CHECK(prg_redundant_connected(make(4, {"(1,2)(3,4)", "(1,2,3)"}), cfg, 3));
}

TEST_CASE("prg guards") {
  Config cfg;
  CHECK_THROWS_AS(prg_redundant_connected(make(3, {"(1,2)"}), cfg, 2), InvalidInput);
  Config tiny = cfg;
  tiny.prg_tuple_bound = 10;
  CHECK_THROWS_AS(prg_redundant_connected(make(4, {"(1,2,3,4)", "(1,2)"}), tiny, 3),
                  BoundExceeded);
}

TEST_CASE("exports carry labels and edges") {
  Config cfg;
  auto g = make(4, {"(1,2)(3,4)", "(1,3)(2,4)"});
  auto gg = generating_graph(g, cfg);
  auto txt = export_edge_list(gg, g, cfg);
  CHECK(txt.find("p edge 3 3") != std::string::npos);
  CHECK(txt.find("e 1 2") != std::string::npos);
  auto js = export_json(gg, g, cfg);
  CHECK(js.find("\"label\":\"(1,2)(3,4)\"") != std::string::npos);
  CHECK(js.find("\"edges\":[[1,2],[1,3],[2,3]]") != std::string::npos);
}

}  // TEST_SUITE
