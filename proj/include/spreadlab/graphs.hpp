#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spreadlab/bitset.hpp"
#include "spreadlab/config.hpp"
#include "spreadlab/perm_group.hpp"

namespace spreadlab::graphs {

// Generating graph: vertices are the nontrivial elements, edges the
// generating pairs.
struct GeneratingGraph {
  std::vector<std::uint32_t> vertex_elem;  // vertex -> element index
  std::vector<Bitset> adj;                 // rows over vertices
  std::uint64_t edge_count = 0;

  std::size_t vertex_count() const { return vertex_elem.size(); }
  bool has_isolated() const;
  std::vector<std::uint32_t> isolated_vertices() const;
  // -1 = disconnected (over non-isolated vertices the graph may still split)
  int diameter() const;
  bool connected() const;
};

GeneratingGraph generating_graph(const PermGroup& g, const Config& cfg);

struct DichotomyResult {
  enum class Branch { Isolated, DiameterAtMostTwo } branch;
  std::string evidence;  // isolated vertex, or the attained diameter
};

// Either branch must hold; a third outcome falsifies the dichotomy and throws.
DichotomyResult dichotomy_check(const PermGroup& g, const Config& cfg);

struct DichotomyViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// all redundant generating k-tuples lie in one component of the product
// replacement graph
bool prg_redundant_connected(const PermGroup& g, const Config& cfg, unsigned k);

// exports
std::string export_edge_list(const GeneratingGraph& gg, const PermGroup& g,
                             const Config& cfg);
std::string export_json(const GeneratingGraph& gg, const PermGroup& g, const Config& cfg);

}  // namespace spreadlab::graphs
