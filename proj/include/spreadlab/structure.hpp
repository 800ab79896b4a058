#pragma once

#include <vector>

#include "spreadlab/bitset.hpp"
#include "spreadlab/classes.hpp"
#include "spreadlab/perm_group.hpp"

namespace spreadlab {

// A subgroup recorded against its parent group's element table.
struct Subgroup {
  Bitset members;                    // over parent element indices
  std::vector<std::uint32_t> gens;   // generating element indices
  std::uint64_t order = 0;
};

// closure of a seed set inside the parent's element table
Subgroup closure_subgroup(const ElementTable& tbl, std::vector<std::uint32_t> seeds);

// smallest normal subgroup containing the seeds
Subgroup normal_closure(const PermGroup& g, const ElementTable& tbl,
                        std::vector<std::uint32_t> seeds);

// all normal subgroups, as joins of normal closures of conjugacy classes;
// includes 1 and G, sorted by (order, member set)
std::vector<Subgroup> normal_subgroups(const PermGroup& g, const Config& cfg);

// nontrivial normal subgroups minimal under inclusion
std::vector<Subgroup> minimal_normal_subgroups(const PermGroup& g, const Config& cfg);

// G/N cyclic, i.e. some coset of N generates G together with N
bool quotient_is_cyclic(const PermGroup& g, const Subgroup& n, const Config& cfg);

bool every_proper_quotient_cyclic(const PermGroup& g, const Config& cfg);

// PermGroup view of a Subgroup (lifts generator indices back to permutations)
PermGroup subgroup_to_group(const PermGroup& g, const Config& cfg, const Subgroup& s);

// N normal in G (N's generators must lie in G)
bool is_normal_in(const PermGroup& g, const PermGroup& n);

// true when `n` (as an element set of g's table) is a minimal normal subgroup
bool is_minimal_normal(const PermGroup& g, const PermGroup& n, const Config& cfg);

bool is_nonabelian_simple(const PermGroup& g, const Config& cfg);

}  // namespace spreadlab
