#pragma once

#include <cstdint>
#include <vector>

#include "spreadlab/bitset.hpp"
#include "spreadlab/perm_group.hpp"

namespace spreadlab::kernels {

// Data-parallel inner loops, each with a serial reference implementation kept
// for testing and a benchmark target comparing the two. The parallel variants
// write disjoint slots, so outputs are bit-identical with the serial ones.

// <x,y> = G for each x in xs (element indices); 1 = generates
std::vector<std::uint8_t> gen_row_serial(const PermGroup& g, const ElementTable& tbl,
                                         const std::vector<std::uint32_t>& xs,
                                         std::uint32_t y);
std::vector<std::uint8_t> gen_row_parallel(const PermGroup& g, const ElementTable& tbl,
                                           const std::vector<std::uint32_t>& xs,
                                           std::uint32_t y, int threads);

// image of a subset of `universe` under conjugation by g, expressed in
// universe positions: out bit j set iff universe[j] = universe[i]^g for a set i
Bitset conj_subset_serial(const ElementTable& tbl,
                          const std::vector<std::uint32_t>& universe,
                          const std::vector<std::int32_t>& universe_pos,
                          const Bitset& in, std::uint32_t g);
Bitset conj_subset_parallel(const ElementTable& tbl,
                            const std::vector<std::uint32_t>& universe,
                            const std::vector<std::int32_t>& universe_pos,
                            const Bitset& in, std::uint32_t g, int threads);

// |{y in ys : <z,y> != G}|
std::uint64_t nongen_count_serial(const PermGroup& g, const ElementTable& tbl,
                                  std::uint32_t z, const std::vector<std::uint32_t>& ys);
std::uint64_t nongen_count_parallel(const PermGroup& g, const ElementTable& tbl,
                                    std::uint32_t z, const std::vector<std::uint32_t>& ys,
                                    int threads);

// single pair test via a stabilizer chain
bool pair_generates(const PermGroup& g, const Permutation& x, const Permutation& y);

void set_threads(int threads);

}  // namespace spreadlab::kernels
