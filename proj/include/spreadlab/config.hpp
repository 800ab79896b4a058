#pragma once

#include <cstdint>
#include <string>

namespace spreadlab {

// Runtime limits and knobs. Everything that affects a result is part of the
// cache key fingerprint.
struct Config {
  std::uint64_t class_enum_bound = 50'000'000;    // conjugacy class enumeration
  std::uint64_t element_enum_bound = 50'000'000;  // exhaustive element tables
  std::uint64_t normal_subgroup_bound = 1'000'000;
  std::uint64_t overgroup_bound = 1'000'000;      // per-anchor maximal overgroup DFS
  std::uint64_t all_maximals_bound = 20'000;      // whole-lattice maximal enumeration
  std::uint64_t gen_graph_bound = 100'000;
  std::uint64_t prg_tuple_bound = 10'000'000;
  std::uint64_t coset_index_bound = 1'000'000;    // coset-action fpr route
  std::uint64_t family_bit_bound = 1ull << 34;    // NonGen family storage, in bits
  double hitting_set_timeout_s = 600.0;
  int lang_steinberg_levels = 4;                  // tower bound J
  int threads = 0;                                // 0 = OpenMP default
  std::uint64_t seed = 0x5eedULL;
  bool stretch = false;
  std::string cache_dir;                          // empty = caching disabled

  std::string fingerprint() const;
};

}  // namespace spreadlab
