#include "spreadlab/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace spreadlab::kernels {

void set_threads(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

bool pair_generates(const PermGroup& g, const Permutation& x, const Permutation& y) {
  // cheap necessary check first: an element of the pair already generating
  if (x.is_identity()) return subgroup_order(g.degree(), {y}) == g.order();
  if (y.is_identity()) return subgroup_order(g.degree(), {x}) == g.order();
  return subgroup_order(g.degree(), {x, y}) == g.order();
}

std::vector<std::uint8_t> gen_row_serial(const PermGroup& g, const ElementTable& tbl,
                                         const std::vector<std::uint32_t>& xs,
                                         std::uint32_t y) {
  std::vector<std::uint8_t> out(xs.size(), 0);
  const Permutation& yp = tbl.at(y);
  for (std::size_t i = 0; i < xs.size(); ++i)
    out[i] = pair_generates(g, tbl.at(xs[i]), yp) ? 1 : 0;
  return out;
}

std::vector<std::uint8_t> gen_row_parallel(const PermGroup& g, const ElementTable& tbl,
                                           const std::vector<std::uint32_t>& xs,
                                           std::uint32_t y, int threads) {
  set_threads(threads);
  std::vector<std::uint8_t> out(xs.size(), 0);
  const Permutation& yp = tbl.at(y);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < std::int64_t(xs.size()); ++i)
    out[std::size_t(i)] = pair_generates(g, tbl.at(xs[std::size_t(i)]), yp) ? 1 : 0;
  return out;
}

Bitset conj_subset_serial(const ElementTable& tbl,
                          const std::vector<std::uint32_t>& universe,
                          const std::vector<std::int32_t>& universe_pos,
                          const Bitset& in, std::uint32_t g) {
  Bitset out(universe.size());
  in.for_each([&](std::size_t i) {
    std::uint32_t img = tbl.conj(universe[i], g);
    std::int32_t pos = universe_pos[img];
    // conjugation preserves element order, so images stay in the universe
    out.set(std::size_t(pos));
  });
  return out;
}

Bitset conj_subset_parallel(const ElementTable& tbl,
                            const std::vector<std::uint32_t>& universe,
                            const std::vector<std::int32_t>& universe_pos,
                            const Bitset& in, std::uint32_t g, int threads) {
  set_threads(threads);
  auto idx = in.to_indices();
  std::vector<std::uint32_t> where(idx.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < std::int64_t(idx.size()); ++k) {
    std::uint32_t img = tbl.conj(universe[idx[std::size_t(k)]], g);
    where[std::size_t(k)] = std::uint32_t(universe_pos[img]);
  }
  Bitset out(universe.size());
  for (auto w : where) out.set(w);
  return out;
}

std::uint64_t nongen_count_serial(const PermGroup& g, const ElementTable& tbl,
                                  std::uint32_t z, const std::vector<std::uint32_t>& ys) {
  const Permutation& zp = tbl.at(z);
  std::uint64_t c = 0;
  for (auto y : ys)
    if (!pair_generates(g, zp, tbl.at(y))) ++c;
  return c;
}

std::uint64_t nongen_count_parallel(const PermGroup& g, const ElementTable& tbl,
                                    std::uint32_t z, const std::vector<std::uint32_t>& ys,
                                    int threads) {
  set_threads(threads);
  const Permutation& zp = tbl.at(z);
  std::uint64_t c = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : c)
  for (std::int64_t i = 0; i < std::int64_t(ys.size()); ++i)
    if (!pair_generates(g, zp, tbl.at(ys[std::size_t(i)]))) ++c;
  return c;
}

}  // namespace spreadlab::kernels
