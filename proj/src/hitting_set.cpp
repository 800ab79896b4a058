#include "spreadlab/hitting_set.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <stdexcept>

namespace spreadlab {

namespace {

using Clock = std::chrono::steady_clock;

struct Searcher {
  std::uint32_t universe;
  std::vector<Bitset> sets;          // minimized, over universe
  std::vector<Bitset> hits;          // hits[x]: sets hit by x
  std::vector<std::uint32_t> static_count;  // |hits[x]|
  std::vector<std::uint32_t> sets_by_size;  // set indices, ascending size
  Bitset all_sets;
  Clock::time_point deadline;
  bool timed_out = false;
  std::uint64_t tick = 0;

  std::uint32_t best;                       // incumbent size (budget+1 in decision mode)
  std::uint32_t stop_threshold = 0;         // abort once the incumbent is this good
  bool done = false;
  std::vector<std::uint32_t> best_sol;
  std::vector<std::uint32_t> chosen;

  Searcher(const HSInstance& inst, double timeout_s) : universe(inst.universe) {
    sets = minimize_family(inst.sets);
    hits.assign(universe, Bitset(sets.size()));
    for (std::uint32_t s = 0; s < sets.size(); ++s)
      sets[s].for_each([&](std::size_t x) { hits[x].set(s); });
    static_count.resize(universe);
    for (std::uint32_t x = 0; x < universe; ++x)
      static_count[x] = std::uint32_t(hits[x].count());
    sets_by_size.resize(sets.size());
    for (std::uint32_t i = 0; i < sets.size(); ++i) sets_by_size[i] = i;
    std::stable_sort(sets_by_size.begin(), sets_by_size.end(),
                     [&](std::uint32_t a, std::uint32_t b) {
                       return sets[a].count() < sets[b].count();
                     });
    all_sets = Bitset(sets.size());
    for (std::uint32_t i = 0; i < sets.size(); ++i) all_sets.set(i);
    deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                  std::chrono::duration<double>(timeout_s));
  }

  bool has_empty_set() const {
    return !sets.empty() && sets[sets_by_size[0]].none();
  }

  bool time_up() {
    if (timed_out) return true;
    if ((++tick & 1023) == 0 && Clock::now() > deadline) timed_out = true;
    return timed_out;
  }

  // pairwise element-disjoint uncovered sets; early exit once > cap
  std::uint32_t packing_bound(const Bitset& covered, std::uint32_t cap) {
    Bitset blocked(universe);
    std::uint32_t lb = 0;
    for (auto si : sets_by_size) {
      if (covered.test(si)) continue;
      if (!sets[si].intersects(blocked)) {
        ++lb;
        if (lb > cap) return lb;
        blocked |= sets[si];
      }
    }
    return lb;
  }

  // uncovered set with fewest elements
  std::int64_t pick_branch_set(const Bitset& covered) const {
    for (auto si : sets_by_size)
      if (!covered.test(si)) return si;
    return -1;
  }

  std::uint32_t greedy_upper(std::vector<std::uint32_t>* sol_out) {
    Bitset covered(sets.size());
    std::uint32_t used = 0;
    std::vector<std::uint32_t> sol;
    while (covered.count() < sets.size()) {
      std::uint32_t bx = 0;
      std::size_t bc = 0;
      for (std::uint32_t x = 0; x < universe; ++x) {
        std::size_t c = hits[x].count_and_not(covered);
        if (c > bc) {
          bc = c;
          bx = x;
        }
      }
      if (bc == 0) return std::numeric_limits<std::uint32_t>::max();  // empty set present
      covered |= hits[bx];
      sol.push_back(bx);
      ++used;
    }
    if (sol_out) *sol_out = std::move(sol);
    return used;
  }

  void dfs(const Bitset& covered, std::uint32_t depth,
           const std::vector<std::uint32_t>* root_cands) {
    if (done || time_up()) return;
    std::int64_t bs = pick_branch_set(covered);
    if (bs < 0) {  // everything covered
      if (depth < best) {
        best = depth;
        best_sol = chosen;
        if (best <= stop_threshold) done = true;
      }
      return;
    }
    if (depth + 1 >= best) return;  // even one more element cannot beat incumbent
    std::uint32_t lb = packing_bound(covered, best - depth);
    if (depth + lb >= best) return;

    std::vector<std::uint32_t> cands;
    if (depth == 0 && root_cands && !root_cands->empty()) {
      cands = *root_cands;
    } else {
      sets[std::size_t(bs)].for_each([&](std::size_t x) {
        cands.push_back(std::uint32_t(x));
      });
    }
    std::stable_sort(cands.begin(), cands.end(), [&](std::uint32_t a, std::uint32_t b) {
      return static_count[a] > static_count[b];
    });
    for (auto x : cands) {
      Bitset nc = covered;
      nc |= hits[x];
      chosen.push_back(x);
      dfs(nc, depth + 1, root_cands);
      chosen.pop_back();
      if (done || time_up()) return;
    }
  }

  // lexicographically least hitting set of size <= budget, elements ascending
  bool lexmin(Bitset covered, std::uint32_t budget, std::uint32_t min_x,
              std::vector<std::uint32_t>& out) {
    if (time_up()) return false;
    if (pick_branch_set(covered) < 0) return true;
    if (budget == 0) return false;
    if (packing_bound(covered, budget) > budget) return false;
    // every uncovered set must still contain an allowed element
    for (auto si : sets_by_size) {
      if (covered.test(si)) continue;
      if (sets[si].next_set(min_x) >= universe) return false;
    }
    for (std::uint32_t x = min_x; x < universe; ++x) {
      if (!hits[x].count_and_not(covered)) continue;  // hits nothing new
      Bitset nc = covered;
      nc |= hits[x];
      out.push_back(x);
      if (lexmin(nc, budget - 1, x + 1, out)) return true;
      out.pop_back();
      if (time_up()) return false;
    }
    return false;
  }
};

}  // namespace

std::vector<Bitset> minimize_family(const std::vector<Bitset>& in) {
  // dedupe by hash, then keep only inclusion-minimal sets
  std::vector<const Bitset*> uniq;
  {
    std::vector<std::pair<std::uint64_t, const Bitset*>> keyed;
    keyed.reserve(in.size());
    for (const auto& s : in) keyed.push_back({s.hash(), &s});
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < keyed.size(); ++i) {
      bool dup = false;
      for (std::size_t j = i; j-- > 0 && keyed[j].first == keyed[i].first;)
        if (*keyed[j].second == *keyed[i].second) {
          dup = true;
          break;
        }
      if (!dup) uniq.push_back(keyed[i].second);
    }
  }
  std::stable_sort(uniq.begin(), uniq.end(), [](const Bitset* a, const Bitset* b) {
    return a->count() < b->count();
  });
  std::vector<Bitset> kept;
  for (const Bitset* s : uniq) {
    bool contains_kept = false;
    for (const auto& k : kept)
      if (k.is_subset_of(*s)) {
        contains_kept = true;
        break;
      }
    if (!contains_kept) kept.push_back(*s);
  }
  return kept;
}

HSResult solve_min_hitting_set(const HSInstance& inst, const HSOptions& opts) {
  HSResult r;
  Searcher s(inst, opts.timeout_s);
  if (s.sets.empty()) {
    r.status = HSStatus::Exact;
    r.optimum = 0;
    return r;
  }
  if (s.has_empty_set()) {
    r.status = HSStatus::Infeasible;
    return r;
  }
  std::vector<std::uint32_t> greedy_sol;
  std::uint32_t ub = s.greedy_upper(&greedy_sol);
  s.best = ub;
  s.best_sol = greedy_sol;
  s.dfs(Bitset(s.sets.size()), 0, &opts.root_candidates);
  if (s.timed_out) {
    r.status = HSStatus::Timeout;
    r.lower_bound = s.packing_bound(Bitset(s.sets.size()), s.best);
    r.upper_bound = s.best;
    r.solution = s.best_sol;
    std::sort(r.solution.begin(), r.solution.end());
    return r;
  }
  r.status = HSStatus::Exact;
  r.optimum = s.best;
  if (opts.lex_min_solution) {
    std::vector<std::uint32_t> lex;
    if (s.lexmin(Bitset(s.sets.size()), s.best, 0, lex) && !s.timed_out) {
      r.solution = lex;
      return r;
    }
  }
  r.solution = s.best_sol;
  std::sort(r.solution.begin(), r.solution.end());
  return r;
}

HSResult hitting_set_leq(const HSInstance& inst, std::uint32_t k, const HSOptions& opts) {
  HSResult r;
  Searcher s(inst, opts.timeout_s);
  if (s.sets.empty()) {
    r.status = HSStatus::Exact;
    r.optimum = 0;
    return r;
  }
  if (s.has_empty_set()) {
    r.status = HSStatus::Infeasible;
    return r;
  }
  s.best = k + 1;  // accept any solution of size <= k
  s.stop_threshold = k;
  s.best_sol.clear();
  s.dfs(Bitset(s.sets.size()), 0, &opts.root_candidates);
  if (s.best <= k) {
    r.status = HSStatus::Exact;
    r.optimum = s.best;  // size of the found set, not necessarily the optimum
    r.solution = s.best_sol;
    std::sort(r.solution.begin(), r.solution.end());
    return r;
  }
  if (s.timed_out) {
    r.status = HSStatus::Timeout;
    r.lower_bound = s.packing_bound(Bitset(s.sets.size()), k + 1);
    r.upper_bound = std::numeric_limits<std::uint32_t>::max();
    return r;
  }
  r.status = HSStatus::Exact;
  r.optimum = k + 1;  // "no hitting set of size <= k"
  return r;
}

}  // namespace spreadlab
