#include "spreadlab/structure.hpp"

#include <algorithm>
#include <map>

#include "spreadlab/errors.hpp"

namespace spreadlab {

Subgroup closure_subgroup(const ElementTable& tbl, std::vector<std::uint32_t> seeds) {
  Subgroup s;
  s.members = Bitset(tbl.size());
  std::vector<std::uint32_t> list;
  auto push = [&](std::uint32_t i) {
    if (!s.members.test(i)) {
      s.members.set(i);
      list.push_back(i);
    }
  };
  push(tbl.identity_index());
  for (auto i : seeds) push(i);
  // BFS closure under right multiplication by the seed set
  for (std::size_t i = 0; i < list.size(); ++i)
    for (auto g : seeds) push(tbl.mul(list[i], g));
  s.gens = std::move(seeds);
  s.order = s.members.count();
  return s;
}

Subgroup normal_closure(const PermGroup& g, const ElementTable& tbl,
                        std::vector<std::uint32_t> seeds) {
  std::vector<std::uint32_t> conj_gens;
  for (const auto& cg : g.generators()) {
    auto i = tbl.index_of(cg);
    if (i < 0) throw MembershipError("group generator missing from element table");
    conj_gens.push_back(std::uint32_t(i));
  }
  Subgroup cur = closure_subgroup(tbl, seeds);
  while (true) {
    std::vector<std::uint32_t> missing;
    for (auto s : cur.gens)
      for (auto cg : conj_gens) {
        std::uint32_t c = tbl.conj(s, cg);
        if (!cur.members.test(c)) missing.push_back(c);
      }
    if (missing.empty()) return cur;
    auto gens = cur.gens;
    gens.insert(gens.end(), missing.begin(), missing.end());
    cur = closure_subgroup(tbl, std::move(gens));
  }
}

std::vector<Subgroup> normal_subgroups(const PermGroup& g, const Config& cfg) {
  if (g.order() > cfg.normal_subgroup_bound)
    throw BoundExceeded("normal subgroup computation bound", cfg.normal_subgroup_bound);
  const auto& tbl = g.elements(cfg);
  const auto& ct = g.classes(cfg);

  // normal closures of single classes
  std::vector<Subgroup> pool;
  std::map<std::uint64_t, std::vector<std::size_t>> by_hash;
  auto try_add = [&](Subgroup s) -> bool {
    std::uint64_t h = s.members.hash();
    for (auto idx : by_hash[h])
      if (pool[idx].members == s.members) return false;
    by_hash[h].push_back(pool.size());
    pool.push_back(std::move(s));
    return true;
  };

  try_add(closure_subgroup(tbl, {}));  // trivial
  for (const auto& c : ct.all()) {
    if (c.element_order == 1) continue;
    try_add(normal_closure(g, tbl, {c.rep}));
  }
  // close under joins
  bool grew = true;
  while (grew) {
    grew = false;
    std::size_t sz = pool.size();
    for (std::size_t i = 0; i < sz; ++i)
      for (std::size_t j = i + 1; j < sz; ++j) {
        if (pool[i].members.is_subset_of(pool[j].members) ||
            pool[j].members.is_subset_of(pool[i].members))
          continue;
        std::vector<std::uint32_t> gens = pool[i].gens;
        gens.insert(gens.end(), pool[j].gens.begin(), pool[j].gens.end());
        Subgroup join = closure_subgroup(tbl, std::move(gens));
        if (try_add(std::move(join))) grew = true;
      }
  }
  std::sort(pool.begin(), pool.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.members.lex_less(b.members);
  });
  return pool;
}

std::vector<Subgroup> minimal_normal_subgroups(const PermGroup& g, const Config& cfg) {
  auto all = normal_subgroups(g, cfg);
  std::vector<Subgroup> out;
  for (const auto& n : all) {
    if (n.order == 1) continue;
    bool minimal = true;
    for (const auto& m : all) {
      if (m.order == 1 || m.order >= n.order) continue;
      if (m.members.is_subset_of(n.members)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(n);
  }
  return out;
}

bool quotient_is_cyclic(const PermGroup& g, const Subgroup& n, const Config& cfg) {
  if (n.order == g.order()) return true;
  const auto& tbl = g.elements(cfg);
  const auto& ct = g.classes(cfg);
  // gN generates G/N iff <N, g> = G; class representatives suffice, because
  // conjugation permutes the generators of a cyclic quotient
  for (const auto& c : ct.all()) {
    if (n.members.test(c.rep)) continue;
    std::vector<std::uint32_t> gens = n.gens;
    gens.push_back(c.rep);
    Subgroup j = closure_subgroup(tbl, std::move(gens));
    if (j.order == g.order()) return true;
  }
  return false;
}

bool every_proper_quotient_cyclic(const PermGroup& g, const Config& cfg) {
  auto normals = normal_subgroups(g, cfg);
  for (const auto& n : normals) {
    if (n.order == 1) continue;
    if (!quotient_is_cyclic(g, n, cfg)) return false;
  }
  return true;
}

PermGroup subgroup_to_group(const PermGroup& g, const Config& cfg, const Subgroup& s) {
  const auto& tbl = g.elements(cfg);
  std::vector<Permutation> gens;
  for (auto i : s.gens) gens.push_back(tbl.at(i));
  if (gens.empty()) return PermGroup::trivial(g.degree());
  return PermGroup(g.degree(), std::move(gens));
}

bool is_normal_in(const PermGroup& g, const PermGroup& n) {
  for (const auto& x : n.generators())
    if (!g.contains(x)) return false;
  for (const auto& x : n.generators())
    for (const auto& cg : g.generators())
      if (!n.contains(x.conjugated_by(cg))) return false;
  return true;
}

bool is_minimal_normal(const PermGroup& g, const PermGroup& n, const Config& cfg) {
  if (!is_normal_in(g, n) || n.order() == 1) return false;
  const auto& tbl = g.elements(cfg);
  auto normals = normal_subgroups(g, cfg);
  for (const auto& m : normals) {
    if (m.order == 1 || m.order >= n.order()) continue;
    // m < n?
    bool inside = true;
    for (auto gi : m.gens)
      if (!n.contains(tbl.at(gi))) {
        inside = false;
        break;
      }
    if (inside) return false;
  }
  // n itself must be normal of the right order
  for (const auto& m : normals)
    if (m.order == n.order()) {
      bool same = true;
      for (auto gi : m.gens)
        if (!n.contains(tbl.at(gi))) {
          same = false;
          break;
        }
      if (same) return true;
    }
  return false;
}

bool is_nonabelian_simple(const PermGroup& g, const Config& cfg) {
  if (g.order() == 1 || g.is_abelian()) return false;
  return normal_subgroups(g, cfg).size() == 2;
}

}  // namespace spreadlab
