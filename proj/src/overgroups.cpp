#include "spreadlab/overgroups.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "spreadlab/errors.hpp"
#include "spreadlab/genlib.hpp"
#include "spreadlab/kernels.hpp"

namespace spreadlab::overgroups {

namespace {

// orbit of a subgroup's member set under conjugation by the group generators;
// entry 0 is the lexicographically least conjugate (the class key)
std::vector<Bitset> subgroup_orbit(const PermGroup& g, const ElementTable& tbl,
                                   const Bitset& members) {
  std::vector<std::uint32_t> gen_idx;
  for (const auto& cg : g.generators())
    gen_idx.push_back(std::uint32_t(tbl.index_of(cg)));
  std::vector<Bitset> orbit{members};
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> seen;
  seen[members.hash()].push_back(0);
  auto known = [&](const Bitset& b) {
    auto it = seen.find(b.hash());
    if (it == seen.end()) return false;
    for (auto i : it->second)
      if (orbit[i] == b) return true;
    return false;
  };
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (auto gi : gen_idx) {
      Bitset img(tbl.size());
      orbit[head].for_each([&](std::size_t e) {
        img.set(tbl.conj(std::uint32_t(e), gi));
      });
      if (!known(img)) {
        seen[img.hash()].push_back(orbit.size());
        orbit.push_back(std::move(img));
      }
    }
  }
  std::size_t least = 0;
  for (std::size_t i = 1; i < orbit.size(); ++i)
    if (orbit[i].lex_less(orbit[least])) least = i;
  std::swap(orbit[0], orbit[least]);
  return orbit;
}

// closure of <gens, extra>; empty bitset once the result must be G
Bitset extend_closure(const ElementTable& tbl, const std::vector<std::uint32_t>& gens,
                      std::uint32_t extra, std::uint64_t group_order) {
  Bitset members(tbl.size());
  std::vector<std::uint32_t> list;
  std::uint64_t half = group_order / 2;
  auto push = [&](std::uint32_t i) {
    if (!members.test(i)) {
      members.set(i);
      list.push_back(i);
    }
  };
  push(tbl.identity_index());
  for (auto s : gens) push(s);
  push(extra);
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (list.size() > half) return Bitset();  // proper subgroups have index >= 2
    for (auto s : gens) push(tbl.mul(list[i], s));
    push(tbl.mul(list[i], extra));
  }
  if (list.size() > half) return Bitset();
  return members;
}

// greedy small generating set for a known member set
std::vector<std::uint32_t> grow_gens(const ElementTable& tbl, const Bitset& members,
                                     std::uint64_t order) {
  std::vector<std::uint32_t> gens;
  Bitset have(tbl.size());
  have.set(tbl.identity_index());
  std::uint64_t have_count = 1;
  while (have_count < order) {
    std::size_t next = members.first_set();
    while (next < tbl.size() && have.test(next)) next = members.next_set(next + 1);
    gens.push_back(std::uint32_t(next));
    Subgroup c = closure_subgroup(tbl, gens);
    have = c.members;
    have_count = c.order;
  }
  return gens;
}

// double-coset representatives of H\G/H and their extension closures <H,g>
struct Extension {
  std::uint32_t rep;
  Bitset closure;  // empty when the extension is all of G
};

std::vector<Extension> proper_extensions(const ElementTable& tbl,
                                         const Bitset& members,
                                         const std::vector<std::uint32_t>& gens,
                                         std::uint64_t group_order) {
  const std::uint32_t n = tbl.size();
  Bitset processed = members;
  std::vector<std::uint32_t> dreps;
  for (std::uint32_t e = 0; e < n; ++e) {
    if (processed.test(e)) continue;
    dreps.push_back(e);
    std::vector<std::uint32_t> dc{e};
    Bitset indc(n);
    indc.set(e);
    for (std::size_t i = 0; i < dc.size(); ++i)
      for (auto s : gens)
        for (std::uint32_t v : {tbl.mul(dc[i], s), tbl.mul(s, dc[i])}) {
          if (!indc.test(v)) {
            indc.set(v);
            dc.push_back(v);
          }
        }
    for (auto v : dc) processed.set(v);
  }
  std::vector<Extension> out(dreps.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < std::int64_t(dreps.size()); ++i) {
    out[std::size_t(i)].rep = dreps[std::size_t(i)];
    out[std::size_t(i)].closure =
        extend_closure(tbl, gens, dreps[std::size_t(i)], group_order);
  }
  return out;
}

}  // namespace

std::shared_ptr<const MaximalSubgroups> all_maximal_subgroups(const PermGroup& g,
                                                              const Config& cfg) {
  if (g.order() > cfg.all_maximals_bound)
    throw BoundExceeded("maximal subgroup enumeration bound", cfg.all_maximals_bound);
  const auto& tbl = g.elements(cfg);
  const auto& ct = g.classes(cfg);

  std::unordered_map<std::uint64_t, std::vector<std::size_t>> seen;
  std::vector<Bitset> visited_canon;
  std::deque<std::pair<Bitset, std::vector<std::uint32_t>>> queue;

  auto mark_visited = [&](const Bitset& canon) -> bool {
    auto& bucket = seen[canon.hash()];
    for (auto i : bucket)
      if (visited_canon[i] == canon) return false;
    bucket.push_back(visited_canon.size());
    visited_canon.push_back(canon);
    return true;
  };

  // seeds: cyclic subgroups over prime-order class representatives
  for (const auto& c : ct.all()) {
    std::uint64_t o = c.element_order;
    if (o < 2) continue;
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= o; ++d)
      if (o % d == 0) {
        prime = false;
        break;
      }
    if (!prime) continue;
    Subgroup cyc = closure_subgroup(tbl, {c.rep});
    auto orbit = subgroup_orbit(g, tbl, cyc.members);
    if (mark_visited(orbit[0])) queue.push_back({cyc.members, cyc.gens});
  }

  std::vector<Subgroup> maximal_reps;
  while (!queue.empty()) {
    auto [members, gens] = std::move(queue.front());
    queue.pop_front();
    auto exts = proper_extensions(tbl, members, gens, g.order());
    bool is_maximal = true;
    for (auto& e : exts) {
      if (e.closure.size() == 0) continue;
      is_maximal = false;
      auto orbit = subgroup_orbit(g, tbl, e.closure);
      if (mark_visited(orbit[0])) {
        std::vector<std::uint32_t> egens = gens;
        egens.push_back(e.rep);
        queue.push_back({std::move(e.closure), std::move(egens)});
      }
    }
    if (is_maximal) {
      Subgroup s;
      s.order = members.count();
      s.members = std::move(members);
      s.gens = std::move(gens);
      maximal_reps.push_back(std::move(s));
    }
  }

  auto out = std::make_shared<MaximalSubgroups>();
  std::sort(maximal_reps.begin(), maximal_reps.end(),
            [](const Subgroup& a, const Subgroup& b) {
              if (a.order != b.order) return a.order > b.order;
              return a.members.lex_less(b.members);
            });
  for (const auto& rep : maximal_reps) {
    auto orbit = subgroup_orbit(g, tbl, rep.members);
    std::sort(orbit.begin(), orbit.end(),
              [](const Bitset& a, const Bitset& b) { return a.lex_less(b); });
    std::uint32_t cls = std::uint32_t(out->class_count);
    out->class_rep.push_back(std::uint32_t(out->subgroups.size()));
    for (auto& m : orbit) {
      Subgroup s;
      s.order = rep.order;
      s.gens = grow_gens(tbl, m, rep.order);
      s.members = std::move(m);
      out->subgroups.push_back(std::move(s));
      out->class_of.push_back(cls);
    }
    ++out->class_count;
  }
  return out;
}

OvergroupSet maximal_overgroups(const PermGroup& g, const Config& cfg,
                                const Permutation& x, const PermGroup* socle) {
  if (!g.contains(x)) throw MembershipError("maximal_overgroups: x not in G");
  if (g.order() > cfg.overgroup_bound)
    throw BoundExceeded("maximal overgroup bound", cfg.overgroup_bound);
  const auto& tbl = g.elements(cfg);
  OvergroupSet out;
  out.anchor = x;
  auto xi = std::uint32_t(tbl.index_of(x));

  if (g.order() > cfg.all_maximals_bound) {
    // per-anchor DFS over the overgroup poset of <x>, memoizing visited
    // subgroups; the maximal elements of the visited poset form M(x)
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> seen;
    std::vector<Subgroup> visited;
    auto mark = [&](const Subgroup& s) -> bool {
      auto& bucket = seen[s.members.hash()];
      for (auto i : bucket)
        if (visited[i].members == s.members) return false;
      bucket.push_back(visited.size());
      visited.push_back(s);
      return true;
    };
    Subgroup start = closure_subgroup(tbl, {xi});
    std::deque<Subgroup> queue;
    if (start.order < g.order()) {
      mark(start);
      queue.push_back(start);
    }
    while (!queue.empty()) {
      Subgroup h = std::move(queue.front());
      queue.pop_front();
      auto exts = proper_extensions(tbl, h.members, h.gens, g.order());
      for (auto& e : exts) {
        if (e.closure.size() == 0) continue;
        Subgroup s;
        s.order = e.closure.count();
        s.members = std::move(e.closure);
        s.gens = h.gens;
        s.gens.push_back(e.rep);
        if (mark(s)) queue.push_back(std::move(s));
      }
    }
    std::vector<Subgroup> maximal;
    for (const auto& cand : visited) {
      bool below = false;
      for (const auto& other : visited)
        if (cand.order < other.order && cand.members.is_subset_of(other.members)) {
          below = true;
          break;
        }
      if (!below) maximal.push_back(cand);
    }
    std::sort(maximal.begin(), maximal.end(), [](const Subgroup& a, const Subgroup& b) {
      if (a.order != b.order) return a.order > b.order;
      return a.members.lex_less(b.members);
    });
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint32_t> canon_class;
    for (auto& s : maximal) {
      auto orbit_key = subgroup_orbit(g, tbl, s.members)[0].hash();
      auto [it, fresh] =
          canon_class.insert({{orbit_key, s.order}, std::uint32_t(out.class_count)});
      if (fresh) ++out.class_count;
      out.class_of.push_back(it->second);
      out.members.push_back(std::move(s));
    }
  } else {
    auto all = all_maximal_subgroups(g, cfg);
    std::map<std::uint32_t, std::uint32_t> cls_remap;
    for (auto i : all->containing(xi)) {
      std::uint32_t c = all->class_of[i];
      auto [it, fresh] = cls_remap.insert({c, std::uint32_t(out.class_count)});
      if (fresh) ++out.class_count;
      out.members.push_back(all->subgroups[i]);
      out.class_of.push_back(it->second);
    }
  }

  if (socle) {
    // keep only H with H * socle = G
    const auto& stbl = socle->elements(cfg);
    Bitset sbits(tbl.size());
    for (std::uint32_t i = 0; i < stbl.size(); ++i)
      sbits.set(std::size_t(tbl.index_of(stbl.at(i))));
    OvergroupSet filtered;
    filtered.anchor = out.anchor;
    std::map<std::uint32_t, std::uint32_t> remap;
    for (std::size_t i = 0; i < out.members.size(); ++i) {
      std::uint64_t meet = out.members[i].members.count_and(sbits);
      if (out.members[i].order / meet * socle->order() != g.order()) continue;
      auto [it, fresh] =
          remap.insert({out.class_of[i], std::uint32_t(filtered.class_count)});
      if (fresh) ++filtered.class_count;
      filtered.members.push_back(out.members[i]);
      filtered.class_of.push_back(it->second);
    }
    return filtered;
  }
  return out;
}

Rational fpr_class_intersection(const PermGroup& g, const Config& cfg,
                                std::uint32_t z_class, const Subgroup& h) {
  const auto& ct = g.classes(cfg);
  const auto& c = ct.at(z_class);
  std::uint64_t inter = c.members.count_and(h.members);
  return Rational(std::int64_t(inter), std::int64_t(c.size));
}

Rational fpr_coset_count(const PermGroup& g, const Config& cfg, const Permutation& z,
                         const Subgroup& h) {
  const auto& tbl = g.elements(cfg);
  std::uint64_t index = g.order() / h.order;
  if (index > cfg.coset_index_bound)
    throw BoundExceeded("coset index bound for fpr", cfg.coset_index_bound);
  auto zi = tbl.index_of(z);
  if (zi < 0) throw MembershipError("fpr: z not in G");
  // right cosets Hg, acted on by right multiplication
  std::vector<std::int32_t> coset_of(tbl.size(), -1);
  std::vector<std::uint32_t> reps;
  std::vector<std::uint32_t> h_elems = h.members.to_indices();
  for (std::uint32_t e = 0; e < tbl.size(); ++e) {
    if (coset_of[e] >= 0) continue;
    std::int32_t id = std::int32_t(reps.size());
    reps.push_back(e);
    for (auto he : h_elems) coset_of[tbl.mul(he, e)] = id;
  }
  std::uint64_t fixed = 0;
  for (std::uint32_t id = 0; id < reps.size(); ++id)
    if (coset_of[tbl.mul(reps[id], std::uint32_t(zi))] == std::int32_t(id)) ++fixed;
  return Rational(std::int64_t(fixed), std::int64_t(index));
}

Rational fpr(const PermGroup& g, const Config& cfg, std::uint32_t z_class,
             const Subgroup& h) {
  return fpr_class_intersection(g, cfg, z_class, h);
}

std::vector<std::pair<std::string, Rational>> prob_bound(const PermGroup& g,
                                                         const Config& cfg,
                                                         const Permutation& x) {
  const auto& ct = g.classes(cfg);
  auto mx = maximal_overgroups(g, cfg, x);
  std::vector<std::pair<std::string, Rational>> out;
  for (std::uint32_t zc = 0; zc < ct.count(); ++zc) {
    if (ct.at(zc).element_order == 1) continue;
    Rational sum = Rational::zero();
    for (const auto& h : mx.members) sum = sum + fpr_class_intersection(g, cfg, zc, h);
    out.push_back({ct.at(zc).label, sum});
  }
  return out;
}

UspreadCertificate certify_uspread(const PermGroup& g, const Config& cfg, int class_id,
                                   std::uint32_t k, CertifyMode mode) {
  const auto& ct = g.classes(cfg);
  const auto& tbl = g.elements(cfg);
  const auto& c = ct.at(std::size_t(class_id));
  UspreadCertificate cert;
  cert.witness_class = c.label;
  cert.k = k;
  cert.mode = mode == CertifyMode::FprBound ? "fpr-bound" : "exact-P";
  Rational maxv = Rational::zero();
  std::string max_z = "-";
  if (mode == CertifyMode::FprBound) {
    auto bounds = prob_bound(g, cfg, tbl.at(c.rep));
    for (const auto& [label, v] : bounds)
      if (v > maxv) {
        maxv = v;
        max_z = label;
      }
  } else {
    for (std::uint32_t zc = 0; zc < ct.count(); ++zc) {
      if (ct.at(zc).element_order == 1) continue;
      auto p = genlib::exact_P(g, cfg, tbl.at(ct.at(zc).rep), class_id);
      if (p > maxv) {
        maxv = p;
        max_z = ct.at(zc).label;
      }
    }
  }
  cert.max_value = maxv;
  cert.max_z_class = max_z;
  cert.certified = maxv < Rational(1, std::int64_t(k));
  return cert;
}

bool verify_maximality(const PermGroup& g, const Config& cfg, const Subgroup& h,
                       int trials, std::mt19937_64& rng) {
  const auto& tbl = g.elements(cfg);
  if (h.order >= g.order()) return false;
  for (int t = 0; t < trials; ++t) {
    Permutation p = g.random_element(rng);
    auto pi = std::uint32_t(tbl.index_of(p));
    if (h.members.test(pi)) continue;
    Bitset ext = extend_closure(tbl, h.gens, pi, g.order());
    if (ext.size() != 0) return false;  // a proper subgroup strictly above H
  }
  return true;
}

}  // namespace spreadlab::overgroups
