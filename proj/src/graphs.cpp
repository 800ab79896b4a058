#include "spreadlab/graphs.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "spreadlab/classes.hpp"
#include "spreadlab/errors.hpp"
#include "spreadlab/genlib.hpp"
#include "spreadlab/kernels.hpp"

namespace spreadlab::graphs {

bool GeneratingGraph::has_isolated() const {
  for (const auto& row : adj)
    if (row.none()) return true;
  return false;
}

std::vector<std::uint32_t> GeneratingGraph::isolated_vertices() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t v = 0; v < adj.size(); ++v)
    if (adj[v].none()) out.push_back(v);
  return out;
}

namespace {

// BFS eccentricity from a source; -1 when the graph is disconnected
int eccentricity(const std::vector<Bitset>& adj, std::uint32_t src) {
  const std::size_t n = adj.size();
  Bitset seen(n);
  Bitset frontier(n);
  seen.set(src);
  frontier.set(src);
  int dist = 0;
  std::size_t covered = 1;
  while (covered < n) {
    Bitset next(n);
    frontier.for_each([&](std::size_t v) { next |= adj[v]; });
    next.and_not(seen);
    if (next.none()) return -1;
    seen |= next;
    covered += next.count();
    frontier = next;
    ++dist;
  }
  return dist;
}

}  // namespace

bool GeneratingGraph::connected() const {
  if (adj.empty()) return true;
  return eccentricity(adj, 0) >= 0;
}

int GeneratingGraph::diameter() const {
  int best = 0;
  for (std::uint32_t v = 0; v < adj.size(); ++v) {
    int e = eccentricity(adj, v);
    if (e < 0) return -1;
    best = std::max(best, e);
  }
  return best;
}

GeneratingGraph generating_graph(const PermGroup& g, const Config& cfg) {
  if (g.order() > cfg.gen_graph_bound)
    throw BoundExceeded("generating graph bound", cfg.gen_graph_bound);
  if (g.order() == 1) throw InvalidInput("generating graph of the trivial group");
  const auto& tbl = g.elements(cfg);
  const auto& ct = g.classes(cfg);
  GeneratingGraph gg;
  const std::uint32_t id = tbl.identity_index();
  std::vector<std::int32_t> vpos(tbl.size(), -1);
  for (std::uint32_t e = 0; e < tbl.size(); ++e) {
    if (e == id) continue;
    vpos[e] = std::int32_t(gg.vertex_elem.size());
    gg.vertex_elem.push_back(e);
  }
  const std::size_t n = gg.vertex_elem.size();
  gg.adj.assign(n, Bitset(n));

  // one generation row per class representative; other rows are conjugates
  std::vector<std::int32_t> seen_class(ct.count(), -1);
  for (std::uint32_t ci = 0; ci < ct.count(); ++ci) {
    const auto& c = ct.at(ci);
    if (c.element_order == 1) continue;
    auto row = kernels::gen_row_parallel(g, tbl, gg.vertex_elem, c.rep, cfg.threads);
    // rep row
    Bitset rep_row(n);
    for (std::uint32_t j = 0; j < n; ++j)
      if (row[j]) rep_row.set(j);
    // distribute to members via conjugation: row(y^t) = row(y)^t on vertices
    std::vector<std::uint32_t> gen_idx;
    for (const auto& cg : g.generators())
      gen_idx.push_back(std::uint32_t(tbl.index_of(cg)));
    std::vector<std::pair<std::uint32_t, Bitset>> pending;
    std::vector<bool> done(tbl.size(), false);
    pending.push_back({c.rep, rep_row});
    done[c.rep] = true;
    for (std::size_t head = 0; head < pending.size(); ++head) {
      auto [m, mrow] = pending[head];
      gg.adj[std::uint32_t(vpos[m])] = mrow;
      for (auto t : gen_idx) {
        std::uint32_t im = tbl.conj(m, t);
        if (done[im]) continue;
        done[im] = true;
        Bitset trow(n);
        mrow.for_each([&](std::size_t v) {
          trow.set(std::size_t(vpos[tbl.conj(gg.vertex_elem[v], t)]));
        });
        pending.push_back({im, std::move(trow)});
      }
    }
  }
  std::uint64_t total = 0;
  for (const auto& row : gg.adj) total += row.count();
  if (total % 2 != 0) throw std::logic_error("generating graph adjacency not symmetric");
  gg.edge_count = total / 2;
  return gg;
}

DichotomyResult dichotomy_check(const PermGroup& g, const Config& cfg) {
  auto gg = generating_graph(g, cfg);
  DichotomyResult r;
  auto iso = gg.isolated_vertices();
  if (!iso.empty()) {
    r.branch = DichotomyResult::Branch::Isolated;
    const auto& tbl = g.elements(cfg);
    r.evidence = tbl.at(gg.vertex_elem[iso[0]]).cycle_string();
    return r;
  }
  int d = gg.diameter();
  if (d < 0 || d > 2)
    throw DichotomyViolation("generating graph has no isolated vertex but diameter " +
                             std::to_string(d));
  r.branch = DichotomyResult::Branch::DiameterAtMostTwo;
  r.evidence = "diameter " + std::to_string(d);
  return r;
}

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0u);
  }
  std::uint32_t find(std::uint32_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

bool prg_redundant_connected(const PermGroup& g, const Config& cfg, unsigned k) {
  if (k < 3) throw InvalidInput("product replacement connectivity needs k >= 3");
  const auto& tbl = g.elements(cfg);
  const std::uint64_t n = tbl.size();
  std::uint64_t total = ipow(n, k);
  if (total > cfg.prg_tuple_bound)
    throw BoundExceeded("product replacement tuple bound", cfg.prg_tuple_bound);

  auto decode = [&](std::uint64_t code, std::vector<std::uint32_t>& t) {
    for (unsigned i = 0; i < k; ++i) {
      t[i] = std::uint32_t(code % n);
      code /= n;
    }
  };
  auto encode = [&](const std::vector<std::uint32_t>& t) {
    std::uint64_t code = 0;
    for (unsigned i = k; i-- > 0;) code = code * n + t[i];
    return code;
  };

  // mark generating tuples
  Bitset generating(total);
  std::vector<std::uint32_t> t(k);
  std::vector<Permutation> perms(k, Permutation(g.degree()));
  for (std::uint64_t code = 0; code < total; ++code) {
    decode(code, t);
    std::vector<Permutation> gens;
    gens.reserve(k);
    for (unsigned i = 0; i < k; ++i) gens.push_back(tbl.at(t[i]));
    if (subgroup_order(g.degree(), gens) == g.order()) generating.set(code);
  }

  // Nielsen moves connect generating tuples to generating tuples
  UnionFind uf{std::size_t(total)};
  generating.for_each([&](std::size_t code) {
    decode(code, t);
    for (unsigned i = 0; i < k; ++i)
      for (unsigned j = 0; j < k; ++j) {
        if (i == j) continue;
        for (int s : {0, 1, 2, 3}) {
          std::uint32_t xi = t[i], xj = t[j];
          std::uint32_t rep;
          switch (s) {
            case 0: rep = tbl.mul(xi, xj); break;                 // x_i x_j
            case 1: rep = tbl.mul(xi, tbl.inv(xj)); break;        // x_i x_j^-1
            case 2: rep = tbl.mul(xj, xi); break;                 // x_j x_i
            default: rep = tbl.mul(tbl.inv(xj), xi); break;       // x_j^-1 x_i
          }
          auto saved = t[i];
          t[i] = rep;
          uf.unite(std::uint32_t(code), std::uint32_t(encode(t)));
          t[i] = saved;
        }
      }
  });

  // redundant tuples: some coordinate can be deleted
  std::int64_t root = -1;
  bool ok = true;
  generating.for_each([&](std::size_t code) {
    if (!ok) return;
    decode(code, t);
    bool redundant = false;
    for (unsigned drop = 0; drop < k && !redundant; ++drop) {
      std::vector<Permutation> gens;
      for (unsigned i = 0; i < k; ++i)
        if (i != drop) gens.push_back(tbl.at(t[i]));
      if (subgroup_order(g.degree(), gens) == g.order()) redundant = true;
    }
    if (redundant) {
      auto r = uf.find(std::uint32_t(code));
      if (root < 0) root = r;
      if (std::uint32_t(root) != r) ok = false;
    }
  });
  return ok;
}

std::string export_edge_list(const GeneratingGraph& gg, const PermGroup& g,
                             const Config& cfg) {
  const auto& tbl = g.elements(cfg);
  std::ostringstream out;
  out << "p edge " << gg.vertex_count() << " " << gg.edge_count << "\n";
  for (std::uint32_t v = 0; v < gg.vertex_count(); ++v)
    out << "c " << (v + 1) << " " << tbl.at(gg.vertex_elem[v]).cycle_string() << "\n";
  for (std::uint32_t v = 0; v < gg.vertex_count(); ++v)
    gg.adj[v].for_each([&](std::size_t w) {
      if (w > v) out << "e " << (v + 1) << " " << (w + 1) << "\n";
    });
  return out.str();
}

std::string export_json(const GeneratingGraph& gg, const PermGroup& g,
                        const Config& cfg) {
  const auto& tbl = g.elements(cfg);
  std::ostringstream out;
  out << "{\"schema\":\"spreadlab-gengraph-1\",\"vertices\":[";
  for (std::uint32_t v = 0; v < gg.vertex_count(); ++v) {
    if (v) out << ",";
    const auto& p = tbl.at(gg.vertex_elem[v]);
    out << "{\"id\":" << (v + 1) << ",\"label\":\"" << p.cycle_string()
        << "\",\"order\":" << p.element_order() << "}";
  }
  out << "],\"edges\":[";
  bool first = true;
  for (std::uint32_t v = 0; v < gg.vertex_count(); ++v)
    gg.adj[v].for_each([&](std::size_t w) {
      if (w > v) {
        if (!first) out << ",";
        first = false;
        out << "[" << (v + 1) << "," << (w + 1) << "]";
      }
    });
  out << "]}";
  return out.str();
}

}  // namespace spreadlab::graphs
