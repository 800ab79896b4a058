#include "spreadlab/genlib.hpp"

#include <algorithm>
#include <map>

#include "spreadlab/errors.hpp"
#include "spreadlab/kernels.hpp"

namespace spreadlab::genlib {

std::string SpreadValue::str() const {
  if (infinite) return "inf";
  if (indeterminate)
    return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
  return std::to_string(k);
}

bool generates(const PermGroup& g, const Permutation& x, const Permutation& y) {
  if (!g.contains(x) || !g.contains(y))
    throw MembershipError("generates: element outside the group");
  return kernels::pair_generates(g, x, y);
}

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// conjugating element (index) mapping the class representative to each member
std::vector<std::pair<std::uint32_t, std::uint32_t>> class_members_with_conjugators(
    const PermGroup& g, const ElementTable& tbl, const ConjClass& c) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;  // (member, conjugator)
  std::vector<std::uint32_t> gen_idx;
  for (const auto& cg : g.generators()) {
    auto i = tbl.index_of(cg);
    gen_idx.push_back(std::uint32_t(i));
  }
  std::vector<std::int32_t> seen(tbl.size(), -1);
  out.push_back({c.rep, tbl.identity_index()});
  seen[c.rep] = 0;
  for (std::size_t head = 0; head < out.size(); ++head) {
    auto [m, conj] = out[head];
    for (auto gi : gen_idx) {
      std::uint32_t im = tbl.conj(m, gi);
      if (seen[im] < 0) {
        seen[im] = std::int32_t(out.size());
        out.push_back({im, tbl.mul(conj, gi)});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::uint32_t> prime_order_elements(const PermGroup& g, const Config& cfg,
                                                const Bitset* restrict_to) {
  const auto& tbl = g.elements(cfg);
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < tbl.size(); ++i) {
    if (restrict_to && !restrict_to->test(i)) continue;
    if (is_prime(tbl.at(i).element_order())) out.push_back(i);
  }
  return out;
}

NonGenFamily nongen_family(const PermGroup& g, const Config& cfg, Domain domain,
                           int class_id, const Bitset* universe_restrict) {
  const auto& tbl = g.elements(cfg);
  const auto& ct = g.classes(cfg);
  NonGenFamily fam;
  fam.universe = prime_order_elements(g, cfg, universe_restrict);
  fam.universe_pos.assign(tbl.size(), -1);
  for (std::uint32_t p = 0; p < fam.universe.size(); ++p)
    fam.universe_pos[fam.universe[p]] = std::int32_t(p);

  std::vector<std::uint32_t> class_ids;
  if (domain == Domain::All) {
    for (std::uint32_t i = 0; i < ct.count(); ++i) class_ids.push_back(i);
  } else {
    if (class_id < 0 || std::size_t(class_id) >= ct.count())
      throw InvalidInput("bad class id");
    class_ids.push_back(std::uint32_t(class_id));
  }

  std::uint64_t domain_size = 0;
  for (auto ci : class_ids) domain_size += ct.at(ci).size;
  std::uint64_t bits = domain_size * fam.universe.size();
  if (bits > cfg.family_bit_bound)
    throw BoundExceeded("NonGen family exceeds memory bound", cfg.family_bit_bound);

  fam.y_list.reserve(domain_size);
  std::vector<std::pair<std::uint32_t, Bitset>> rows;
  rows.reserve(domain_size);
  for (auto ci : class_ids) {
    const auto& c = ct.at(ci);
    auto members = class_members_with_conjugators(g, tbl, c);
    // one generation-test row per class representative, conjugated to the rest
    auto rep_row =
        kernels::gen_row_parallel(g, tbl, fam.universe, c.rep, cfg.threads);
    Bitset rep_set(fam.universe.size());
    for (std::uint32_t p = 0; p < rep_row.size(); ++p)
      if (!rep_row[p]) rep_set.set(p);
    for (const auto& [m, conj] : members) {
      if (m == c.rep)
        rows.push_back({m, rep_set});
      else
        rows.push_back({m, kernels::conj_subset_serial(tbl, fam.universe,
                                                       fam.universe_pos, rep_set,
                                                       conj)});
    }
  }
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [y, s] : rows) {
    fam.y_list.push_back(y);
    fam.sets.push_back(std::move(s));
  }
  return fam;
}

namespace {

// symmetry-reduced root branch: canonical class representatives of the
// element classes meeting the smallest family set
std::vector<std::uint32_t> root_candidates(const ClassTable& ct, const NonGenFamily& fam) {
  if (fam.sets.empty()) return {};
  std::size_t best = 0, best_count = SIZE_MAX;
  for (std::size_t i = 0; i < fam.sets.size(); ++i) {
    std::size_t c = fam.sets[i].count();
    if (c < best_count && c > 0) {
      best_count = c;
      best = i;
    }
  }
  std::vector<std::uint32_t> reps;
  std::vector<bool> seen_class(ct.count(), false);
  fam.sets[best].for_each([&](std::size_t pos) {
    std::uint32_t ci = ct.class_of(fam.universe[pos]);
    if (!seen_class[ci]) {
      seen_class[ci] = true;
      std::int32_t rep_pos = fam.universe_pos[ct.at(ci).rep];
      reps.push_back(std::uint32_t(rep_pos));
    }
  });
  std::sort(reps.begin(), reps.end());
  return reps;
}

HSInstance to_instance(const NonGenFamily& fam) {
  HSInstance inst;
  inst.universe = std::uint32_t(fam.universe.size());
  inst.sets = fam.sets;
  return inst;
}

std::vector<Permutation> solution_to_perms(const ElementTable& tbl,
                                           const NonGenFamily& fam,
                                           const std::vector<std::uint32_t>& sol) {
  std::vector<Permutation> out;
  for (auto p : sol) out.push_back(tbl.at(fam.universe[p]));
  return out;
}

void reject_trivial(const PermGroup& g) {
  if (g.order() == 1)
    throw InvalidInput("spread of the trivial group is not defined here");
}

}  // namespace

SpreadCertificate spread_exact(const PermGroup& g, const Config& cfg) {
  reject_trivial(g);
  SpreadCertificate cert;
  cert.method = "hitting-set";
  if (g.is_cyclic()) {
    cert.value = SpreadValue::inf();
    return cert;
  }
  const auto& tbl = g.elements(cfg);
  const auto& ct = g.classes(cfg);
  auto fam = nongen_family(g, cfg, Domain::All);
  HSOptions opts;
  opts.timeout_s = cfg.hitting_set_timeout_s;
  opts.root_candidates = root_candidates(ct, fam);
  auto r = solve_min_hitting_set(to_instance(fam), opts);
  if (r.status == HSStatus::Infeasible) {
    // only cyclic groups admit a universal partner
    cert.value = SpreadValue::inf();
    return cert;
  }
  if (r.status == HSStatus::Timeout) {
    SpreadValue v;
    v.indeterminate = true;
    v.lo = r.lower_bound > 0 ? r.lower_bound - 1 : 0;
    v.hi = r.upper_bound - 1;
    cert.value = v;
    cert.blocking_set = solution_to_perms(tbl, fam, r.solution);
    return cert;
  }
  cert.value = SpreadValue::finite(r.optimum - 1);
  cert.blocking_set = solution_to_perms(tbl, fam, r.solution);
  return cert;
}

SpreadCertificate uniform_spread_exact(const PermGroup& g, const Config& cfg) {
  reject_trivial(g);
  SpreadCertificate cert;
  cert.method = "hitting-set";
  if (g.is_cyclic()) {
    cert.value = SpreadValue::inf();
    return cert;
  }
  const auto& tbl = g.elements(cfg);
  const auto& ct = g.classes(cfg);
  std::uint64_t best = 0;
  int best_class = -1;
  std::vector<Permutation> best_blocking;
  bool any_indet = false;
  for (std::uint32_t ci = 0; ci < ct.count(); ++ci) {
    if (ct.at(ci).element_order == 1) {
      cert.per_class.push_back({ct.at(ci).label, SpreadValue::finite(0)});
      continue;
    }
    auto fam = nongen_family(g, cfg, Domain::Class, int(ci));
    HSOptions opts;
    opts.timeout_s = cfg.hitting_set_timeout_s;
    opts.root_candidates = root_candidates(ct, fam);
    auto r = solve_min_hitting_set(to_instance(fam), opts);
    if (r.status == HSStatus::Infeasible)
      throw std::logic_error("noncyclic group with an empty NonGen set");
    if (r.status == HSStatus::Timeout) {
      any_indet = true;
      SpreadValue v;
      v.indeterminate = true;
      v.lo = r.lower_bound > 0 ? r.lower_bound - 1 : 0;
      v.hi = r.upper_bound - 1;
      cert.per_class.push_back({ct.at(ci).label, v});
      continue;
    }
    std::uint64_t uc = r.optimum - 1;
    cert.per_class.push_back({ct.at(ci).label, SpreadValue::finite(uc)});
    bool better = uc > best;
    if (uc == best && best_class >= 0) {
      // determinism: smaller element order, then smaller class size
      const auto& cur = ct.at(ci);
      const auto& old = ct.at(std::uint32_t(best_class));
      better = std::make_pair(cur.element_order, cur.size) <
               std::make_pair(old.element_order, old.size);
    }
    if (best_class < 0 || better) {
      best = uc;
      best_class = int(ci);
      best_blocking = solution_to_perms(tbl, fam, r.solution);
    }
  }
  if (any_indet) {
    SpreadValue v;
    v.indeterminate = true;
    v.lo = best;
    v.hi = best;  // refined by callers if needed
    cert.value = v;
  } else {
    cert.value = SpreadValue::finite(best);
  }
  if (best_class >= 0) cert.witness_class = ct.at(std::uint32_t(best_class)).label;
  cert.blocking_set = std::move(best_blocking);
  return cert;
}

WitnessResult witness_check(const PermGroup& g, const Config& cfg, int class_id,
                            std::uint32_t k) {
  reject_trivial(g);
  if (k < 1) throw InvalidInput("witness_check requires k >= 1");
  const auto& tbl = g.elements(cfg);
  auto fam = nongen_family(g, cfg, Domain::Class, class_id);
  HSOptions opts;
  opts.timeout_s = cfg.hitting_set_timeout_s;
  opts.root_candidates = root_candidates(g.classes(cfg), fam);
  auto r = hitting_set_leq(to_instance(fam), k, opts);
  WitnessResult w;
  if (r.status == HSStatus::Infeasible) {
    w.outcome = WitnessResult::Outcome::Witnesses;  // no blocking set of any size
    return w;
  }
  if (r.status == HSStatus::Timeout) {
    w.outcome = WitnessResult::Outcome::Indeterminate;
    w.lower = r.lower_bound;
    w.upper = r.upper_bound;
    return w;
  }
  if (r.optimum <= k) {
    w.outcome = WitnessResult::Outcome::Fails;
    w.blocking = solution_to_perms(tbl, fam, r.solution);
  } else {
    w.outcome = WitnessResult::Outcome::Witnesses;
  }
  return w;
}

namespace {

Bitset group_member_bits(const PermGroup& g, const Config& cfg, const PermGroup& n) {
  const auto& tbl = g.elements(cfg);
  const auto& ntbl = n.elements(cfg);
  Bitset bits(tbl.size());
  for (std::uint32_t i = 0; i < ntbl.size(); ++i) {
    auto idx = tbl.index_of(ntbl.at(i));
    if (idx < 0) throw MembershipError("subgroup element missing from parent table");
    bits.set(std::size_t(idx));
  }
  return bits;
}

}  // namespace

SpreadValue restricted_spread(const PermGroup& g, const PermGroup& n, const Config& cfg,
                              RestrictedKind kind) {
  reject_trivial(g);
  if (!is_normal_in(g, n)) throw InvalidInput("restricted spread requires N normal in G");
  if (g.is_cyclic()) return SpreadValue::inf();
  const auto& ct = g.classes(cfg);
  Bitset nbits = group_member_bits(g, cfg, n);
  if (kind == RestrictedKind::S0) {
    auto fam = nongen_family(g, cfg, Domain::All, -1, &nbits);
    HSOptions opts;
    opts.timeout_s = cfg.hitting_set_timeout_s;
    opts.root_candidates = root_candidates(ct, fam);
    auto r = solve_min_hitting_set(to_instance(fam), opts);
    if (r.status == HSStatus::Infeasible) return SpreadValue::inf();
    if (r.status == HSStatus::Timeout) {
      SpreadValue v;
      v.indeterminate = true;
      v.lo = r.lower_bound > 0 ? r.lower_bound - 1 : 0;
      v.hi = r.upper_bound - 1;
      return v;
    }
    return SpreadValue::finite(r.optimum - 1);
  }
  // u0: max over classes
  SpreadValue bestv = SpreadValue::finite(0);
  for (std::uint32_t ci = 0; ci < ct.count(); ++ci) {
    if (ct.at(ci).element_order == 1) continue;
    auto fam = nongen_family(g, cfg, Domain::Class, int(ci), &nbits);
    HSOptions opts;
    opts.timeout_s = cfg.hitting_set_timeout_s;
    opts.root_candidates = root_candidates(ct, fam);
    auto r = solve_min_hitting_set(to_instance(fam), opts);
    if (r.status == HSStatus::Infeasible) return SpreadValue::inf();
    if (r.status == HSStatus::Timeout) {
      SpreadValue v;
      v.indeterminate = true;
      v.lo = bestv.k;
      v.hi = r.upper_bound - 1;
      return v;
    }
    if (r.optimum - 1 > bestv.k) bestv = SpreadValue::finite(r.optimum - 1);
  }
  return bestv;
}

WitnessResult restricted_witness_check(const PermGroup& g, const PermGroup& n,
                                       const Config& cfg, int class_id,
                                       std::uint32_t k) {
  reject_trivial(g);
  const auto& tbl = g.elements(cfg);
  Bitset nbits = group_member_bits(g, cfg, n);
  auto fam = nongen_family(g, cfg, Domain::Class, class_id, &nbits);
  HSOptions opts;
  opts.timeout_s = cfg.hitting_set_timeout_s;
  opts.root_candidates = root_candidates(g.classes(cfg), fam);
  auto r = hitting_set_leq(to_instance(fam), k, opts);
  WitnessResult w;
  if (r.status == HSStatus::Infeasible) {
    w.outcome = WitnessResult::Outcome::Witnesses;
    return w;
  }
  if (r.status == HSStatus::Timeout) {
    w.outcome = WitnessResult::Outcome::Indeterminate;
    w.lower = r.lower_bound;
    w.upper = r.upper_bound;
    return w;
  }
  w.outcome = r.optimum <= k ? WitnessResult::Outcome::Fails
                             : WitnessResult::Outcome::Witnesses;
  if (w.outcome == WitnessResult::Outcome::Fails)
    w.blocking = solution_to_perms(tbl, fam, r.solution);
  return w;
}

Rational exact_P(const PermGroup& g, const Config& cfg, const Permutation& z,
                 int class_id) {
  if (!g.contains(z)) throw MembershipError("exact_P: z not in the group");
  if (z.is_identity()) throw InvalidInput("exact_P requires nontrivial z");
  const auto& tbl = g.elements(cfg);
  const auto& ct = g.classes(cfg);
  const auto& c = ct.at(std::size_t(class_id));
  auto ys = c.members.to_indices();
  auto zi = tbl.index_of(z);
  std::uint64_t fails =
      kernels::nongen_count_parallel(g, tbl, std::uint32_t(zi), ys, cfg.threads);
  return Rational(std::int64_t(fails), std::int64_t(ys.size()));
}

bool verify_blocking_set(const PermGroup& g, const Config& cfg,
                         const std::vector<Permutation>& blocking, Domain domain,
                         int class_id) {
  const auto& tbl = g.elements(cfg);
  const auto& ct = g.classes(cfg);
  std::vector<std::uint32_t> ys;
  if (domain == Domain::All) {
    ys.resize(tbl.size());
    for (std::uint32_t i = 0; i < tbl.size(); ++i) ys[i] = i;
  } else {
    ys = ct.at(std::size_t(class_id)).members.to_indices();
  }
  for (auto y : ys) {
    bool serves_all = true;
    for (const auto& x : blocking)
      if (!kernels::pair_generates(g, x, tbl.at(y))) {
        serves_all = false;
        break;
      }
    if (serves_all) return false;  // a common partner exists, not blocking
  }
  return true;
}

int find_u1_witness_class(const PermGroup& g, const Config& cfg) {
  reject_trivial(g);
  const auto& tbl = g.elements(cfg);
  const auto& ct = g.classes(cfg);
  std::vector<std::uint32_t> prime_reps;
  for (std::uint32_t ci = 0; ci < ct.count(); ++ci)
    if (is_prime(ct.at(ci).element_order)) prime_reps.push_back(ct.at(ci).rep);
  for (std::uint32_t ci = 0; ci < ct.count(); ++ci) {
    const auto& c = ct.at(ci);
    if (c.element_order == 1) continue;
    auto members = c.members.to_indices();
    bool all_served = true;
    for (auto x : prime_reps) {
      bool found = false;
      const Permutation& xp = tbl.at(x);
      for (auto y : members)
        if (kernels::pair_generates(g, xp, tbl.at(y))) {
          found = true;
          break;
        }
      if (!found) {
        all_served = false;
        break;
      }
    }
    if (all_served) return int(ci);
  }
  return -1;
}

}  // namespace spreadlab::genlib
