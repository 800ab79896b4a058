#include "spreadlab/perm_group.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "spreadlab/classes.hpp"
#include "spreadlab/errors.hpp"

namespace spreadlab {

// ---------------------------------------------------------------------------
// StabChain
//
// Deterministic Schreier-Sims. Level l holds the generators of the stabilizer
// of the first l base points; the sets are nested, so a strong generator of
// depth d is stored at every level 0..d.

StabChain::StabChain(unsigned degree, const std::vector<Permutation>& gens)
    : degree_(degree) {
  std::vector<Permutation> start;
  for (const auto& g : gens) {
    if (g.degree() != degree_) throw InvalidInput("generator degree mismatch");
    if (g.is_identity()) continue;
    if (std::find(start.begin(), start.end(), g) == start.end()) start.push_back(g);
  }
  if (start.empty()) {
    order_ = 1;
    return;
  }
  Level lv0;
  for (Pt p = 0; p < degree_; ++p) {
    bool moved = false;
    for (const auto& g : start)
      if (g.apply(p) != p) {
        moved = true;
        break;
      }
    if (moved) {
      lv0.base = p;
      break;
    }
  }
  lv0.gens = start;
  levels_.push_back(std::move(lv0));
  rebuild_orbit(levels_[0]);
  complete(0);
  order_ = 1;
  for (auto& lv : levels_) order_ *= lv.orbit.size();
}

void StabChain::rebuild_orbit(Level& lv) {
  lv.pos.assign(degree_, -1);
  lv.orbit.clear();
  lv.transversal.clear();
  lv.orbit.push_back(lv.base);
  lv.transversal.push_back(Permutation(degree_));
  lv.pos[lv.base] = 0;
  for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
    for (const auto& g : lv.gens) {
      Pt q = g.apply(lv.orbit[i]);
      if (lv.pos[q] < 0) {
        lv.pos[q] = std::int32_t(lv.orbit.size());
        lv.orbit.push_back(q);
        lv.transversal.push_back(lv.transversal[i] * g);
      }
    }
  }
}

std::pair<Permutation, std::size_t> StabChain::sift_from(Permutation g,
                                                         std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const Level& lv = levels_[l];
    Pt img = g.apply(lv.base);
    if (lv.pos[img] < 0) return {std::move(g), l};
    g = g * lv.transversal[lv.pos[img]].inverse();
  }
  return {std::move(g), levels_.size()};
}

void StabChain::complete(std::size_t level) {
  std::size_t i = level;
  while (true) {
    bool extended = false;
    {
      Level& lv = levels_[i];
      for (std::size_t oi = 0; oi < lv.orbit.size() && !extended; ++oi) {
        for (std::size_t si = 0; si < lv.gens.size(); ++si) {
          const Permutation& s = lv.gens[si];
          Pt q = s.apply(lv.orbit[oi]);
          Permutation schreier =
              lv.transversal[oi] * s * lv.transversal[lv.pos[q]].inverse();
          if (schreier.is_identity()) continue;
          auto [res, j] = sift_from(schreier, i + 1);
          if (res.is_identity()) continue;
          if (j >= levels_.size()) {
            Level nl;
            for (Pt p = 0; p < degree_; ++p)
              if (res.apply(p) != p) {
                nl.base = p;
                break;
              }
            levels_.push_back(std::move(nl));
            j = levels_.size() - 1;
          }
          // depth: number of leading base points fixed by the residue
          std::size_t depth = 0;
          while (depth < levels_.size() &&
                 res.apply(levels_[depth].base) == levels_[depth].base)
            ++depth;
          assert(depth >= i + 1 && depth <= j);
          for (std::size_t l = 0; l <= depth && l < levels_.size(); ++l) {
            levels_[l].gens.push_back(res);
            rebuild_orbit(levels_[l]);
          }
          i = j;
          extended = true;
          break;
        }
      }
    }
    if (extended) continue;
    if (i == 0) break;
    --i;
  }
}

bool StabChain::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  auto [res, lvl] = sift_from(p, 0);
  (void)lvl;
  return res.is_identity();
}

Permutation StabChain::random_element(std::mt19937_64& rng) const {
  // sifting factorizes g = t_{k-1} * ... * t_0, one transversal element per
  // level, so sampling each factor uniformly samples the group uniformly
  Permutation r(degree_);
  for (auto it = levels_.rbegin(); it != levels_.rend(); ++it) {
    std::uniform_int_distribution<std::size_t> d(0, it->orbit.size() - 1);
    r = r * it->transversal[d(rng)];
  }
  return r;
}

// ---------------------------------------------------------------------------
// ElementTable

std::shared_ptr<const ElementTable> ElementTable::build(
    unsigned degree, const std::vector<Permutation>& gens, std::uint64_t bound) {
  auto tbl = std::make_shared<ElementTable>();
  std::vector<Permutation> out;
  out.push_back(Permutation(degree));
  std::uint64_t want = std::min<std::uint64_t>(bound + 1, 1ull << 28);
  std::uint64_t cap = 64;
  while (cap < 2 * want) cap <<= 1;
  std::vector<std::uint32_t> slots(cap, 0);
  std::uint64_t mask = cap - 1;
  auto find_or_insert = [&](const Permutation& p, std::uint32_t idx) -> bool {
    std::uint64_t h = p.hash() & mask;
    while (slots[h]) {
      if (out[slots[h] - 1] == p) return false;
      h = (h + 1) & mask;
    }
    slots[h] = idx + 1;
    return true;
  };
  find_or_insert(out[0], 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : gens) {
      Permutation n = out[i] * g;
      if (find_or_insert(n, std::uint32_t(out.size()))) {
        out.push_back(std::move(n));
        if (out.size() > bound)
          throw BoundExceeded("element enumeration exceeds bound", bound);
      }
    }
  }
  std::sort(out.begin(), out.end());
  tbl->elems_ = std::move(out);
  tbl->build_hash();
  return tbl;
}

void ElementTable::build_hash() {
  std::uint64_t cap = 64;
  while (cap < 2 * elems_.size()) cap <<= 1;
  slots_.assign(cap, 0);
  mask_ = cap - 1;
  for (std::uint32_t i = 0; i < elems_.size(); ++i) {
    std::uint64_t h = elems_[i].hash() & mask_;
    while (slots_[h]) h = (h + 1) & mask_;
    slots_[h] = i + 1;
    if (elems_[i].is_identity()) id_idx_ = i;
  }
}

std::int64_t ElementTable::index_of(const Permutation& p) const {
  std::uint64_t h = p.hash() & mask_;
  while (slots_[h]) {
    if (elems_[slots_[h] - 1] == p) return slots_[h] - 1;
    h = (h + 1) & mask_;
  }
  return -1;
}

std::uint32_t ElementTable::mul(std::uint32_t a, std::uint32_t b) const {
  auto i = index_of(elems_[a] * elems_[b]);
  assert(i >= 0);
  return std::uint32_t(i);
}

std::uint32_t ElementTable::inv(std::uint32_t a) const {
  auto i = index_of(elems_[a].inverse());
  assert(i >= 0);
  return std::uint32_t(i);
}

std::uint32_t ElementTable::conj(std::uint32_t x, std::uint32_t g) const {
  auto i = index_of(elems_[x].conjugated_by(elems_[g]));
  assert(i >= 0);
  return std::uint32_t(i);
}

// ---------------------------------------------------------------------------
// PermGroup

struct PermGroup::Impl {
  unsigned degree;
  std::vector<Permutation> gens;
  std::unique_ptr<StabChain> chain;

  std::mutex mtx;
  std::shared_ptr<const ElementTable> elems;
  std::shared_ptr<const ClassTable> classes;
};

PermGroup::PermGroup(std::vector<Permutation> gens) {
  if (gens.empty()) throw InvalidInput("a generator list is required (use trivial(n))");
  unsigned d = gens[0].degree();
  if (d == 0) throw InvalidInput("degree must be >= 1");
  impl_ = std::make_shared<Impl>();
  impl_->degree = d;
  impl_->gens = std::move(gens);
  for (const auto& g : impl_->gens)
    if (g.degree() != d) throw InvalidInput("generators must share a common degree");
  impl_->chain = std::make_unique<StabChain>(d, impl_->gens);
}

PermGroup::PermGroup(unsigned degree, std::vector<Permutation> gens) {
  if (degree == 0) throw InvalidInput("degree must be >= 1");
  impl_ = std::make_shared<Impl>();
  impl_->degree = degree;
  if (gens.empty()) gens.push_back(Permutation(degree));
  impl_->gens = std::move(gens);
  for (const auto& g : impl_->gens)
    if (g.degree() != degree) throw InvalidInput("generators must share a common degree");
  impl_->chain = std::make_unique<StabChain>(degree, impl_->gens);
}

PermGroup PermGroup::trivial(unsigned degree) {
  return PermGroup(degree, {Permutation(degree)});
}

unsigned PermGroup::degree() const { return impl_->degree; }
const std::vector<Permutation>& PermGroup::generators() const { return impl_->gens; }
std::uint64_t PermGroup::order() const { return impl_->chain->order(); }
bool PermGroup::contains(const Permutation& p) const { return impl_->chain->contains(p); }
Permutation PermGroup::identity() const { return Permutation(impl_->degree); }
const StabChain& PermGroup::chain() const { return *impl_->chain; }

Permutation PermGroup::random_element(std::mt19937_64& rng) const {
  return impl_->chain->random_element(rng);
}

const ElementTable& PermGroup::elements(const Config& cfg) const {
  std::lock_guard<std::mutex> lk(impl_->mtx);
  if (!impl_->elems) {
    if (order() > cfg.element_enum_bound)
      throw BoundExceeded("group too large for exhaustive enumeration",
                          cfg.element_enum_bound);
    impl_->elems = ElementTable::build(impl_->degree, impl_->gens, order());
  }
  return *impl_->elems;
}

bool PermGroup::elements_ready() const {
  std::lock_guard<std::mutex> lk(impl_->mtx);
  return impl_->elems != nullptr;
}

const ClassTable& PermGroup::classes(const Config& cfg) const {
  {
    std::lock_guard<std::mutex> lk(impl_->mtx);
    if (impl_->classes) return *impl_->classes;
  }
  if (order() > cfg.class_enum_bound)
    throw BoundExceeded("group too large for class enumeration", cfg.class_enum_bound);
  const ElementTable& tbl = elements(cfg);
  auto ct = ClassTable::build(*this, tbl);
  std::lock_guard<std::mutex> lk(impl_->mtx);
  if (!impl_->classes) impl_->classes = std::move(ct);
  return *impl_->classes;
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < impl_->gens.size(); ++i)
    for (std::size_t j = i + 1; j < impl_->gens.size(); ++j)
      if (!(impl_->gens[i] * impl_->gens[j] == impl_->gens[j] * impl_->gens[i]))
        return false;
  return true;
}

bool PermGroup::is_cyclic() const {
  if (!is_abelian()) return false;
  // an abelian group is cyclic iff its exponent (= lcm of generator orders)
  // equals its order
  std::uint64_t expo = 1;
  for (const auto& g : impl_->gens) expo = std::lcm(expo, g.element_order());
  return expo == order();
}

bool PermGroup::contains_group(const PermGroup& h) const {
  for (const auto& g : h.generators())
    if (!contains(g)) return false;
  return true;
}

bool PermGroup::same_group_as(const PermGroup& o) const {
  return degree() == o.degree() && order() == o.order() && contains_group(o);
}

std::uint64_t subgroup_order(unsigned degree, const std::vector<Permutation>& gens) {
  StabChain c(degree, gens);
  return c.order();
}

}  // namespace spreadlab
