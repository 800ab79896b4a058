#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <vector>

#include "spreadlab/bitset.hpp"
#include "spreadlab/config.hpp"
#include "spreadlab/permutation.hpp"

namespace spreadlab {

// Base and strong generating set via deterministic Schreier-Sims.
class StabChain {
 public:
  StabChain(unsigned degree, const std::vector<Permutation>& gens);

  std::uint64_t order() const { return order_; }
  bool contains(const Permutation& p) const;
  unsigned degree() const { return degree_; }
  std::size_t base_length() const { return levels_.size(); }
  // uniform random element (product of uniformly chosen transversal elements)
  Permutation random_element(std::mt19937_64& rng) const;

 private:
  struct Level {
    Pt base = 0;
    std::vector<Permutation> gens;
    std::vector<std::int32_t> pos;  // point -> orbit position, -1 outside
    std::vector<Pt> orbit;
    std::vector<Permutation> transversal;  // maps base -> orbit[i]
  };

  void rebuild_orbit(Level& lv);
  // sifts g through levels starting at `from`; returns residue and the level
  // where sifting stopped
  std::pair<Permutation, std::size_t> sift_from(Permutation g, std::size_t from) const;
  void complete(std::size_t level);

  unsigned degree_;
  std::vector<Level> levels_;
  std::uint64_t order_ = 1;
};

// Exhaustive, canonically ordered element list with an index lookup table.
class ElementTable {
 public:
  static std::shared_ptr<const ElementTable> build(unsigned degree,
                                                   const std::vector<Permutation>& gens,
                                                   std::uint64_t bound);

  std::uint32_t size() const { return std::uint32_t(elems_.size()); }
  const Permutation& at(std::uint32_t i) const { return elems_[i]; }
  // -1 when absent
  std::int64_t index_of(const Permutation& p) const;
  std::uint32_t identity_index() const { return id_idx_; }

  // index-level composition helpers
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t conj(std::uint32_t x, std::uint32_t g) const;

 private:
  void build_hash();
  std::vector<Permutation> elems_;
  std::vector<std::uint32_t> slots_;  // open addressing, values are index+1
  std::uint64_t mask_ = 0;
  std::uint32_t id_idx_ = 0;
};

class ClassTable;      // classes.hpp
class SubgroupLattice; // overgroups.hpp

// Immutable permutation group handle. Copies share the underlying data;
// expensive tables are computed once on first use and are safe to read
// concurrently afterwards.
class PermGroup {
 public:
  explicit PermGroup(std::vector<Permutation> gens);
  PermGroup(unsigned degree, std::vector<Permutation> gens);
  static PermGroup trivial(unsigned degree);

  unsigned degree() const;
  const std::vector<Permutation>& generators() const;
  std::uint64_t order() const;
  bool contains(const Permutation& p) const;
  Permutation identity() const;
  const StabChain& chain() const;
  Permutation random_element(std::mt19937_64& rng) const;

  const ElementTable& elements(const Config& cfg) const;
  bool elements_ready() const;
  const ClassTable& classes(const Config& cfg) const;

  bool is_abelian() const;
  bool is_cyclic() const;

  // subgroup test against another group on the same points
  bool contains_group(const PermGroup& h) const;

  bool same_group_as(const PermGroup& o) const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

// order of <gens> (degree shared); cheap wrapper over StabChain
std::uint64_t subgroup_order(unsigned degree, const std::vector<Permutation>& gens);

}  // namespace spreadlab
