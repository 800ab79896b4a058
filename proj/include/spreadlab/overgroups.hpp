#pragma once

#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "spreadlab/classes.hpp"
#include "spreadlab/config.hpp"
#include "spreadlab/perm_group.hpp"
#include "spreadlab/rational.hpp"
#include "spreadlab/structure.hpp"

namespace spreadlab::overgroups {

// Every maximal subgroup of G (all conjugates), found by walking the
// subgroup-class poset upward from prime-order cyclic subgroups.
struct MaximalSubgroups {
  std::vector<Subgroup> subgroups;          // all maximal subgroups
  std::vector<std::uint32_t> class_of;      // conjugacy class id per subgroup
  std::size_t class_count = 0;
  std::vector<std::uint32_t> class_rep;     // one subgroup index per class

  std::vector<std::uint32_t> containing(std::uint32_t elem_idx) const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < subgroups.size(); ++i)
      if (subgroups[i].members.test(elem_idx)) out.push_back(i);
    return out;
  }
};

std::shared_ptr<const MaximalSubgroups> all_maximal_subgroups(const PermGroup& g,
                                                              const Config& cfg);

// The set M(x) of maximal overgroups of x, grouped into conjugacy classes of
// subgroups. When a socle is designated, members can be filtered by H*socle=G.
struct OvergroupSet {
  Permutation anchor;
  std::vector<Subgroup> members;
  std::vector<std::uint32_t> class_of;  // per member, class id within this set
  std::size_t class_count = 0;
};

OvergroupSet maximal_overgroups(const PermGroup& g, const Config& cfg,
                                const Permutation& x,
                                const PermGroup* socle = nullptr);

// fixed point ratio fpr(z, G/H) = |z^G n H| / |z^G|
Rational fpr_class_intersection(const PermGroup& g, const Config& cfg,
                                std::uint32_t z_class, const Subgroup& h);
// the same quantity counted as fixed cosets over the index
Rational fpr_coset_count(const PermGroup& g, const Config& cfg, const Permutation& z,
                         const Subgroup& h);
Rational fpr(const PermGroup& g, const Config& cfg, std::uint32_t z_class,
             const Subgroup& h);

// per nontrivial class z: sum over H in M(x) of fpr(z, G/H)
std::vector<std::pair<std::string, Rational>> prob_bound(const PermGroup& g,
                                                         const Config& cfg,
                                                         const Permutation& x);

struct UspreadCertificate {
  bool certified = false;
  std::string witness_class;
  std::uint32_t k = 0;
  std::string mode;           // "fpr-bound" or "exact-P"
  Rational max_value;         // largest bound or exact P over nontrivial z
  std::string max_z_class;    // class attaining it
};

enum class CertifyMode { FprBound, ExactP };

// Certifies u(G) >= k witnessed by class C when the probabilistic criterion
// holds; a refusal is not a disproof.
UspreadCertificate certify_uspread(const PermGroup& g, const Config& cfg, int class_id,
                                   std::uint32_t k, CertifyMode mode);

// invariant check: <H, g> = G for random g outside H
bool verify_maximality(const PermGroup& g, const Config& cfg, const Subgroup& h,
                       int trials, std::mt19937_64& rng);

}  // namespace spreadlab::overgroups
