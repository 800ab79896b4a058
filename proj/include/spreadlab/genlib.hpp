#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spreadlab/bitset.hpp"
#include "spreadlab/classes.hpp"
#include "spreadlab/config.hpp"
#include "spreadlab/hitting_set.hpp"
#include "spreadlab/perm_group.hpp"
#include "spreadlab/rational.hpp"
#include "spreadlab/structure.hpp"

namespace spreadlab::genlib {

// s(G), u(G), s_0, u_0 take values in {0,1,2,...} u {infinity}; a timed-out
// computation degrades to an interval.
struct SpreadValue {
  bool infinite = false;
  bool indeterminate = false;
  std::uint64_t k = 0;
  std::uint64_t lo = 0, hi = 0;  // when indeterminate

  static SpreadValue inf() {
    SpreadValue v;
    v.infinite = true;
    return v;
  }
  static SpreadValue finite(std::uint64_t n) {
    SpreadValue v;
    v.k = n;
    return v;
  }
  std::string str() const;
  bool operator==(const SpreadValue& o) const {
    return infinite == o.infinite && indeterminate == o.indeterminate &&
           (infinite || indeterminate || k == o.k);
  }
};

struct SpreadCertificate {
  SpreadValue value;
  std::string witness_class;                  // uniform spread: best witness
  std::vector<Permutation> blocking_set;      // upper-bound evidence
  std::string method;                         // definitional | hitting-set | probabilistic
  std::vector<std::pair<std::string, SpreadValue>> per_class;  // uniform variant
};

// Dual encoding of the generation condition: one set per y over an indexed
// universe of prime-order elements.
struct NonGenFamily {
  std::vector<std::uint32_t> universe;      // element indices, ascending
  std::vector<std::int32_t> universe_pos;   // element index -> position, -1 outside
  std::vector<std::uint32_t> y_list;        // domain, ascending element indices
  std::vector<Bitset> sets;                 // sets[i] = NonGen(y_list[i])
};

enum class Domain { All, Class };

bool generates(const PermGroup& g, const Permutation& x, const Permutation& y);

// prime-order elements of G, optionally restricted to a normal subgroup's set
std::vector<std::uint32_t> prime_order_elements(const PermGroup& g, const Config& cfg,
                                                const Bitset* restrict_to = nullptr);

NonGenFamily nongen_family(const PermGroup& g, const Config& cfg, Domain domain,
                           int class_id = -1, const Bitset* universe_restrict = nullptr);

SpreadCertificate spread_exact(const PermGroup& g, const Config& cfg);
SpreadCertificate uniform_spread_exact(const PermGroup& g, const Config& cfg);

struct WitnessResult {
  enum class Outcome { Witnesses, Fails, Indeterminate } outcome;
  std::vector<Permutation> blocking;  // on Fails: k or fewer elements defeating C
  std::uint32_t lower = 0, upper = 0;  // hitting-set bounds on Indeterminate
};
// true outcome means no blocking tuple of size <= k exists for class C
WitnessResult witness_check(const PermGroup& g, const Config& cfg, int class_id,
                            std::uint32_t k);

enum class RestrictedKind { S0, U0 };
SpreadValue restricted_spread(const PermGroup& g, const PermGroup& n, const Config& cfg,
                              RestrictedKind kind);
// does class C witness the restricted u_0 >= k?
WitnessResult restricted_witness_check(const PermGroup& g, const PermGroup& n,
                                       const Config& cfg, int class_id, std::uint32_t k);

// |{y in C : <z,y> != G}| / |C|
Rational exact_P(const PermGroup& g, const Config& cfg, const Permutation& z,
                 int class_id);

// re-verify that a blocking set admits no common generating partner in the
// domain (exhaustive over y)
bool verify_blocking_set(const PermGroup& g, const Config& cfg,
                         const std::vector<Permutation>& blocking, Domain domain,
                         int class_id = -1);

// least class id witnessing u >= 1, or -1; avoids family construction, so it
// scales to the large wreath instances
int find_u1_witness_class(const PermGroup& g, const Config& cfg);

}  // namespace spreadlab::genlib
