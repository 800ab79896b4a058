#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "spreadlab/config.hpp"
#include "spreadlab/gf.hpp"
#include "spreadlab/matgroup.hpp"

namespace spreadlab::shintani {

// SL2(q0^e) with the entrywise Frobenius sigma: x -> x^{q0}, its extended
// group SL2(q0^e):<sigma>, and the fixed subgroup SL2(q0). All matrices carry
// entries in the big field; the base field embeds via its lex-least root.
//
// Semidirect convention: (m1,s)(m2,t) = (m1 * m2^{sigma^{-s}}, s+t), matching
// the coset correspondence g = a * a^{-sigma^{-1}}. On GF(q0^e), sigma^{-1} is
// the (e-1)-fold q0-power Frobenius; on the level-j search field GF(q0^{e j})
// it is the (e j - 1)-fold one.
class ShintaniContext {
 public:
  ShintaniContext(int q0, int e);

  int q0() const { return q0_; }
  int e() const { return e_; }
  const Field& big_field() const { return *Fbig_; }
  const Field& base_field() const { return *Fbase_; }

  // sigma and its inverse on big-field entries
  Mat2 sigma(const Mat2& m) const { return mat2_frob_iter(*Fbig_, m, i_); }
  Mat2 sigma_inv(const Mat2& m) const {
    return mat2_frob_iter(*Fbig_, m, i_ * (e_ - 1));
  }

  // SL2(q0^e) enumeration with index lookup
  const std::vector<Mat2>& big_elements() const { return big_elems_; }
  std::int64_t big_index(const Mat2& m) const;

  // SL2(q0) as a subgroup of the big matrices, plus its own class table
  const std::vector<Mat2>& base_elements_embedded() const { return base_embedded_; }
  std::size_t base_class_count() const { return base_class_of_.size() ? base_classes_ : 0; }
  std::uint32_t base_class_of(const Mat2& embedded) const;
  std::uint64_t base_class_size(std::uint32_t c) const { return base_class_sizes_[c]; }
  std::uint64_t base_centralizer_order(std::uint32_t c) const {
    return base_embedded_.size() / base_class_sizes_[c];
  }
  const Mat2& base_class_rep(std::uint32_t c) const { return base_class_reps_[c]; }

  // norm N(g) = g g^{sigma^-1} ... g^{sigma^-(e-1)} = group part of (g sigma)^e
  Mat2 norm(const Mat2& g) const;
  std::uint64_t coset_element_order(const Mat2& g) const;

  int frob_step() const { return i_; }

 private:
  int q0_, e_, i_;  // q0 = p^i
  int p_;
  std::unique_ptr<Field> Fbig_, Fbase_;
  std::vector<Mat2> big_elems_;
  std::vector<std::int64_t> big_lookup_;
  std::vector<Mat2> base_embedded_;
  std::size_t base_classes_ = 0;
  std::vector<std::uint32_t> base_class_of_;  // indexed like base_embedded_
  std::vector<std::uint64_t> base_class_sizes_;
  std::vector<Mat2> base_class_reps_;
  std::map<std::uint64_t, std::uint32_t> base_pos_;  // embedded key -> position
};

// classes of the coset SL2(q0^e) sigma under SL2(q0^e)-conjugation,
// i.e. orbits of g -> h^-1 g h^{sigma^-1}
struct CosetClass {
  Mat2 rep;                 // least element key in the class
  std::uint64_t size = 0;
  std::uint64_t element_order = 0;  // |g sigma| shared by the class
  std::vector<std::uint32_t> members;  // indices into big_elements()
};

std::vector<CosetClass> coset_classes(const ShintaniContext& ctx, const Config& cfg);

// per-class order law |g sigma| = e |F(g sigma)|, checked against the map
bool order_law(const ShintaniContext& ctx, const Config& cfg);

struct LangWitness {
  int level = 0;       // j: witness found in SL2(q0^{e j})
  Mat2 a;              // entries in the level field
  Mat2 second;         // an independent witness for well-definedness checks
  bool found = false;
};

// solves g = a a^{-sigma^{-1}} over SL2(q0^{e j}) for j = 1..J
LangWitness lang_steinberg(const ShintaniContext& ctx, const Mat2& g, int max_level);

struct ShintaniMap {
  // coset class -> base class id; aligned with coset_classes output
  std::vector<std::int32_t> image;            // -1 when the search failed
  std::vector<int> witness_level;
  bool complete = true;
  bool bijective = false;
  bool independent = true;  // second witness and second representative agree
};

ShintaniMap shintani_map(const ShintaniContext& ctx, const Config& cfg);

// number of Borel-normalizer conjugates containing g sigma equals the number
// of Borel subgroups of SL2(q0) containing F(g sigma); checked per class
bool parabolic_count_check(const ShintaniContext& ctx, const Config& cfg);

enum class NamedSubgroup { BorelNormalizer, SplitTorusNormalizer, FullGroup };

// conjugates of H containing g sigma are at most |C_{SL2(q0)}(F(g sigma))|
bool centralizer_bound_check(const ShintaniContext& ctx, const Config& cfg,
                             NamedSubgroup which);

}  // namespace spreadlab::shintani
