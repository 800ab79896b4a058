#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace spreadlab {

using Pt = std::uint16_t;

// Permutation of {0,...,n-1} by image array. Composition applies the left
// factor first: (x)^(a*b) = ((x)^a)^b. User-facing I/O is 1-indexed cycle
// notation; everything internal is 0-indexed.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(unsigned degree);  // identity

  // validates bijectivity
  static Permutation from_images(std::vector<Pt> images);
  // "(1,2,3)(4,5)" on a fixed degree; "()" is the identity
  static Permutation from_cycles(unsigned degree, const std::string& text);

  unsigned degree() const { return unsigned(img_.size()); }
  Pt apply(Pt p) const { return img_[p]; }
  const std::vector<Pt>& images() const { return img_; }

  bool is_identity() const;
  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  // g^-1 * this * g
  Permutation conjugated_by(const Permutation& g) const;
  Permutation power(std::int64_t e) const;
  std::uint64_t element_order() const;

  std::string cycle_string() const;

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  std::strong_ordering operator<=>(const Permutation& o) const {
    return img_ <=> o.img_;
  }

  std::uint64_t hash() const;

 private:
  std::vector<Pt> img_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const { return std::size_t(p.hash()); }
};

}  // namespace spreadlab
