#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spreadlab {

// GF(p^k) with elements indexed 0..p^k-1; the index digits in base p are the
// coefficients of the polynomial basis (little-endian). The defining
// polynomial is the lexicographically least primitive polynomial of degree k
// over GF(p), found by search, so the descriptor (p, k, coefficients) pins the
// arithmetic bit-exactly.
class Field {
 public:
  Field(int p, int k);

  int p() const { return p_; }
  int k() const { return k_; }
  std::uint32_t size() const { return size_; }
  const std::vector<int>& poly() const { return poly_; }  // c_0..c_k, monic
  std::string descriptor() const;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (size_ - 1)];
  }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t generator() const { return gen_; }

  // Frobenius x -> x^p and its iterates
  std::uint32_t frob(std::uint32_t a) const { return frob_[a]; }
  std::uint32_t frob_iter(std::uint32_t a, int t) const;

  // multiplicative order; 0 input is invalid
  std::uint64_t mult_order(std::uint32_t a) const;

  // embedding table from a subfield (sub.k() | k()): image of every subfield
  // element under the lex-least-root embedding
  std::vector<std::uint32_t> embed_from(const Field& sub) const;

 private:
  bool try_tables(const std::vector<int>& poly);

  int p_, k_;
  std::uint32_t size_;
  std::uint32_t gen_;
  std::vector<int> poly_;
  std::vector<std::uint32_t> exp_, log_, frob_;
};

bool is_prime_u64(std::uint64_t n);
// q = p^k for prime p; false when q is not a prime power
bool factor_prime_power(std::uint64_t q, int& p, int& k);

// process-wide immutable caches; references stay valid for the process life
const Field& cached_field(int p, int k);
const std::vector<std::uint32_t>& cached_embedding(const Field& sub, const Field& sup);

}  // namespace spreadlab
