#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "spreadlab/gf.hpp"
#include "spreadlab/perm_group.hpp"

namespace spreadlab {

// 2x2 matrix over a field, row-major, entries as field indices. Row vectors
// act on the right: (x, y) * M.
struct Mat2 {
  std::array<std::uint32_t, 4> a{0, 0, 0, 0};
  bool operator==(const Mat2& o) const { return a == o.a; }
  std::uint64_t key() const {
    return (std::uint64_t(a[0]) << 48) | (std::uint64_t(a[1]) << 32) |
           (std::uint64_t(a[2]) << 16) | std::uint64_t(a[3]);
  }
};

Mat2 mat2_identity();
Mat2 mat2_mul(const Field& F, const Mat2& x, const Mat2& y);
std::uint32_t mat2_det(const Field& F, const Mat2& m);
Mat2 mat2_inv(const Field& F, const Mat2& m);
Mat2 mat2_frob_iter(const Field& F, const Mat2& m, int t);
std::uint64_t mat2_order(const Field& F, const Mat2& m);

// all of SL2(F); |SL2(q)| = q(q^2-1)
std::vector<Mat2> sl2_elements(const Field& F);
std::vector<Mat2> sl2_generators(const Field& F);

// projective line P^1(q): point i < q is [x_i : 1], point q is [1 : 0]
unsigned p1_degree(const Field& F);
Pt p1_point_of(const Field& F, std::uint32_t x, std::uint32_t y);
Permutation p1_action(const Field& F, const Mat2& m);
Permutation p1_frobenius(const Field& F);  // [x:y] -> [x^p:y^p]

// classical permutation realizations (orders are asserted inside)
PermGroup psl2(std::uint64_t q);
PermGroup pgl2(std::uint64_t q);
PermGroup pgammal2(std::uint64_t q);
PermGroup m10();

// PSU(3,q) on the q^3+1 isotropic points of the Hermitian form
// u1 v3^q + u2 v2^q + u3 v1^q; ext2 adjoins the involutory field automorphism
PermGroup psu3(std::uint64_t q, bool ext2);

// Sz(q) on the q^2+1 ovoid points, q = 2^(2m+1); field_auto adjoins the
// Frobenius generator of the outer cyclic group (order 2m+1)
PermGroup suzuki(std::uint64_t q, bool field_auto);

std::uint64_t psl2_order(std::uint64_t q);
std::uint64_t psu3_order(std::uint64_t q);
std::uint64_t suzuki_order(std::uint64_t q);

}  // namespace spreadlab
