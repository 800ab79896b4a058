#include "spreadlab/matgroup.hpp"

#include <numeric>

#include "spreadlab/errors.hpp"

namespace spreadlab {

Mat2 mat2_identity() { return Mat2{{1, 0, 0, 1}}; }

Mat2 mat2_mul(const Field& F, const Mat2& x, const Mat2& y) {
  Mat2 r;
  r.a[0] = F.add(F.mul(x.a[0], y.a[0]), F.mul(x.a[1], y.a[2]));
  r.a[1] = F.add(F.mul(x.a[0], y.a[1]), F.mul(x.a[1], y.a[3]));
  r.a[2] = F.add(F.mul(x.a[2], y.a[0]), F.mul(x.a[3], y.a[2]));
  r.a[3] = F.add(F.mul(x.a[2], y.a[1]), F.mul(x.a[3], y.a[3]));
  return r;
}

std::uint32_t mat2_det(const Field& F, const Mat2& m) {
  return F.sub(F.mul(m.a[0], m.a[3]), F.mul(m.a[1], m.a[2]));
}

Mat2 mat2_inv(const Field& F, const Mat2& m) {
  std::uint32_t d = mat2_det(F, m);
  std::uint32_t di = F.inv(d);
  Mat2 r;
  r.a[0] = F.mul(m.a[3], di);
  r.a[1] = F.mul(F.neg(m.a[1]), di);
  r.a[2] = F.mul(F.neg(m.a[2]), di);
  r.a[3] = F.mul(m.a[0], di);
  return r;
}

Mat2 mat2_frob_iter(const Field& F, const Mat2& m, int t) {
  Mat2 r;
  for (int i = 0; i < 4; ++i) r.a[std::size_t(i)] = F.frob_iter(m.a[std::size_t(i)], t);
  return r;
}

std::uint64_t mat2_order(const Field& F, const Mat2& m) {
  Mat2 id = mat2_identity();
  Mat2 cur = m;
  std::uint64_t o = 1;
  while (!(cur == id)) {
    cur = mat2_mul(F, cur, m);
    ++o;
    if (o > F.size() * std::uint64_t(F.size()) * 4)
      throw std::logic_error("matrix order runaway");
  }
  return o;
}

std::vector<Mat2> sl2_elements(const Field& F) {
  const std::uint32_t q = F.size();
  if (q > 128) throw BoundExceeded("SL2 element enumeration", 128);
  std::vector<Mat2> out;
  out.reserve(std::size_t(q) * q * q);
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      for (std::uint32_t c = 0; c < q; ++c) {
        if (a != 0) {
          // d = (1 + bc) / a
          std::uint32_t d = F.mul(F.add(1, F.mul(b, c)), F.inv(a));
          out.push_back(Mat2{{a, b, c, d}});
        } else {
          // det = -bc = 1
          if (b == 0) continue;
          std::uint32_t need_c = F.neg(F.inv(b));
          if (c == need_c)
            for (std::uint32_t d = 0; d < q; ++d) out.push_back(Mat2{{a, b, c, d}});
        }
      }
  return out;
}

std::vector<Mat2> sl2_generators(const Field& F) {
  std::uint32_t z = F.generator();
  std::vector<Mat2> gens;
  gens.push_back(Mat2{{1, 1, 0, 1}});
  gens.push_back(Mat2{{1, 0, 1, 1}});
  if (F.k() > 1) {
    gens.push_back(Mat2{{1, z, 0, 1}});
    gens.push_back(Mat2{{1, 0, z, 1}});
  }
  return gens;
}

unsigned p1_degree(const Field& F) { return F.size() + 1; }

Pt p1_point_of(const Field& F, std::uint32_t x, std::uint32_t y) {
  if (y != 0) return Pt(F.mul(x, F.inv(y)));
  if (x == 0) throw InvalidInput("projective point (0,0)");
  return Pt(F.size());
}

Permutation p1_action(const Field& F, const Mat2& m) {
  const std::uint32_t q = F.size();
  std::vector<Pt> img(q + 1);
  for (std::uint32_t i = 0; i <= q; ++i) {
    std::uint32_t x = i < q ? i : 1;
    std::uint32_t y = i < q ? 1 : 0;
    std::uint32_t nx = F.add(F.mul(x, m.a[0]), F.mul(y, m.a[2]));
    std::uint32_t ny = F.add(F.mul(x, m.a[1]), F.mul(y, m.a[3]));
    img[i] = p1_point_of(F, nx, ny);
  }
  return Permutation::from_images(std::move(img));
}

Permutation p1_frobenius(const Field& F) {
  const std::uint32_t q = F.size();
  std::vector<Pt> img(q + 1);
  for (std::uint32_t i = 0; i < q; ++i) img[i] = Pt(F.frob(i));
  img[q] = Pt(q);
  return Permutation::from_images(std::move(img));
}

std::uint64_t psl2_order(std::uint64_t q) {
  std::uint64_t n = q * (q * q - 1);
  return q % 2 == 0 ? n : n / 2;
}

std::uint64_t psu3_order(std::uint64_t q) {
  std::uint64_t n = q * q * q * (q * q - 1) * (q * q * q + 1);
  return n / std::gcd<std::uint64_t>(3, q + 1);
}

std::uint64_t suzuki_order(std::uint64_t q) { return q * q * (q * q + 1) * (q - 1); }

namespace {

int pp_k(std::uint64_t q, int& p) {
  int k = 0;
  if (!factor_prime_power(q, p, k)) throw InvalidInput("q must be a prime power");
  return k;
}

PermGroup checked(std::vector<Permutation> gens, std::uint64_t expected,
                  const char* what) {
  PermGroup g(std::move(gens));
  if (g.order() != expected)
    throw std::logic_error(std::string(what) + ": order mismatch, got " +
                           std::to_string(g.order()) + " expected " +
                           std::to_string(expected));
  return g;
}

}  // namespace

PermGroup psl2(std::uint64_t q) {
  int p = 0;
  int k = pp_k(q, p);
  Field F(p, k);
  std::vector<Permutation> gens;
  for (const auto& m : sl2_generators(F)) gens.push_back(p1_action(F, m));
  return checked(std::move(gens), psl2_order(q), "PSL(2,q)");
}

PermGroup pgl2(std::uint64_t q) {
  int p = 0;
  int k = pp_k(q, p);
  Field F(p, k);
  std::vector<Permutation> gens;
  for (const auto& m : sl2_generators(F)) gens.push_back(p1_action(F, m));
  gens.push_back(p1_action(F, Mat2{{F.generator(), 0, 0, 1}}));
  return checked(std::move(gens), q * (q * q - 1), "PGL(2,q)");
}

PermGroup pgammal2(std::uint64_t q) {
  int p = 0;
  int k = pp_k(q, p);
  Field F(p, k);
  std::vector<Permutation> gens;
  for (const auto& m : sl2_generators(F)) gens.push_back(p1_action(F, m));
  gens.push_back(p1_action(F, Mat2{{F.generator(), 0, 0, 1}}));
  gens.push_back(p1_frobenius(F));
  return checked(std::move(gens), std::uint64_t(k) * q * (q * q - 1), "PGammaL(2,q)");
}

PermGroup m10() {
  Field F(3, 2);
  std::vector<Permutation> gens;
  for (const auto& m : sl2_generators(F)) gens.push_back(p1_action(F, m));
  // the diagonal-times-frobenius coset generates M10 over PSL(2,9)
  gens.push_back(p1_action(F, Mat2{{F.generator(), 0, 0, 1}}) * p1_frobenius(F));
  auto g = checked(std::move(gens), 720, "M10");
  // sanity: M10 has elements of order 8 but none of order 10 or 6
  bool has8 = false, has10 = false, has6 = false;
  Config cfg;
  const auto& tbl = g.elements(cfg);
  for (std::uint32_t i = 0; i < tbl.size(); ++i) {
    auto o = tbl.at(i).element_order();
    has8 |= o == 8;
    has10 |= o == 10;
    has6 |= o == 6;
  }
  if (!has8 || has10 || has6) throw std::logic_error("M10 element orders wrong");
  return g;
}

// ---------------------------------------------------------------------------
// PSU(3,q): 3x3 unitary matrices over GF(q^2) for the Hermitian form
// h(u,v) = u1 v3^q + u2 v2^q + u3 v1^q, acting on isotropic projective points.

namespace {

struct Mat3 {
  std::array<std::uint32_t, 9> a{};
};

Mat3 mat3_mul(const Field& F, const Mat3& x, const Mat3& y) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      std::uint32_t s = 0;
      for (int t = 0; t < 3; ++t)
        s = F.add(s, F.mul(x.a[std::size_t(3 * i + t)], y.a[std::size_t(3 * t + j)]));
      r.a[std::size_t(3 * i + j)] = s;
    }
  return r;
}

// isotropic projective points, canonically scaled so the first nonzero
// coordinate is 1, sorted by coordinate triple
struct UnitalPoints {
  std::vector<std::array<std::uint32_t, 3>> pts;
  std::vector<std::int64_t> lookup;  // dense over (x*S+y)*S+z

  static std::array<std::uint32_t, 3> normalize(const Field& F,
                                                std::array<std::uint32_t, 3> v) {
    for (int i = 0; i < 3; ++i)
      if (v[std::size_t(i)] != 0) {
        std::uint32_t s = F.inv(v[std::size_t(i)]);
        for (int j = 0; j < 3; ++j) v[std::size_t(j)] = F.mul(v[std::size_t(j)], s);
        return v;
      }
    throw InvalidInput("zero projective vector");
  }

  std::size_t index(const Field& F, const std::array<std::uint32_t, 3>& raw) const {
    auto v = normalize(F, raw);
    std::uint64_t code =
        (std::uint64_t(v[0]) * F.size() + v[1]) * F.size() + v[2];
    return std::size_t(lookup[std::size_t(code)]);
  }
};

std::uint32_t hermitian_norm(const Field& F2, int qpow,
                             const std::array<std::uint32_t, 3>& v) {
  // h(v,v) = v1 v3^q + v2 v2^q + v3 v1^q
  auto conj = [&](std::uint32_t x) { return F2.frob_iter(x, qpow); };
  std::uint32_t s = F2.mul(v[0], conj(v[2]));
  s = F2.add(s, F2.mul(v[1], conj(v[1])));
  s = F2.add(s, F2.mul(v[2], conj(v[0])));
  return s;
}

UnitalPoints unital_points(const Field& F2, int qpow) {
  UnitalPoints u;
  const std::uint32_t S = F2.size();
  u.lookup.assign(std::size_t(S) * S * S, -1);
  for (std::uint32_t x = 0; x < S; ++x)
    for (std::uint32_t y = 0; y < S; ++y)
      for (std::uint32_t z = 0; z < S; ++z) {
        if (x == 0 && y == 0 && z == 0) continue;
        std::array<std::uint32_t, 3> v{x, y, z};
        auto n = UnitalPoints::normalize(F2, v);
        if (n != v) continue;  // enumerate canonical representatives once
        if (hermitian_norm(F2, qpow, v) != 0) continue;
        std::uint64_t code = (std::uint64_t(v[0]) * S + v[1]) * S + v[2];
        u.lookup[std::size_t(code)] = std::int64_t(u.pts.size());
        u.pts.push_back(v);
      }
  return u;
}

Permutation unital_action(const Field& F2, const UnitalPoints& u, const Mat3& m) {
  std::vector<Pt> img(u.pts.size());
  for (std::size_t i = 0; i < u.pts.size(); ++i) {
    const auto& v = u.pts[i];
    std::array<std::uint32_t, 3> w{};
    for (int j = 0; j < 3; ++j) {
      std::uint32_t s = 0;
      for (int t = 0; t < 3; ++t)
        s = F2.add(s, F2.mul(v[std::size_t(t)], m.a[std::size_t(3 * t + j)]));
      w[std::size_t(j)] = s;
    }
    img[i] = Pt(u.index(F2, w));
  }
  return Permutation::from_images(std::move(img));
}

}  // namespace

PermGroup psu3(std::uint64_t q, bool ext2) {
  int p = 0;
  int k = pp_k(q, p);
  Field F2(p, 2 * k);  // GF(q^2)
  const int qpow = k;  // conjugation x -> x^q
  auto conj = [&](std::uint32_t x) { return F2.frob_iter(x, qpow); };

  auto u = unital_points(F2, qpow);
  if (u.pts.size() != std::size_t(q * q * q + 1))
    throw std::logic_error("unital point count mismatch");

  // root elements u(a,b) = [[1,a,b],[0,1,-a^q],[0,0,1]] with b + b^q = -a^{q+1}
  auto solve_b = [&](std::uint32_t a) -> std::uint32_t {
    std::uint32_t target = F2.neg(F2.mul(a, conj(a)));
    for (std::uint32_t b = 0; b < F2.size(); ++b)
      if (F2.add(b, conj(b)) == target) return b;
    throw std::logic_error("trace equation unsolvable");
  };
  auto root = [&](std::uint32_t a) -> Mat3 {
    std::uint32_t b = solve_b(a);
    Mat3 m;
    m.a = {1, a, b, 0, 1, F2.neg(conj(a)), 0, 0, 1};
    return m;
  };
  // nonzero c with c + c^q = 0
  std::uint32_t c0 = 0;
  for (std::uint32_t c = 1; c < F2.size(); ++c)
    if (F2.add(c, conj(c)) == 0) {
      c0 = c;
      break;
    }
  Mat3 center;
  center.a = {1, 0, c0, 0, 1, 0, 0, 0, 1};

  std::uint32_t z = F2.generator();
  Mat3 torus;
  torus.a = {z, 0, 0, 0, F2.mul(F2.frob_iter(z, qpow), F2.inv(z)), 0, 0, 0,
             F2.inv(F2.frob_iter(z, qpow))};
  Mat3 weyl;
  weyl.a = {0, 0, 1, 0, F2.neg(1), 0, 1, 0, 0};

  std::vector<Permutation> gens;
  for (const auto& m : {root(1), root(z), center, torus, weyl})
    gens.push_back(unital_action(F2, u, m));

  if (ext2) {
    // the involutory field automorphism x -> x^q acts semilinearly
    std::vector<Pt> img(u.pts.size());
    for (std::size_t i = 0; i < u.pts.size(); ++i) {
      auto v = u.pts[i];
      for (auto& x : v) x = conj(x);
      img[i] = Pt(u.index(F2, v));
    }
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  std::uint64_t expected = psu3_order(q) * (ext2 ? 2 : 1);
  return checked(std::move(gens), expected, ext2 ? "PSU(3,q):2" : "PSU(3,q)");
}

// ---------------------------------------------------------------------------
// Sz(q) on the Tits ovoid {[1 : a : b : f(a,b)]} u {[0:0:0:1]} in P^3(q),
// f(a,b) = ab + a^{theta+2} + b^theta with theta = 2^(m+1), q = 2^(2m+1).

namespace {

struct Mat4 {
  std::array<std::uint32_t, 16> a{};
};

struct OvoidPoints {
  std::vector<std::array<std::uint32_t, 4>> pts;
  std::vector<std::int64_t> lookup;  // over base-q encoding of normalized coords

  static std::array<std::uint32_t, 4> normalize(const Field& F,
                                                std::array<std::uint32_t, 4> v) {
    for (int i = 0; i < 4; ++i)
      if (v[std::size_t(i)] != 0) {
        std::uint32_t s = F.inv(v[std::size_t(i)]);
        for (int j = 0; j < 4; ++j) v[std::size_t(j)] = F.mul(v[std::size_t(j)], s);
        return v;
      }
    throw InvalidInput("zero projective vector");
  }

  std::size_t index(const Field& F, const std::array<std::uint32_t, 4>& raw) const {
    auto v = normalize(F, raw);
    std::uint64_t code = 0;
    for (int i = 0; i < 4; ++i) code = code * F.size() + v[std::size_t(i)];
    auto r = lookup[std::size_t(code)];
    if (r < 0) throw std::logic_error("image left the ovoid");
    return std::size_t(r);
  }
};

}  // namespace

PermGroup suzuki(std::uint64_t q, bool field_auto) {
  int p = 0;
  int k = pp_k(q, p);
  if (p != 2 || k % 2 == 0 || k < 3)
    throw InvalidInput("Sz(q) needs q = 2^(2m+1), m >= 1");
  Field F(2, k);
  const int m = (k - 1) / 2;
  auto theta = [&](std::uint32_t x) { return F.frob_iter(x, m + 1); };

  auto f = [&](std::uint32_t a, std::uint32_t b) {
    // ab + a^{theta+2} + b^theta
    std::uint32_t t = F.mul(a, b);
    t = F.add(t, F.mul(theta(a), F.mul(a, a)));
    t = F.add(t, theta(b));
    return t;
  };

  OvoidPoints ov;
  const std::uint32_t S = F.size();
  ov.lookup.assign(std::size_t(S) * S * S * S, -1);
  auto add_point = [&](std::array<std::uint32_t, 4> v) {
    v = OvoidPoints::normalize(F, v);
    std::uint64_t code = 0;
    for (int i = 0; i < 4; ++i) code = code * S + v[std::size_t(i)];
    ov.lookup[std::size_t(code)] = std::int64_t(ov.pts.size());
    ov.pts.push_back(v);
  };
  add_point({0, 0, 0, 1});
  for (std::uint32_t a = 0; a < S; ++a)
    for (std::uint32_t b = 0; b < S; ++b) add_point({1, a, b, f(a, b)});
  if (ov.pts.size() != std::size_t(q * q + 1))
    throw std::logic_error("ovoid point count mismatch");

  auto act = [&](const Mat4& mt) {
    std::vector<Pt> img(ov.pts.size());
    for (std::size_t i = 0; i < ov.pts.size(); ++i) {
      const auto& v = ov.pts[i];
      std::array<std::uint32_t, 4> w{};
      for (int j = 0; j < 4; ++j) {
        std::uint32_t s = 0;
        for (int t = 0; t < 4; ++t)
          s = F.add(s, F.mul(v[std::size_t(t)], mt.a[std::size_t(4 * t + j)]));
        w[std::size_t(j)] = s;
      }
      img[i] = Pt(ov.index(F, w));
    }
    return Permutation::from_images(std::move(img));
  };

  // translation U(a,b): [1, x, y, f] -> [1, x+a, y+b+a^theta x, f(..)]
  auto trans = [&](std::uint32_t a, std::uint32_t b) {
    Mat4 mt;
    std::uint32_t r3 = F.add(F.mul(a, b), F.add(F.mul(theta(a), F.mul(a, a)), theta(b)));
    std::uint32_t r2 = F.add(b, F.mul(a, theta(a)));
    mt.a = {1, a,        b,        r3,
            0, 1,        theta(a), r2,
            0, 0,        1,        a,
            0, 0,        0,        1};
    return mt;
  };
  Mat4 diag;
  {
    std::uint32_t kk = F.generator();
    diag.a = {1, 0, 0, 0,
              0, kk, 0, 0,
              0, 0, F.mul(theta(kk), kk), 0,
              0, 0, 0, F.mul(theta(kk), F.mul(kk, kk))};
  }
  Mat4 tau;
  tau.a = {0, 0, 0, 1,
           0, 0, 1, 0,
           0, 1, 0, 0,
           1, 0, 0, 0};

  std::vector<Permutation> gens;
  for (const auto& mt : {trans(1, 0), trans(0, 1), diag, tau}) gens.push_back(act(mt));
  if (field_auto) {
    std::vector<Pt> img(ov.pts.size());
    for (std::size_t i = 0; i < ov.pts.size(); ++i) {
      auto v = ov.pts[i];
      for (auto& x : v) x = F.frob(x);
      img[i] = Pt(ov.index(F, v));
    }
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  std::uint64_t expected = suzuki_order(q) * (field_auto ? std::uint64_t(k) : 1);
  return checked(std::move(gens), expected, field_auto ? "Sz(q):f" : "Sz(q)");
}

}  // namespace spreadlab
