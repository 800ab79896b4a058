#include "spreadlab/shintani.hpp"

#include <algorithm>
#include <unordered_map>

#include "spreadlab/bitset.hpp"
#include "spreadlab/errors.hpp"

namespace spreadlab::shintani {

namespace {

struct KeyHash {
  std::size_t operator()(std::uint64_t k) const {
    k ^= k >> 33;
    k *= 0xff51afd7ed558ccdULL;
    k ^= k >> 33;
    return std::size_t(k);
  }
};

}  // namespace

ShintaniContext::ShintaniContext(int q0, int e) : q0_(q0), e_(e) {
  if (e < 2) throw InvalidInput("Shintani context needs e >= 2");
  int p = 0, i = 0;
  if (!factor_prime_power(std::uint64_t(q0), p, i))
    throw InvalidInput("q0 must be a prime power");
  p_ = p;
  i_ = i;
  Fbig_ = std::make_unique<Field>(p, i * e);
  Fbase_ = std::make_unique<Field>(p, i);

  big_elems_ = sl2_elements(*Fbig_);
  std::sort(big_elems_.begin(), big_elems_.end(),
            [](const Mat2& a, const Mat2& b) { return a.key() < b.key(); });
  big_lookup_.clear();

  // base group: enumerate over the base field, compute classes, then embed
  auto base_raw = sl2_elements(*Fbase_);
  std::sort(base_raw.begin(), base_raw.end(),
            [](const Mat2& a, const Mat2& b) { return a.key() < b.key(); });
  std::unordered_map<std::uint64_t, std::uint32_t, KeyHash> base_idx;
  for (std::uint32_t i2 = 0; i2 < base_raw.size(); ++i2)
    base_idx[base_raw[i2].key()] = i2;
  auto base_gens = sl2_generators(*Fbase_);

  std::vector<std::uint32_t> class_of(base_raw.size(), 0);
  std::vector<bool> seen(base_raw.size(), false);
  struct RawClass {
    std::uint32_t rep;
    std::uint64_t size;
    std::uint64_t order;
  };
  std::vector<RawClass> raw_classes;
  for (std::uint32_t s = 0; s < base_raw.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::uint32_t> orbit{s};
    seen[s] = true;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (const auto& h : base_gens) {
        Mat2 img =
            mat2_mul(*Fbase_, mat2_mul(*Fbase_, mat2_inv(*Fbase_, h),
                                       base_raw[orbit[head]]),
                     h);
        auto it = base_idx.find(img.key());
        if (!seen[it->second]) {
          seen[it->second] = true;
          orbit.push_back(it->second);
        }
      }
    }
    std::uint32_t cid = std::uint32_t(raw_classes.size());
    for (auto m : orbit) class_of[m] = cid;
    raw_classes.push_back(
        {s, orbit.size(), mat2_order(*Fbase_, base_raw[s])});
  }
  // canonical class order: (element order, size, least rep key)
  std::vector<std::uint32_t> perm(raw_classes.size());
  for (std::uint32_t c = 0; c < perm.size(); ++c) perm[c] = c;
  std::sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
    const auto& A = raw_classes[a];
    const auto& B = raw_classes[b];
    if (A.order != B.order) return A.order < B.order;
    if (A.size != B.size) return A.size < B.size;
    return base_raw[A.rep].key() < base_raw[B.rep].key();
  });
  std::vector<std::uint32_t> inv_perm(perm.size());
  for (std::uint32_t c = 0; c < perm.size(); ++c) inv_perm[perm[c]] = c;

  auto emb = Fbig_->embed_from(*Fbase_);
  base_embedded_.resize(base_raw.size());
  base_class_of_.resize(base_raw.size());
  for (std::uint32_t m = 0; m < base_raw.size(); ++m) {
    Mat2 em;
    for (int t = 0; t < 4; ++t) em.a[std::size_t(t)] = emb[base_raw[m].a[std::size_t(t)]];
    base_embedded_[m] = em;
    base_class_of_[m] = inv_perm[class_of[m]];
    base_pos_[em.key()] = m;
  }
  base_classes_ = raw_classes.size();
  base_class_sizes_.resize(base_classes_);
  base_class_reps_.resize(base_classes_);
  for (std::uint32_t c = 0; c < raw_classes.size(); ++c) {
    base_class_sizes_[inv_perm[c]] = raw_classes[c].size;
    base_class_reps_[inv_perm[c]] = base_embedded_[raw_classes[c].rep];
  }
}

std::int64_t ShintaniContext::big_index(const Mat2& m) const {
  auto it = std::lower_bound(big_elems_.begin(), big_elems_.end(), m,
                             [](const Mat2& a, const Mat2& b) {
                               return a.key() < b.key();
                             });
  if (it == big_elems_.end() || !(*it == m)) return -1;
  return it - big_elems_.begin();
}

std::uint32_t ShintaniContext::base_class_of(const Mat2& embedded) const {
  auto it = base_pos_.find(embedded.key());
  if (it == base_pos_.end()) throw InvalidInput("matrix not in the embedded base group");
  return base_class_of_[it->second];
}

Mat2 ShintaniContext::norm(const Mat2& g) const {
  Mat2 acc = g;
  Mat2 cur = g;
  for (int t = 1; t < e_; ++t) {
    cur = sigma_inv(cur);
    acc = mat2_mul(*Fbig_, acc, cur);
  }
  return acc;
}

std::uint64_t ShintaniContext::coset_element_order(const Mat2& g) const {
  return std::uint64_t(e_) * mat2_order(*Fbig_, norm(g));
}

std::vector<CosetClass> coset_classes(const ShintaniContext& ctx, const Config& cfg) {
  const auto& big = ctx.big_elements();
  if (big.size() > cfg.element_enum_bound)
    throw BoundExceeded("coset class enumeration bound", cfg.element_enum_bound);
  const Field& F = ctx.big_field();
  auto gens = sl2_generators(F);
  std::vector<bool> seen(big.size(), false);
  std::vector<CosetClass> out;
  for (std::uint32_t s = 0; s < big.size(); ++s) {
    if (seen[s]) continue;
    CosetClass c;
    c.members.push_back(s);
    seen[s] = true;
    // twisted conjugation g -> h^-1 g h^{sigma^-1}
    for (std::size_t head = 0; head < c.members.size(); ++head) {
      for (const auto& h : gens) {
        Mat2 img = mat2_mul(F, mat2_mul(F, mat2_inv(F, h), big[c.members[head]]),
                            ctx.sigma_inv(h));
        auto idx = ctx.big_index(img);
        if (!seen[std::size_t(idx)]) {
          seen[std::size_t(idx)] = true;
          c.members.push_back(std::uint32_t(idx));
        }
      }
    }
    std::sort(c.members.begin(), c.members.end());
    c.rep = big[c.members[0]];
    c.size = c.members.size();
    c.element_order = ctx.coset_element_order(c.rep);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const CosetClass& a, const CosetClass& b) {
    if (a.element_order != b.element_order) return a.element_order < b.element_order;
    if (a.size != b.size) return a.size < b.size;
    return a.rep.key() < b.rep.key();
  });
  return out;
}

LangWitness lang_steinberg(const ShintaniContext& ctx, const Mat2& g, int max_level) {
  const int p = ctx.base_field().p();
  const int i = ctx.base_field().k();
  const int e = ctx.e();
  LangWitness w;
  // every witness a obeys a^{sigma^{-e j}} = N(g)^{-j} a, so level j carries a
  // witness exactly when |N(g)| divides j; other levels can be skipped
  std::uint64_t norm_order = mat2_order(ctx.big_field(), ctx.norm(g));
  for (int j = 1; j <= max_level; ++j) {
    if (std::uint64_t(j) % norm_order != 0) continue;
    const int D = i * e * j;  // GF(p)-dimension of the level field
    const Field& lvl = cached_field(p, D);
    const auto& emb = cached_embedding(ctx.big_field(), lvl);
    Mat2 gl;
    for (int t = 0; t < 4; ++t) gl.a[std::size_t(t)] = emb[g.a[std::size_t(t)]];
    // sigma^{-1} on the level field is the (e j - 1)-fold q0-power frobenius
    const int sig_inv_steps = D - i;

    // GF(p)-linear map L(m) = m - g * m^{sigma^-1} on M2(lvl); kernel elements
    // with determinant 1 are the Lang witnesses at this level
    const int dim = 4 * D;
    std::vector<std::vector<int>> cols;  // column per basis unknown
    std::vector<std::uint32_t> basis_elem(std::size_t(D), 0u);
    {
      std::uint32_t v = 1;
      for (int r = 0; r < D; ++r) {
        basis_elem[std::size_t(r)] = v;  // p^r as an element index: digit r = 1
        v *= std::uint32_t(p);
      }
    }
    auto digits_of = [&](std::uint32_t x, int* out) {
      for (int r = 0; r < D; ++r) {
        out[r] = int(x % std::uint32_t(p));
        x /= std::uint32_t(p);
      }
    };
    cols.assign(std::size_t(dim), std::vector<int>(std::size_t(dim), 0));
    for (int entry = 0; entry < 4; ++entry)
      for (int r = 0; r < D; ++r) {
        Mat2 mb;
        mb.a = {0, 0, 0, 0};
        mb.a[std::size_t(entry)] = basis_elem[std::size_t(r)];
        Mat2 ms = mat2_frob_iter(lvl, mb, sig_inv_steps);
        Mat2 gms = mat2_mul(lvl, gl, ms);
        // L = mb - gms
        std::vector<int>& col = cols[std::size_t(entry * D + r)];
        for (int t = 0; t < 4; ++t) {
          std::uint32_t diff = lvl.sub(mb.a[std::size_t(t)], gms.a[std::size_t(t)]);
          int d[32];
          digits_of(diff, d);
          for (int rr = 0; rr < D; ++rr) col[std::size_t(t * D + rr)] = d[rr];
        }
      }
    // Gaussian elimination over GF(p) on the dim x dim matrix (columns = unknowns)
    std::vector<std::vector<int>> m(std::size_t(dim), std::vector<int>(std::size_t(dim), 0));
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) m[std::size_t(r)][std::size_t(c)] = cols[std::size_t(c)][std::size_t(r)];
    std::vector<int> pivot_col_of_row(std::size_t(dim), -1);
    std::vector<bool> is_pivot(std::size_t(dim), false);
    int rank = 0;
    for (int c = 0; c < dim && rank < dim; ++c) {
      int pr = -1;
      for (int r = rank; r < dim; ++r)
        if (m[std::size_t(r)][std::size_t(c)] % p != 0) {
          pr = r;
          break;
        }
      if (pr < 0) continue;
      std::swap(m[std::size_t(pr)], m[std::size_t(rank)]);
      int inv = 1;
      for (int v = 1; v < p; ++v)
        if ((v * m[std::size_t(rank)][std::size_t(c)]) % p == 1) inv = v;
      for (int cc = 0; cc < dim; ++cc)
        m[std::size_t(rank)][std::size_t(cc)] =
            (m[std::size_t(rank)][std::size_t(cc)] * inv) % p;
      for (int r = 0; r < dim; ++r) {
        if (r == rank) continue;
        int f = m[std::size_t(r)][std::size_t(c)] % p;
        if (!f) continue;
        for (int cc = 0; cc < dim; ++cc)
          m[std::size_t(r)][std::size_t(cc)] =
              ((m[std::size_t(r)][std::size_t(cc)] - f * m[std::size_t(rank)][std::size_t(cc)]) % p + p) % p;
      }
      pivot_col_of_row[std::size_t(rank)] = c;
      is_pivot[std::size_t(c)] = true;
      ++rank;
    }
    int null_dim = dim - rank;
    if (null_dim <= 0) continue;
    if (null_dim > 20) throw std::logic_error("unexpectedly large Lang kernel");
    // kernel basis: one vector per free column
    std::vector<int> free_cols;
    for (int c = 0; c < dim; ++c)
      if (!is_pivot[std::size_t(c)]) free_cols.push_back(c);
    std::vector<std::vector<int>> kernel;
    for (int fc : free_cols) {
      std::vector<int> v(std::size_t(dim), 0);
      v[std::size_t(fc)] = 1;
      for (int r = 0; r < rank; ++r) {
        int pc = pivot_col_of_row[std::size_t(r)];
        v[std::size_t(pc)] = ((-m[std::size_t(r)][std::size_t(fc)]) % p + p) % p;
      }
      kernel.push_back(std::move(v));
    }
    // enumerate kernel combinations; pick determinant-one matrices
    std::uint64_t total = 1;
    for (int t = 0; t < null_dim; ++t) total *= std::uint64_t(p);
    Mat2 first, second;
    int found = 0;
    for (std::uint64_t code = 1; code < total && found < 2; ++code) {
      std::vector<int> v(std::size_t(dim), 0);
      std::uint64_t cc = code;
      for (int t = 0; t < null_dim; ++t) {
        int coef = int(cc % std::uint64_t(p));
        cc /= std::uint64_t(p);
        if (!coef) continue;
        for (int r = 0; r < dim; ++r)
          v[std::size_t(r)] = (v[std::size_t(r)] + coef * kernel[std::size_t(t)][std::size_t(r)]) % p;
      }
      Mat2 cand;
      for (int entry = 0; entry < 4; ++entry) {
        std::uint32_t val = 0, place = 1;
        for (int r = 0; r < D; ++r) {
          val += std::uint32_t(v[std::size_t(entry * D + r)]) * place;
          place *= std::uint32_t(p);
        }
        cand.a[std::size_t(entry)] = val;
      }
      if (mat2_det(lvl, cand) != 1) continue;
      if (found == 0)
        first = cand;
      else
        second = cand;
      ++found;
    }
    if (found >= 1) {
      w.found = true;
      w.level = j;
      w.a = first;
      w.second = found >= 2 ? second : first;
      return w;
    }
  }
  return w;
}

namespace {

// F(g sigma) representative in the embedded base group: a^{-1} N(g) a computed
// at the witness level, pulled back into the context's big field
Mat2 descend(const ShintaniContext& ctx, const Mat2& g, const Mat2& a, int level) {
  const int p = ctx.base_field().p();
  const int D = ctx.base_field().k() * ctx.e() * level;
  const Field& lvl = cached_field(p, D);
  const auto& emb = cached_embedding(ctx.big_field(), lvl);
  std::unordered_map<std::uint32_t, std::uint32_t> emb_inv;
  for (std::uint32_t v = 0; v < ctx.big_field().size(); ++v) emb_inv[emb[v]] = v;
  Mat2 n = ctx.norm(g);
  Mat2 nl;
  for (int t = 0; t < 4; ++t) nl.a[std::size_t(t)] = emb[n.a[std::size_t(t)]];
  Mat2 y = mat2_mul(lvl, mat2_mul(lvl, mat2_inv(lvl, a), nl), a);
  Mat2 back;
  for (int t = 0; t < 4; ++t) {
    auto it = emb_inv.find(y.a[std::size_t(t)]);
    if (it == emb_inv.end())
      throw std::logic_error("descended matrix left the base field");
    back.a[std::size_t(t)] = it->second;
  }
  return back;  // entries in the big field, inside the embedded base copy
}

}  // namespace

ShintaniMap shintani_map(const ShintaniContext& ctx, const Config& cfg) {
  auto classes = coset_classes(ctx, cfg);
  ShintaniMap map;
  map.image.assign(classes.size(), -1);
  map.witness_level.assign(classes.size(), 0);
  const auto& big = ctx.big_elements();
  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    const Mat2& g = classes[ci].rep;
    auto w = lang_steinberg(ctx, g, cfg.lang_steinberg_levels);
    if (!w.found) {
      map.complete = false;
      continue;
    }
    Mat2 y = descend(ctx, g, w.a, w.level);
    std::uint32_t cls = ctx.base_class_of(y);
    map.image[ci] = std::int32_t(cls);
    map.witness_level[ci] = w.level;
    // independence: second witness, and a second class representative
    Mat2 y2 = descend(ctx, g, w.second, w.level);
    if (ctx.base_class_of(y2) != cls) map.independent = false;
    if (classes[ci].members.size() > 1) {
      const Mat2& g2 = big[classes[ci].members[classes[ci].members.size() / 2]];
      auto w2 = lang_steinberg(ctx, g2, cfg.lang_steinberg_levels);
      if (w2.found) {
        Mat2 y3 = descend(ctx, g2, w2.a, w2.level);
        if (ctx.base_class_of(y3) != cls) map.independent = false;
      }
    }
  }
  if (map.complete) {
    std::vector<bool> hit(ctx.base_class_count(), false);
    bool inj = true;
    for (auto im : map.image) {
      if (im < 0 || hit[std::size_t(im)]) inj = false;
      else hit[std::size_t(im)] = true;
    }
    map.bijective = inj && classes.size() == ctx.base_class_count();
  }
  return map;
}

bool order_law(const ShintaniContext& ctx, const Config& cfg) {
  auto classes = coset_classes(ctx, cfg);
  auto map = shintani_map(ctx, cfg);
  if (!map.complete) return false;
  const Field& Fb = ctx.big_field();
  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    const Mat2& y = ctx.base_class_rep(std::uint32_t(map.image[ci]));
    if (classes[ci].element_order !=
        std::uint64_t(ctx.e()) * mat2_order(Fb, y))
      return false;
  }
  // raw multiset comparison: coset orders vs e*|y| scaled by |big|/|base|
  std::map<std::uint64_t, std::uint64_t> lhs, rhs;
  for (const auto& c : classes) lhs[c.element_order] += c.size;
  std::uint64_t scale = ctx.big_elements().size() / ctx.base_elements_embedded().size();
  for (std::uint32_t c = 0; c < ctx.base_class_count(); ++c)
    rhs[std::uint64_t(ctx.e()) * mat2_order(Fb, ctx.base_class_rep(c))] +=
        ctx.base_class_size(c) * scale;
  return lhs == rhs;
}

namespace {

// fixed points of [v] -> [sigma(v . m)] on the projective line of the field
std::uint64_t semilinear_fixed_points(const Field& F, const Mat2& m, int frob_steps) {
  std::uint64_t fixed = 0;
  const std::uint32_t q = F.size();
  for (std::uint32_t i = 0; i <= q; ++i) {
    std::uint32_t x = i < q ? i : 1;
    std::uint32_t y = i < q ? 1 : 0;
    std::uint32_t nx = F.add(F.mul(x, m.a[0]), F.mul(y, m.a[2]));
    std::uint32_t ny = F.add(F.mul(x, m.a[1]), F.mul(y, m.a[3]));
    nx = F.frob_iter(nx, frob_steps);
    ny = F.frob_iter(ny, frob_steps);
    if (p1_point_of(F, nx, ny) == (i < q ? Pt(i) : Pt(q))) ++fixed;
  }
  return fixed;
}

}  // namespace

bool parabolic_count_check(const ShintaniContext& ctx, const Config& cfg) {
  auto classes = coset_classes(ctx, cfg);
  auto map = shintani_map(ctx, cfg);
  if (!map.complete) return false;
  // base-side counts use the base field directly
  const Field& base = cached_field(ctx.base_field().p(), ctx.base_field().k());
  const auto& emb = cached_embedding(base, ctx.big_field());
  std::unordered_map<std::uint32_t, std::uint32_t> emb_inv;
  for (std::uint32_t v = 0; v < base.size(); ++v) emb_inv[emb[v]] = v;
  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    // coset side: fixed points of g sigma on P1(q0^e)
    std::uint64_t coset_count = semilinear_fixed_points(
        ctx.big_field(), classes[ci].rep, ctx.frob_step());
    // base side: fixed points of F(g sigma) on P1(q0)
    Mat2 yb;
    const Mat2& y = ctx.base_class_rep(std::uint32_t(map.image[ci]));
    for (int t = 0; t < 4; ++t) yb.a[std::size_t(t)] = emb_inv.at(y.a[std::size_t(t)]);
    std::uint64_t base_count = semilinear_fixed_points(base, yb, 0);
    if (coset_count != base_count) return false;
  }
  return true;
}

bool centralizer_bound_check(const ShintaniContext& ctx, const Config& cfg,
                             NamedSubgroup which) {
  auto classes = coset_classes(ctx, cfg);
  auto map = shintani_map(ctx, cfg);
  if (!map.complete) return false;
  const Field& F = ctx.big_field();
  const auto& big = ctx.big_elements();
  const int e = ctx.e();

  // extended group elements are (matrix index, sigma power)
  auto ext_index = [&](std::int64_t mi, int t) { return std::size_t(mi) * std::size_t(e) + std::size_t(t); };
  auto ext_mul = [&](std::pair<std::int64_t, int> a, std::pair<std::int64_t, int> b) {
    // (m1,s)(m2,t) = (m1 * m2^{sigma^-s}, s+t)
    Mat2 m2s = big[std::size_t(b.first)];
    for (int s = 0; s < a.second; ++s) m2s = ctx.sigma_inv(m2s);
    Mat2 prod = mat2_mul(F, big[std::size_t(a.first)], m2s);
    return std::pair<std::int64_t, int>{ctx.big_index(prod), (a.second + b.second) % e};
  };
  auto ext_inv = [&](std::pair<std::int64_t, int> a) {
    int t = (e - a.second) % e;
    Mat2 mi = mat2_inv(F, big[std::size_t(a.first)]);
    for (int s = 0; s < a.second; ++s) mi = ctx.sigma(mi);  // sigma^{s}(m^-1)
    return std::pair<std::int64_t, int>{ctx.big_index(mi), t};
  };

  const std::size_t ext_size = big.size() * std::size_t(e);
  // membership predicate for the named subgroup
  auto in_h = [&](std::size_t idx) -> bool {
    std::size_t mi = idx / std::size_t(e);
    const Mat2& m = big[mi];
    switch (which) {
      case NamedSubgroup::BorelNormalizer:
        return m.a[1] == 0;  // stabilizer of [1:0]
      case NamedSubgroup::SplitTorusNormalizer:
        return (m.a[1] == 0 && m.a[2] == 0) || (m.a[0] == 0 && m.a[3] == 0);
      case NamedSubgroup::FullGroup:
        return true;
    }
    return false;
  };
  Bitset h(ext_size);
  for (std::size_t idx = 0; idx < ext_size; ++idx)
    if (in_h(idx)) h.set(idx);

  // conjugate orbit of H under the extended group generators
  std::vector<std::pair<std::int64_t, int>> gens;
  for (const auto& m : sl2_generators(F)) gens.push_back({ctx.big_index(m), 0});
  gens.push_back({ctx.big_index(mat2_identity()), 1});

  std::vector<Bitset> orbit{h};
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> seen;
  seen[h.hash()].push_back(0);
  auto known = [&](const Bitset& b) {
    auto it = seen.find(b.hash());
    if (it == seen.end()) return false;
    for (auto i : it->second)
      if (orbit[i] == b) return true;
    return false;
  };
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (const auto& gpair : gens) {
      Bitset img(ext_size);
      auto ginv = ext_inv(gpair);
      orbit[head].for_each([&](std::size_t idx) {
        std::pair<std::int64_t, int> el{std::int64_t(idx / std::size_t(e)),
                                        int(idx % std::size_t(e))};
        auto conj = ext_mul(ext_mul(ginv, el), gpair);
        img.set(ext_index(conj.first, conj.second));
      });
      if (!known(img)) {
        seen[img.hash()].push_back(orbit.size());
        orbit.push_back(std::move(img));
      }
    }
  }

  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    std::size_t target = ext_index(ctx.big_index(classes[ci].rep), 1);
    std::uint64_t containing = 0;
    for (const auto& conj : orbit)
      if (conj.test(target)) ++containing;
    std::uint64_t bound = ctx.base_centralizer_order(std::uint32_t(map.image[ci]));
    if (containing > bound) return false;
  }
  return true;
}

}  // namespace spreadlab::shintani
