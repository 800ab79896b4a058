#include "spreadlab/gf.hpp"

#include <numeric>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <tuple>
#include <stdexcept>

#include "spreadlab/errors.hpp"

namespace spreadlab {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool factor_prime_power(std::uint64_t q, int& p, int& k) {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d) continue;
    std::uint64_t m = q;
    int e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    if (m != 1) return false;
    p = int(d);
    k = e;
    return true;
  }
  p = int(q);
  k = 1;
  return true;
}

namespace {

std::uint64_t upow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

Field::Field(int p, int k) : p_(p), k_(k) {
  if (!is_prime_u64(std::uint64_t(p)) || k < 1)
    throw InvalidInput("field characteristic must be prime, degree >= 1");
  std::uint64_t sz = upow(std::uint64_t(p), k);
  if (sz > (1u << 20)) throw InvalidInput("field too large");
  size_ = std::uint32_t(sz);

  // lexicographically least primitive polynomial x^k + c_{k-1} x^{k-1} + ... + c_0,
  // ordered by the low-coefficient vector read as a base-p integer
  std::vector<int> poly(std::size_t(k) + 1, 0);
  poly[std::size_t(k)] = 1;
  for (std::uint32_t low = 0; low < size_; ++low) {
    std::uint32_t v = low;
    for (int i = 0; i < k; ++i) {
      poly[std::size_t(i)] = int(v % std::uint32_t(p));
      v /= std::uint32_t(p);
    }
    if (poly[0] == 0) continue;  // constant term zero is never irreducible
    if (try_tables(poly)) {
      poly_ = poly;
      return;
    }
  }
  throw std::logic_error("no primitive polynomial found");
}

// builds exp/log by powering x; succeeds iff x has full multiplicative order,
// which makes the polynomial primitive (hence irreducible)
bool Field::try_tables(const std::vector<int>& poly) {
  const std::uint32_t n = size_;
  if (k_ == 1) {
    // GF(p): polynomial is x - r; x acts as the residue r
    std::uint32_t r = std::uint32_t((p_ - poly[0]) % p_);
    if (r == 0) return false;
    exp_.assign(n - 1, 0);
    log_.assign(n, 0);
    std::uint32_t v = 1;
    for (std::uint32_t i = 0; i < n - 1; ++i) {
      exp_[i] = v;
      if (v == 1 && i > 0) return false;
      log_[v] = i;
      v = std::uint32_t((std::uint64_t(v) * r) % std::uint32_t(p_));
    }
    if (v != 1) return false;
    // check all nonzero values were hit
    for (std::uint32_t a = 1; a < n; ++a)
      if (exp_[log_[a]] != a) return false;
    gen_ = r;
  } else {
    // multiply by x with reduction mod poly, digits base p
    auto mul_x = [&](std::uint32_t a) -> std::uint32_t {
      std::vector<int> d(std::size_t(k_) + 1, 0);
      std::uint32_t v = a;
      for (int i = 0; i < k_; ++i) {
        d[std::size_t(i) + 1] = int(v % std::uint32_t(p_));
        v /= std::uint32_t(p_);
      }
      int top = d[std::size_t(k_)];
      std::uint32_t out = 0, place = 1;
      for (int i = 0; i < k_; ++i) {
        int nd = (d[std::size_t(i)] - top * poly[std::size_t(i)]) % p_;
        nd = (nd + p_ * p_) % p_;
        out += std::uint32_t(nd) * place;
        place *= std::uint32_t(p_);
      }
      return out;
    };
    exp_.assign(n - 1, 0);
    log_.assign(n, 0);
    std::uint32_t x = std::uint32_t(p_);  // the polynomial "x"
    std::uint32_t v = 1;
    for (std::uint32_t i = 0; i < n - 1; ++i) {
      if (v == 1 && i > 0) return false;  // short cycle: not primitive
      exp_[i] = v;
      log_[v] = i;
      v = mul_x(v);
    }
    if (v != 1) return false;
    for (std::uint32_t a = 1; a < n; ++a)
      if (exp_[log_[a]] != a) return false;  // zero divisors: reducible
    gen_ = x;
  }
  frob_.assign(n, 0);
  for (std::uint32_t a = 0; a < n; ++a) frob_[a] = pow(a, std::uint64_t(p_));
  return true;
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
  if (p_ == 2) return a ^ b;
  std::uint32_t out = 0, place = 1;
  for (int i = 0; i < k_; ++i) {
    std::uint32_t da = (a / place) % std::uint32_t(p_);
    std::uint32_t db = (b / place) % std::uint32_t(p_);
    out += ((da + db) % std::uint32_t(p_)) * place;
    place *= std::uint32_t(p_);
  }
  return out;
}

std::uint32_t Field::neg(std::uint32_t a) const {
  if (p_ == 2) return a;
  std::uint32_t out = 0, place = 1;
  for (int i = 0; i < k_; ++i) {
    std::uint32_t da = (a / place) % std::uint32_t(p_);
    out += ((std::uint32_t(p_) - da) % std::uint32_t(p_)) * place;
    place *= std::uint32_t(p_);
  }
  return out;
}

std::uint32_t Field::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a == 0) throw InvalidInput("field inverse of zero");
  return exp_[(size_ - 1 - log_[a]) % (size_ - 1)];
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  std::uint64_t l = (std::uint64_t(log_[a]) * (e % (size_ - 1))) % (size_ - 1);
  return exp_[l];
}

std::uint32_t Field::frob_iter(std::uint32_t a, int t) const {
  t = ((t % k_) + k_) % k_;
  std::uint32_t v = a;
  for (int i = 0; i < t; ++i) v = frob_[v];
  return v;
}

std::uint64_t Field::mult_order(std::uint32_t a) const {
  if (a == 0) throw InvalidInput("order of zero");
  std::uint64_t n = size_ - 1;
  std::uint64_t l = log_[a];
  // order = n / gcd(n, l)
  std::uint64_t g = std::gcd(n, l == 0 ? n : l);
  return n / g;
}

std::vector<std::uint32_t> Field::embed_from(const Field& sub) const {
  if (sub.p_ != p_ || k_ % sub.k_ != 0)
    throw InvalidInput("no embedding between these fields");
  if (sub.k_ == k_ && sub.poly_ == poly_) {
    std::vector<std::uint32_t> id(size_);
    for (std::uint32_t i = 0; i < size_; ++i) id[i] = i;
    return id;
  }
  // lex-least root of the subfield's defining polynomial in this field
  std::uint32_t root = 0;
  bool found = false;
  for (std::uint32_t c = 0; c < size_ && !found; ++c) {
    // Horner evaluation of sub.poly at c
    std::uint32_t acc = 0;
    for (int i = sub.k_; i >= 0; --i) {
      acc = mul(acc, c);
      std::uint32_t coeff = std::uint32_t(sub.poly_[std::size_t(i)] % p_);
      acc = add(acc, coeff);
    }
    if (acc == 0) {
      root = c;
      found = true;
    }
  }
  if (!found) throw std::logic_error("no root of subfield polynomial found");
  std::vector<std::uint32_t> table(sub.size_);
  for (std::uint32_t e = 0; e < sub.size_; ++e) {
    std::uint32_t acc = 0, power = 1;
    std::uint32_t v = e;
    for (int i = 0; i < sub.k_; ++i) {
      std::uint32_t digit = v % std::uint32_t(p_);
      v /= std::uint32_t(p_);
      // acc += digit * root^i
      std::uint32_t term = power;
      std::uint32_t scaled = 0;
      for (std::uint32_t rep = 0; rep < digit; ++rep) scaled = add(scaled, term);
      acc = add(acc, scaled);
      power = mul(power, root);
    }
    table[e] = acc;
  }
  return table;
}

namespace {
std::mutex cache_mtx;
}

const Field& cached_field(int p, int k) {
  static std::map<std::pair<int, int>, std::unique_ptr<Field>> cache;
  std::lock_guard<std::mutex> lk(cache_mtx);
  auto& slot = cache[{p, k}];
  if (!slot) slot = std::make_unique<Field>(p, k);
  return *slot;
}

const std::vector<std::uint32_t>& cached_embedding(const Field& sub, const Field& sup) {
  static std::map<std::tuple<int, int, int>, std::unique_ptr<std::vector<std::uint32_t>>>
      cache;
  std::lock_guard<std::mutex> lk(cache_mtx);
  auto& slot = cache[{sub.p(), sub.k(), sup.k()}];
  if (!slot) slot = std::make_unique<std::vector<std::uint32_t>>(sup.embed_from(sub));
  return *slot;
}

std::string Field::descriptor() const {
  std::ostringstream out;
  out << "GF(" << p_ << "^" << k_ << "; poly=[";
  for (std::size_t i = 0; i < poly_.size(); ++i) {
    if (i) out << ",";
    out << poly_[i];
  }
  out << "])";
  return out.str();
}

}  // namespace spreadlab
