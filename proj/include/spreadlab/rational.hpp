#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace spreadlab {

// Exact nonnegative rational on 64-bit parts, with overflow checks. Values in
// this artifact are probabilities and small sums of them.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den) : n_(num), d_(den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (d_ < 0) {
      n_ = -n_;
      d_ = -d_;
    }
    reduce();
  }
  static Rational zero() { return Rational(0, 1); }
  static Rational one() { return Rational(1, 1); }

  std::int64_t num() const { return n_; }
  std::int64_t den() const { return d_; }

  Rational operator+(const Rational& o) const {
    std::int64_t g = std::gcd(d_, o.d_);
    std::int64_t l = mul(d_ / g, o.d_);
    return Rational(add(mul(n_, o.d_ / g), mul(o.n_, d_ / g)), l);
  }
  Rational operator*(const Rational& o) const { return Rational(mul(n_, o.n_), mul(d_, o.d_)); }
  bool operator==(const Rational& o) const { return n_ == o.n_ && d_ == o.d_; }
  bool operator<(const Rational& o) const {
    return cmp(o) < 0;
  }
  bool operator<=(const Rational& o) const { return cmp(o) <= 0; }
  bool operator>(const Rational& o) const { return cmp(o) > 0; }
  bool operator>=(const Rational& o) const { return cmp(o) >= 0; }

  std::string str() const { return std::to_string(n_) + "/" + std::to_string(d_); }
  double approx() const { return double(n_) / double(d_); }

 private:
  int cmp(const Rational& o) const {
    __int128 a = __int128(n_) * o.d_;
    __int128 b = __int128(o.n_) * d_;
    return a < b ? -1 : (a > b ? 1 : 0);
  }
  static std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Rational add");
    return r;
  }
  static std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Rational mul");
    return r;
  }
  void reduce() {
    std::int64_t g = std::gcd(n_ < 0 ? -n_ : n_, d_);
    if (g > 1) {
      n_ /= g;
      d_ /= g;
    }
    if (n_ == 0) d_ = 1;
  }

  std::int64_t n_ = 0;
  std::int64_t d_ = 1;
};

}  // namespace spreadlab
