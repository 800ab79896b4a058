#include "spreadlab/permutation.hpp"

#include <numeric>
#include <sstream>

#include "spreadlab/errors.hpp"

namespace spreadlab {

Permutation::Permutation(unsigned degree) : img_(degree) {
  std::iota(img_.begin(), img_.end(), Pt(0));
}

Permutation Permutation::from_images(std::vector<Pt> images) {
  std::vector<bool> seen(images.size(), false);
  for (Pt v : images) {
    if (v >= images.size() || seen[v])
      throw InvalidInput("image array is not a bijection on {0,...,n-1}");
    seen[v] = true;
  }
  Permutation p;
  p.img_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(unsigned degree, const std::string& text) {
  if (degree == 0) throw InvalidInput("degree must be >= 1");
  Permutation p(degree);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation: " + text);
    ++i;
    std::vector<unsigned> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      unsigned v = 0;
      if (!isdigit(text[i])) throw ParseError("expected point in cycle notation: " + text);
      while (i < text.size() && isdigit(text[i])) v = v * 10 + unsigned(text[i++] - '0');
      if (v < 1 || v > degree)
        throw ParseError("point " + std::to_string(v) + " out of range 1.." +
                         std::to_string(degree));
      cycle.push_back(v - 1);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    if (i == text.size()) throw ParseError("unterminated cycle: " + text);
    ++i;  // ')'
    for (std::size_t j = 0; j + 1 < cycle.size(); ++j) {
      if (p.img_[cycle[j]] != cycle[j])
        throw ParseError("point repeated across cycles: " + text);
      p.img_[cycle[j]] = Pt(cycle[j + 1]);
    }
    if (cycle.size() >= 2) {
      if (p.img_[cycle.back()] != cycle.back())
        throw ParseError("point repeated across cycles: " + text);
      p.img_[cycle.back()] = Pt(cycle[0]);
    }
    skip_ws();
  }
  return p;
}

bool Permutation::is_identity() const {
  for (Pt i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  Permutation r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[i] = rhs.img_[img_[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.img_.resize(img_.size());
  for (Pt i = 0; i < img_.size(); ++i) r.img_[img_[i]] = i;
  return r;
}

Permutation Permutation::conjugated_by(const Permutation& g) const {
  // (g^-1 * this * g): image of g(i) is g(this(i))
  Permutation r;
  r.img_.resize(img_.size());
  for (Pt i = 0; i < img_.size(); ++i) r.img_[g.img_[i]] = g.img_[img_[i]];
  return r;
}

Permutation Permutation::power(std::int64_t e) const {
  Permutation base = e >= 0 ? *this : inverse();
  std::uint64_t k = std::uint64_t(e >= 0 ? e : -e);
  Permutation acc(degree());
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

std::uint64_t Permutation::element_order() const {
  std::vector<bool> seen(img_.size(), false);
  std::uint64_t ord = 1;
  for (Pt i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    Pt j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = img_[j];
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string Permutation::cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(img_.size(), false);
  bool any = false;
  for (Pt i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) {
      seen[i] = true;
      continue;
    }
    any = true;
    out << '(';
    Pt j = i;
    bool first = true;
    while (!seen[j]) {
      if (!first) out << ',';
      out << (j + 1);
      seen[j] = true;
      first = false;
      j = img_[j];
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

std::uint64_t Permutation::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ (std::uint64_t(img_.size()) << 32);
  for (Pt v : img_) {
    h ^= v;
    h *= 0x100000001b3ULL;
  }
  // final avalanche, the FNV tail alone clusters for small degrees
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  return h;
}

}  // namespace spreadlab
