#include "spreadlab/classes.hpp"

#include <algorithm>

#include "spreadlab/errors.hpp"

namespace spreadlab {

std::string class_letter(std::size_t i) {
  // a..z, aa, ab, ... (bijective base 26)
  std::string s;
  ++i;
  while (i > 0) {
    --i;
    s.insert(s.begin(), char('a' + i % 26));
    i /= 26;
  }
  return s;
}

std::shared_ptr<const ClassTable> ClassTable::build(const PermGroup& g,
                                                    const ElementTable& tbl) {
  auto ct = std::make_shared<ClassTable>();
  const std::uint32_t n = tbl.size();
  ct->class_id_.assign(n, 0);
  std::vector<bool> seen(n, false);

  // conjugating generator index maps: x -> g^-1 x g per group generator
  const auto& gens = g.generators();

  std::vector<ConjClass> classes;
  std::vector<std::uint32_t> stack;
  for (std::uint32_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ConjClass c;
    c.rep = start;
    c.element_order = tbl.at(start).element_order();
    c.members = Bitset(n);
    stack.clear();
    stack.push_back(start);
    seen[start] = true;
    c.members.set(start);
    std::uint64_t sz = 1;
    while (!stack.empty()) {
      std::uint32_t cur = stack.back();
      stack.pop_back();
      for (const auto& cg : gens) {
        Permutation im = tbl.at(cur).conjugated_by(cg);
        auto idx = tbl.index_of(im);
        if (idx < 0) throw MembershipError("conjugate left the element table");
        if (!seen[std::uint32_t(idx)]) {
          seen[std::uint32_t(idx)] = true;
          c.members.set(std::size_t(idx));
          stack.push_back(std::uint32_t(idx));
          ++sz;
        }
      }
    }
    c.size = sz;
    classes.push_back(std::move(c));
  }

  std::sort(classes.begin(), classes.end(), [](const ConjClass& a, const ConjClass& b) {
    if (a.element_order != b.element_order) return a.element_order < b.element_order;
    if (a.size != b.size) return a.size < b.size;
    return a.rep < b.rep;
  });

  // labels: letters run within each element order
  std::size_t li = 0;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i > 0 && classes[i].element_order != classes[i - 1].element_order) li = 0;
    classes[i].label = std::to_string(classes[i].element_order) + class_letter(li++);
  }

  for (std::uint32_t ci = 0; ci < classes.size(); ++ci)
    classes[ci].members.for_each([&](std::size_t e) { ct->class_id_[e] = ci; });

  std::uint64_t total = 0;
  for (const auto& c : classes) total += c.size;
  if (total != n) throw std::logic_error("class sizes do not sum to |G|");

  ct->classes_ = std::move(classes);
  return ct;
}

int ClassTable::find_label(const std::string& label) const {
  for (std::size_t i = 0; i < classes_.size(); ++i)
    if (classes_[i].label == label) return int(i);
  return -1;
}

std::vector<std::uint32_t> ClassTable::classes_of_order(std::uint64_t n) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < classes_.size(); ++i)
    if (classes_[i].element_order == n) out.push_back(i);
  return out;
}

std::uint64_t centralizer_order(const PermGroup& g, const Permutation& x, const Config& cfg) {
  if (!g.contains(x)) throw MembershipError("element not in group");
  const auto& tbl = g.elements(cfg);
  const auto& ct = g.classes(cfg);
  auto idx = tbl.index_of(x);
  return ct.centralizer_order(std::uint32_t(idx), g.order());
}

}  // namespace spreadlab
