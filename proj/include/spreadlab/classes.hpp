#pragma once

#include <memory>
#include <string>
#include <vector>

#include "spreadlab/bitset.hpp"
#include "spreadlab/perm_group.hpp"

namespace spreadlab {

// One conjugacy class, relative to a group's element table.
struct ConjClass {
  std::uint32_t rep = 0;          // least element index in the class
  std::uint64_t size = 0;
  std::uint64_t element_order = 0;
  std::string label;              // "<order><letter>", e.g. "12a"
  Bitset members;                 // over element indices
};

// Complete class decomposition with canonical labels. Classes are sorted by
// (element order, size, least representative); the identity class comes first.
class ClassTable {
 public:
  static std::shared_ptr<const ClassTable> build(const PermGroup& g,
                                                 const ElementTable& tbl);

  std::size_t count() const { return classes_.size(); }
  const ConjClass& at(std::size_t i) const { return classes_[i]; }
  const std::vector<ConjClass>& all() const { return classes_; }
  std::uint32_t class_of(std::uint32_t elem_idx) const { return class_id_[elem_idx]; }

  // -1 when no such label
  int find_label(const std::string& label) const;
  std::vector<std::uint32_t> classes_of_order(std::uint64_t n) const;

  std::uint64_t centralizer_order(std::uint32_t elem_idx, std::uint64_t group_order) const {
    return group_order / classes_[class_id_[elem_idx]].size;
  }

 private:
  std::vector<ConjClass> classes_;
  std::vector<std::uint32_t> class_id_;
};

// |C_G(x)|; requires x in G
std::uint64_t centralizer_order(const PermGroup& g, const Permutation& x, const Config& cfg);

std::string class_letter(std::size_t i);

}  // namespace spreadlab
