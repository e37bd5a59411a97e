#pragma once

#include <vector>

#include "covhom/cyclo.hpp"
#include "covhom/group.hpp"

namespace covhom {

// Function on conjugacy classes with exact cyclotomic values, indexed in the
// class order of the owning group.
class ClassFunction {
public:
  ClassFunction(GroupPtr group, std::vector<Cyclo> values);

  const GroupPtr& group() const { return group_; }
  int size() const { return static_cast<int>(values_.size()); }
  const Cyclo& value(int cls) const { return values_[static_cast<std::size_t>(cls)]; }
  const Cyclo& at_identity() const { return values_[0]; }
  const std::vector<Cyclo>& values() const { return values_; }

  ClassFunction operator+(const ClassFunction& rhs) const;
  ClassFunction operator-(const ClassFunction& rhs) const;
  ClassFunction scaled(long k) const;
  ClassFunction conjugate() const;

  bool operator==(const ClassFunction& rhs) const;
  bool operator!=(const ClassFunction& rhs) const { return !(*this == rhs); }
  bool is_real() const;

private:
  GroupPtr group_;
  std::vector<Cyclo> values_;
};

// (1/|G|) sum over classes of |C| a(C) conj(b(C)).
Cyclo inner_product(const ClassFunction& a, const ClassFunction& b);

ClassFunction trivial_character(const GroupPtr& group);
ClassFunction regular_character(const GroupPtr& group);
// Regular minus trivial.
ClassFunction nontrivial_regular_part(const GroupPtr& group);

// Fixed-point counts of the class representatives on a G-set.
ClassFunction permutation_character(const GSet& action);

void require_same_group(const ClassFunction& a, const ClassFunction& b);

}  // namespace covhom
