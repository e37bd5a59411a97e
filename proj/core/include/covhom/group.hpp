#pragma once

#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "covhom/perm.hpp"

namespace covhom {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;
using Elem = int;

struct ConjugacyClass {
  Elem rep;                    // smallest element index in the class
  std::vector<Elem> members;   // ascending
  long size() const { return static_cast<long>(members.size()); }
};

// Finite permutation group, closed by breadth-first products from the
// identity in the given generator order.  Element 0 is the identity and the
// element order is the canonical order used everywhere downstream.
class FiniteGroup : public std::enable_shared_from_this<FiniteGroup> {
public:
  static constexpr long kOrderCap = 1000000;

  static GroupPtr enumerate(std::vector<Perm> generators, long max_order = kOrderCap);

  int degree() const { return degree_; }
  long order() const { return static_cast<long>(elements_.size()); }
  long exponent() const { return exponent_; }

  const Perm& perm(Elem x) const { return elements_[static_cast<std::size_t>(x)]; }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Elem>& generators() const { return generators_; }

  Elem identity() const { return 0; }
  Elem index_of(const Perm& p) const;          // -1 when absent
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const { return inverse_[static_cast<std::size_t>(a)]; }
  Elem power(Elem a, long k) const;
  Elem conjugate(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
  Elem commutator(Elem a, Elem b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }
  long elem_order(Elem a) const { return perm(a).order(); }

  int class_count() const { return static_cast<int>(classes_.size()); }
  const std::vector<ConjugacyClass>& conjugacy_classes() const { return classes_; }
  const ConjugacyClass& conjugacy_class(int c) const { return classes_[static_cast<std::size_t>(c)]; }
  int class_of(Elem x) const { return class_of_[static_cast<std::size_t>(x)]; }
  int inverse_class(int c) const;
  int power_class(int c, long k) const;

  bool is_abelian() const;
  std::vector<Elem> center() const;

private:
  FiniteGroup() = default;

  int degree_ = 1;
  long exponent_ = 1;
  std::vector<Perm> elements_;
  std::vector<Elem> generators_;
  std::vector<Elem> inverse_;
  std::unordered_map<Perm, Elem, PermHash> index_;
  std::vector<int> class_of_;
  std::vector<ConjugacyClass> classes_;
  std::vector<Elem> mul_table_;  // row-major |G| x |G|, built for small groups
};

// Subgroup given by its sorted element list inside a parent group.
struct Subgroup {
  GroupPtr parent;
  std::vector<Elem> generators;
  std::vector<Elem> elements;  // ascending, closed under products
  bool is_cyclic = false;
  bool is_central = false;

  long order() const { return static_cast<long>(elements.size()); }
  bool contains(Elem x) const;
};

Subgroup subgroup_closure(const GroupPtr& group, std::vector<Elem> generators);
Subgroup cyclic_subgroup(const GroupPtr& group, Elem g);

// Representatives of conjugacy classes of cyclic subgroups, ordered by
// (order, element list); includes the trivial subgroup and, for cyclic
// groups, the whole group.
std::vector<Subgroup> cyclic_subgroups_up_to_conjugacy(const GroupPtr& group);

// Every subgroup, by closure saturation; ordered by (order, element list).
std::vector<Subgroup> all_subgroups(const GroupPtr& group);

// Left multiplication action on the left cosets of a subgroup.  Point 0 is
// the coset of the identity; points are ordered by first occurrence in the
// element order.
class GSet {
public:
  GSet(GroupPtr group, const Subgroup& stabilizer);

  const GroupPtr& group() const { return group_; }
  int size() const { return static_cast<int>(reps_.size()); }
  int point_of(Elem x) const { return point_of_[static_cast<std::size_t>(x)]; }
  Elem rep(int point) const { return reps_[static_cast<std::size_t>(point)]; }
  int act(Elem g, int point) const;
  long fixed_points(Elem g) const;

private:
  GroupPtr group_;
  std::vector<int> point_of_;
  std::vector<Elem> reps_;
};

GSet coset_action(const GroupPtr& group, const Subgroup& stabilizer);

// Set of products of at most g commutators, ascending element order.
std::vector<Elem> commutator_product_set(const GroupPtr& group, int g);

bool generate_group(const GroupPtr& group, const std::vector<Elem>& elems);

// Minimal generator count of an abelian group: max over primes p of the
// F_p-dimension of the p-torsion subgroup.
int abelian_rank(const GroupPtr& group);

// Cyclic group of order n as a product of prime-power cycles (the minimal
// permutation degree); errors when that degree exceeds the cap.
GroupPtr cyclic_group(long n);
GroupPtr dihedral_group(int n);  // order 2n, n >= 1

}  // namespace covhom
