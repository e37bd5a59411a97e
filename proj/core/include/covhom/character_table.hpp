#pragma once

#include <memory>
#include <string>
#include <vector>

#include "covhom/class_function.hpp"

namespace covhom {

class CharacterTable;
using TablePtr = std::shared_ptr<const CharacterTable>;

// Formal nonnegative-integer combination of the irreducible characters of a
// fixed group.  Rendering extracts regular (rho_R) and augmentation (rho_z)
// blocks greedily, then lists leftover irreducibles by row index.
class ModuleExpr {
public:
  ModuleExpr(TablePtr table, std::vector<long> multiplicities);

  const TablePtr& table() const { return table_; }
  const std::vector<long>& multiplicities() const { return mult_; }
  long multiplicity(int row) const { return mult_[static_cast<std::size_t>(row)]; }
  long dim() const;
  ClassFunction character() const;

  bool operator==(const ModuleExpr& rhs) const;
  bool operator!=(const ModuleExpr& rhs) const { return !(*this == rhs); }

  std::string str() const;

  // k*rho_R + j*trivial, the shape the closed-surface results take.
  static ModuleExpr regular_plus_trivial(const TablePtr& table, long k, long j);

private:
  TablePtr table_;
  std::vector<long> mult_;
};

// Exact character table computed with Dixon's method: class-algebra
// structure constants are split over a prime field F_p with p = 1 mod exp(G),
// and the eigenvector data is lifted back to cyclotomic integers by a
// discrete Fourier sum over power maps.  Rows are ordered with the trivial
// character first, then by ascending degree and the value order of Cyclo.
class CharacterTable {
public:
  static TablePtr of(const GroupPtr& group);

  const GroupPtr& group() const { return group_; }
  int rows() const { return static_cast<int>(irreducibles_.size()); }
  const ClassFunction& irreducible(int i) const { return irreducibles_[static_cast<std::size_t>(i)]; }
  const std::vector<ClassFunction>& irreducibles() const { return irreducibles_; }
  long degree(int i) const { return degrees_[static_cast<std::size_t>(i)]; }
  const std::vector<long>& degrees() const { return degrees_; }
  int trivial_row() const { return 0; }

private:
  CharacterTable(GroupPtr group, std::vector<ClassFunction> irreducibles);

  GroupPtr group_;
  std::vector<ClassFunction> irreducibles_;
  std::vector<long> degrees_;
};

// Multiplicities of the irreducibles in a character; every inner product must
// come out a nonnegative rational integer.
ModuleExpr decompose(const TablePtr& table, const ClassFunction& chi);

// Dimension of the unitary commutant U(i . rho_R): sum over irreducibles of
// (i dim V)^2, which collapses to i^2 |G|.
long commutant_unitary_dim(const TablePtr& table, long i);

}  // namespace covhom
