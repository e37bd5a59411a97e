#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "covhom/rational.hpp"

namespace covhom {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  // row-major

// Span of a set of columns, reduced so the submatrix on pivot rows is the
// identity. Coordinates of a member vector are then its pivot entries.
struct ColumnBasis {
  int ambient = 0;
  std::vector<RatVec> cols;  // each of length ambient
  std::vector<int> pivots;   // ascending, one per column

  int dim() const { return static_cast<int>(cols.size()); }
};

ColumnBasis reduce_columns(int ambient, std::vector<RatVec> cols);

// Null space of M acting on column vectors, as a reduced basis in the
// coordinate space of M's columns.
ColumnBasis kernel_basis(const RatMat& M);

// Reduced row echelon form; returns the pivot columns.
std::vector<int> rref_in_place(RatMat& M);

int rank(RatMat M);

// Coordinates of v in the basis, or absence when v lies outside the span.
// Membership is verified by exact reconstruction.
std::optional<RatVec> coords_in(const ColumnBasis& basis, const RatVec& v);

// Trace of a linear map on the spanned subspace; absence when the map does
// not preserve the span.
std::optional<Rat> trace_on_span(const ColumnBasis& basis,
                                 const std::function<RatVec(const RatVec&)>& apply);

RatVec apply_matrix(const RatMat& M, const RatVec& v);

}  // namespace covhom
