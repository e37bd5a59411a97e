#include "covhom/ratmat.hpp"

#include <algorithm>
#include <numeric>

#include "covhom/error.hpp"

namespace covhom {

ColumnBasis reduce_columns(int ambient, std::vector<RatVec> cols) {
  ColumnBasis basis;
  basis.ambient = ambient;
  for (auto& col : cols) {
    check_internal(static_cast<int>(col.size()) == ambient, "column length must match the ambient dimension");
    for (std::size_t k = 0; k < basis.cols.size(); ++k) {
      const Rat c = col[static_cast<std::size_t>(basis.pivots[k])];
      if (c == 0) continue;
      for (int r = 0; r < ambient; ++r)
        col[static_cast<std::size_t>(r)] -= c * basis.cols[k][static_cast<std::size_t>(r)];
    }
    int pivot = -1;
    for (int r = 0; r < ambient; ++r)
      if (col[static_cast<std::size_t>(r)] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    const Rat scale = 1 / col[static_cast<std::size_t>(pivot)];
    for (auto& v : col) v *= scale;
    for (std::size_t k = 0; k < basis.cols.size(); ++k) {
      const Rat c = basis.cols[k][static_cast<std::size_t>(pivot)];
      if (c == 0) continue;
      for (int r = 0; r < ambient; ++r)
        basis.cols[k][static_cast<std::size_t>(r)] -= c * col[static_cast<std::size_t>(r)];
    }
    basis.cols.push_back(std::move(col));
    basis.pivots.push_back(pivot);
  }
  std::vector<std::size_t> idx(basis.cols.size());
  std::iota(idx.begin(), idx.end(), 0u);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return basis.pivots[a] < basis.pivots[b]; });
  ColumnBasis sorted;
  sorted.ambient = ambient;
  for (auto i : idx) {
    sorted.cols.push_back(std::move(basis.cols[i]));
    sorted.pivots.push_back(basis.pivots[i]);
  }
  return sorted;
}

std::vector<int> rref_in_place(RatMat& M) {
  std::vector<int> pivot_cols;
  if (M.empty()) return pivot_cols;
  const std::size_t rows = M.size();
  const std::size_t cols = M[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t sel = row;
    while (sel < rows && M[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(M[sel], M[row]);
    const Rat scale = 1 / M[row][col];
    for (auto& v : M[row]) v *= scale;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || M[r][col] == 0) continue;
      const Rat c = M[r][col];
      for (std::size_t j = col; j < cols; ++j) M[r][j] -= c * M[row][j];
    }
    pivot_cols.push_back(static_cast<int>(col));
    ++row;
  }
  return pivot_cols;
}

int rank(RatMat M) { return static_cast<int>(rref_in_place(M).size()); }

ColumnBasis kernel_basis(const RatMat& M) {
  check_internal(!M.empty(), "kernel of an empty matrix is undefined");
  const int cols = static_cast<int>(M[0].size());
  RatMat R = M;
  const std::vector<int> pivot_cols = rref_in_place(R);
  std::vector<char> is_pivot(static_cast<std::size_t>(cols), 0);
  for (int c : pivot_cols) is_pivot[static_cast<std::size_t>(c)] = 1;

  ColumnBasis basis;
  basis.ambient = cols;
  for (int free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
    RatVec v(static_cast<std::size_t>(cols), Rat(0));
    v[static_cast<std::size_t>(free_col)] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r)
      v[static_cast<std::size_t>(pivot_cols[r])] = -R[r][static_cast<std::size_t>(free_col)];
    basis.cols.push_back(std::move(v));
    basis.pivots.push_back(free_col);
  }
  return basis;
}

std::optional<RatVec> coords_in(const ColumnBasis& basis, const RatVec& v) {
  check_internal(static_cast<int>(v.size()) == basis.ambient, "vector length must match the ambient dimension");
  RatVec coords(basis.cols.size());
  for (std::size_t k = 0; k < basis.cols.size(); ++k)
    coords[k] = v[static_cast<std::size_t>(basis.pivots[k])];
  RatVec recon(static_cast<std::size_t>(basis.ambient), Rat(0));
  for (std::size_t k = 0; k < basis.cols.size(); ++k) {
    if (coords[k] == 0) continue;
    for (int r = 0; r < basis.ambient; ++r)
      recon[static_cast<std::size_t>(r)] += coords[k] * basis.cols[k][static_cast<std::size_t>(r)];
  }
  if (recon != v) return std::nullopt;
  return coords;
}

std::optional<Rat> trace_on_span(const ColumnBasis& basis,
                                 const std::function<RatVec(const RatVec&)>& apply) {
  Rat trace(0);
  for (std::size_t j = 0; j < basis.cols.size(); ++j) {
    const auto coords = coords_in(basis, apply(basis.cols[j]));
    if (!coords) return std::nullopt;
    trace += (*coords)[j];
  }
  return trace;
}

RatVec apply_matrix(const RatMat& M, const RatVec& v) {
  RatVec out(M.size(), Rat(0));
  for (std::size_t r = 0; r < M.size(); ++r) {
    check_internal(M[r].size() == v.size(), "matrix width must match vector length");
    for (std::size_t c = 0; c < v.size(); ++c)
      if (v[c] != 0 && M[r][c] != 0) out[r] += M[r][c] * v[c];
  }
  return out;
}

}  // namespace covhom
