#include "covhom/cell_complex.hpp"

#include <sstream>

#include "covhom/error.hpp"

namespace covhom {

namespace {

// Appends the edge for one letter of a boundary word and advances the
// current vertex. A negative letter first steps back along the edge it then
// traverses against its orientation.
void trace_letter(const CellComplex& complex, int slot, bool inverted, Elem& cur,
                  std::vector<std::pair<int, int>>& boundary) {
  const auto& G = *complex.spec().group;
  if (!inverted) {
    boundary.emplace_back(complex.edge_id(slot, cur), +1);
    cur = G.mul(cur, complex.slot_image(slot));
  } else {
    cur = G.mul(cur, G.inv(complex.slot_image(slot)));
    boundary.emplace_back(complex.edge_id(slot, cur), -1);
  }
}

}  // namespace

CellComplex build_punctured_cover(const CoverSpec& spec) {
  validate(spec);
  CellComplex complex;
  complex.spec_ = spec;
  for (const auto& [a, b] : spec.hyperbolic_images) {
    complex.slot_images_.push_back(a);
    complex.slot_images_.push_back(b);
  }
  for (Elem l : spec.parabolic_images) complex.slot_images_.push_back(l);
  for (const auto& fiber : branch_fibers(spec)) complex.fibers_.push_back(fiber.fiber);

  if (spec.is_closed()) {
    const int g = spec.base_genus;
    const int m = spec.branch_count();
    for (Elem x = 0; x < spec.group->order(); ++x) {
      CellComplex::TwoCell cell{CellComplex::TwoCell::Kind::Relator, -1, x, {}};
      Elem cur = x;
      for (int i = 0; i < g; ++i) {
        trace_letter(complex, 2 * i, false, cur, cell.boundary);
        trace_letter(complex, 2 * i + 1, false, cur, cell.boundary);
        trace_letter(complex, 2 * i, true, cur, cell.boundary);
        trace_letter(complex, 2 * i + 1, true, cur, cell.boundary);
      }
      for (int i = m - 1; i >= 0; --i) trace_letter(complex, 2 * g + i, true, cur, cell.boundary);
      check_internal(cur == x, "relator word must close up");
      complex.two_cells_.push_back(std::move(cell));
    }
  }
  return complex;
}

CellComplex fill_cover(CellComplex complex) {
  const CoverSpec& spec = complex.spec_;
  if (!spec.is_closed()) fail("PreconditionViolated", "only closed bases can be filled");
  if (complex.filled_) fail("PreconditionViolated", "complex is already filled");
  const int g = spec.base_genus;
  for (std::size_t i = 0; i < complex.fibers_.size(); ++i) {
    const GSet& fiber = complex.fibers_[i];
    const Elem l = spec.parabolic_images[i];
    const long ni = spec.group->elem_order(l);
    complex.disk_offset_.push_back(complex.face_count());
    for (int p = 0; p < fiber.size(); ++p) {
      CellComplex::TwoCell cell{CellComplex::TwoCell::Kind::Disk, static_cast<int>(i), p, {}};
      Elem cur = fiber.rep(p);
      for (long j = 0; j < ni; ++j) {
        cell.boundary.emplace_back(complex.edge_id(2 * g + static_cast<int>(i), cur), +1);
        cur = spec.group->mul(cur, l);
      }
      check_internal(cur == fiber.rep(p), "disk boundary must close after n_i steps");
      complex.two_cells_.push_back(std::move(cell));
    }
  }
  complex.filled_ = true;
  return complex;
}

RatMat CellComplex::boundary1() const {
  RatMat M(static_cast<std::size_t>(vertex_count()), RatVec(static_cast<std::size_t>(edge_count()), Rat(0)));
  for (int slot = 0; slot < slot_count(); ++slot) {
    const Elem image = slot_image(slot);
    for (Elem x = 0; x < vertex_count(); ++x) {
      const int e = edge_id(slot, x);
      const Elem target = spec_.group->mul(x, image);
      M[static_cast<std::size_t>(target)][static_cast<std::size_t>(e)] += 1;
      M[static_cast<std::size_t>(x)][static_cast<std::size_t>(e)] -= 1;
    }
  }
  return M;
}

RatMat CellComplex::boundary2() const {
  RatMat M(static_cast<std::size_t>(edge_count()), RatVec(static_cast<std::size_t>(face_count()), Rat(0)));
  for (int f = 0; f < face_count(); ++f)
    for (const auto& [edge, sign] : two_cells_[static_cast<std::size_t>(f)].boundary)
      M[static_cast<std::size_t>(edge)][static_cast<std::size_t>(f)] += sign;
  return M;
}

std::vector<int> CellComplex::vertex_map(Elem h) const {
  std::vector<int> map(static_cast<std::size_t>(vertex_count()));
  for (Elem x = 0; x < vertex_count(); ++x) map[static_cast<std::size_t>(x)] = spec_.group->mul(h, x);
  return map;
}

std::vector<int> CellComplex::edge_map(Elem h) const {
  std::vector<int> map(static_cast<std::size_t>(edge_count()));
  for (int slot = 0; slot < slot_count(); ++slot)
    for (Elem x = 0; x < vertex_count(); ++x)
      map[static_cast<std::size_t>(edge_id(slot, x))] = edge_id(slot, spec_.group->mul(h, x));
  return map;
}

std::vector<int> CellComplex::face_map(Elem h) const {
  std::vector<int> map(static_cast<std::size_t>(face_count()));
  for (int f = 0; f < face_count(); ++f) {
    const TwoCell& cell = two_cells_[static_cast<std::size_t>(f)];
    if (cell.kind == TwoCell::Kind::Relator) {
      map[static_cast<std::size_t>(f)] = spec_.group->mul(h, cell.base);
    } else {
      const GSet& fiber = fibers_[static_cast<std::size_t>(cell.branch)];
      map[static_cast<std::size_t>(f)] =
          disk_offset_[static_cast<std::size_t>(cell.branch)] + fiber.act(h, cell.base);
    }
  }
  return map;
}

ClassFunction h1_character(const CellComplex& complex) {
  const GroupPtr& group = complex.spec().group;
  const ColumnBasis cycles = kernel_basis(complex.boundary1());

  std::vector<RatVec> boundary_cols;
  const RatMat d2 = complex.boundary2();
  for (int f = 0; f < complex.face_count(); ++f) {
    RatVec col(static_cast<std::size_t>(complex.edge_count()));
    for (int e = 0; e < complex.edge_count(); ++e)
      col[static_cast<std::size_t>(e)] = d2[static_cast<std::size_t>(e)][static_cast<std::size_t>(f)];
    boundary_cols.push_back(std::move(col));
  }
  const ColumnBasis boundaries = reduce_columns(complex.edge_count(), std::move(boundary_cols));

  std::vector<Cyclo> values;
  for (int c = 0; c < group->class_count(); ++c) {
    const Elem h = group->conjugacy_class(c).rep;
    const std::vector<int> emap = complex.edge_map(h);
    const auto apply = [&](const RatVec& v) {
      RatVec out(v.size(), Rat(0));
      for (std::size_t e = 0; e < v.size(); ++e)
        if (v[e] != 0) out[static_cast<std::size_t>(emap[e])] = v[e];
      return out;
    };
    const auto tz = trace_on_span(cycles, apply);
    if (!tz) fail_guard("NonInvariantSubspace", "translation does not preserve the cycle space");
    const auto tb = trace_on_span(boundaries, apply);
    if (!tb) fail_guard("NonInvariantSubspace", "translation does not preserve the boundary space");
    const Rat value = *tz - *tb;
    check_internal(rat_is_integer(value), "homology trace must be a rational integer");
    values.push_back(Cyclo(value));
  }
  return ClassFunction(group, std::move(values));
}

long betti1(const CellComplex& complex) {
  const ColumnBasis cycles = kernel_basis(complex.boundary1());
  return cycles.dim() - rank(complex.boundary2());
}

std::string boundary_triplets(const CellComplex& complex) {
  std::ostringstream out;
  out << "# boundary1: " << complex.vertex_count() << " x " << complex.edge_count() << "\n";
  const RatMat d1 = complex.boundary1();
  for (std::size_t r = 0; r < d1.size(); ++r)
    for (std::size_t c = 0; c < d1[r].size(); ++c)
      if (d1[r][c] != 0) out << "d1 " << r << " " << c << " " << rat_str(d1[r][c]) << "\n";
  out << "# boundary2: " << complex.edge_count() << " x " << complex.face_count() << "\n";
  const RatMat d2 = complex.boundary2();
  for (std::size_t r = 0; r < d2.size(); ++r)
    for (std::size_t c = 0; c < d2[r].size(); ++c)
      if (d2[r][c] != 0) out << "d2 " << r << " " << c << " " << rat_str(d2[r][c]) << "\n";
  return out.str();
}

}  // namespace covhom
