#pragma once

#include <string>
#include <utility>
#include <vector>

#include "covhom/class_function.hpp"
#include "covhom/cover_spec.hpp"
#include "covhom/ratmat.hpp"

namespace covhom {

// Equivariant cell model of the cover. Vertices are the group elements (the
// fiber over the base vertex), edges come in |G|-families indexed by the
// generator slots [a1, b1, ..., ag, bg, l1, ..., lm], and the edge (slot, x)
// runs from x to x*phi(slot). A closed base contributes one relator 2-cell
// per vertex tracing prod [a_i,b_i] * lm^-1 ... l1^-1, so the punctured
// complex is the cover minus the branch fibers. Filling attaches one disk
// per branch coset, traversing its l_i edge cycle positively. G acts by left
// translation; every induced cell permutation carries sign +1.
class CellComplex {
public:
  struct TwoCell {
    enum class Kind { Relator, Disk };
    Kind kind;
    int branch;  // disk cells: 0-based branch index; relators: -1
    int base;    // relators: start vertex; disks: fiber point
    std::vector<std::pair<int, int>> boundary;  // (edge id, sign)
  };

  const CoverSpec& spec() const { return spec_; }
  bool filled() const { return filled_; }

  int vertex_count() const { return static_cast<int>(spec_.group->order()); }
  int slot_count() const { return static_cast<int>(slot_images_.size()); }
  int edge_count() const { return slot_count() * vertex_count(); }
  int face_count() const { return static_cast<int>(two_cells_.size()); }
  int edge_id(int slot, Elem x) const { return slot * vertex_count() + x; }
  Elem slot_image(int slot) const { return slot_images_[static_cast<std::size_t>(slot)]; }
  const std::vector<TwoCell>& two_cells() const { return two_cells_; }

  RatMat boundary1() const;  // vertices x edges
  RatMat boundary2() const;  // edges x faces

  // Left translation by h as cell permutations (all signs +1).
  std::vector<int> vertex_map(Elem h) const;
  std::vector<int> edge_map(Elem h) const;
  std::vector<int> face_map(Elem h) const;

private:
  friend CellComplex build_punctured_cover(const CoverSpec& spec);
  friend CellComplex fill_cover(CellComplex complex);

  CellComplex() = default;

  CoverSpec spec_;
  std::vector<Elem> slot_images_;
  std::vector<GSet> fibers_;
  std::vector<TwoCell> two_cells_;
  std::vector<int> disk_offset_;  // face index of the first disk of each branch
  bool filled_ = false;
};

CellComplex build_punctured_cover(const CoverSpec& spec);

// Attaches the branch disks; closed base only.
CellComplex fill_cover(CellComplex complex);

// Exact character of the G-action on H_1 = ker d1 / im d2, by traces on the
// two invariant subspaces.
ClassFunction h1_character(const CellComplex& complex);

long betti1(const CellComplex& complex);

// Sparse triplet dump "d1 row col value" / "d2 row col value" for external
// verification.
std::string boundary_triplets(const CellComplex& complex);

}  // namespace covhom
