#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "covhom/character_table.hpp"
#include "covhom/class_function.hpp"
#include "covhom/cover_spec.hpp"

namespace covhom {

// Character of H_1 of the cover minus the branch fibers:
// (2g+m-2) chi_reg + chi_triv for a closed base, (m-1) chi_reg + chi_triv
// for the disk. Requires m >= 1.
ClassFunction punctured_homology_character(const CoverSpec& spec);

// Character of H_1 of the closed cover:
// (2g+m-2) chi_reg + 2 chi_triv - sum_i perm_char(G/<l_i>).
// Verified to decompose with nonnegative integer multiplicities.
ClassFunction closed_homology_character(const CoverSpec& spec);

ModuleExpr closed_homology_module(const CoverSpec& spec);

// Sign convention for the local derivative of the distinguished stabilizer
// generator at a fixed point: Positive means l_i acts by zeta_{n_i}^{+1}.
enum class Orientation { Positive, Negative };

struct HodgeCharacterPair {
  ClassFunction chi10;
  ClassFunction chi01;
  Orientation orientation;
};

// Atiyah-Bott split of the closed homology character:
// chi01(h) = 1 - sum over fixed points z of h of 1/(1 - dh(z)) for h != e,
// chi01(e) = cover genus, chi10 = conjugate(chi01).
HodgeCharacterPair hodge_split(const CoverSpec& spec, Orientation orientation = Orientation::Positive);

// True iff chi10 = chi01 as class functions.
bool hodge_is_real(const CoverSpec& spec);

// The Z/2 cover of a genus-g surface branched over n points, with the often
// quoted module expression 2g*rho_R + (n-1)*rho_z + 1 recorded next to the
// computed decomposition. The two disagree by one rho_R; the computed module
// matches the dimension count 4g+n-2 and the cell-complex oracle.
struct PaDoubleCoverReport {
  CoverSpec spec;
  ModuleExpr computed;
  long computed_dim;
  std::string claimed_expr;
  long claimed_dim;
  bool agree;
};

PaDoubleCoverReport pa_double_cover_module(int genus, int n_branch);

struct TopologicalResult {
  bool topological = false;
  std::optional<Subgroup> witness;  // cyclic stabilizer realizing chi, when topological
};

// A transitive permutation character is topological iff it is realized by a
// coset action with cyclic point stabilizer.
TopologicalResult is_topological_perm_rep(const GroupPtr& group, const ClassFunction& chi);

// Hyperbolic images (a_i, b_i) with prod [a_i,b_i] = l_1...l_m such that all
// images together generate G, or absence when no genus-g closed extension
// exists.
std::optional<std::vector<std::pair<Elem, Elem>>> extend_to_closed_surface(
    const GroupPtr& group, const std::vector<Elem>& parabolic_images, int genus);

}  // namespace covhom
