#pragma once

#include <string>
#include <vector>

#include "covhom/class_function.hpp"
#include "covhom/group.hpp"
#include "covhom/rational.hpp"

namespace covhom {

// Cyclic degree-m cover X' of the hyperelliptic curve y^2 = sum a_i x^i,
// obtained by substituting x = x'^m; fully ramified over (0, +-sqrt(a0)).
// The curve is symbolic: only the exponent bookkeeping enters any result,
// the coefficients are carried for interface fidelity and the a0 != 0 check.
struct HyperellipticCyclicCover {
  int base_genus;              // g >= 2
  long cyclic_degree;          // m >= 1; m = 1 is the base curve itself
  std::vector<Rat> coefficients;  // a_0 ... a_{2g+2}
  GroupPtr galois;             // Z/m, one instance shared by every character

  GroupPtr galois_group() const { return galois; }
};

// Validates and returns the model; empty coefficients default to all ones.
HyperellipticCyclicCover make_hyperelliptic_cover(int base_genus, long cyclic_degree,
                                                  std::vector<Rat> coefficients = {});

// One holomorphic form x'^l dx'/y with its Galois character: the generator
// acts by zeta_m^(l+1).
struct DifferentialBasisElement {
  long exponent;
  Cyclo character_value;
  std::string symbol;
};

// The mg forms x'^l dx'/y, l = 0..mg-1, a basis of H^0(K) on the cover.
std::vector<DifferentialBasisElement> differential_basis(const HyperellipticCyclicCover& cover);

// Character of H^0(K) as a Z/m module; equals g * chi_reg.
ClassFunction h0K_character(const HyperellipticCyclicCover& cover);

struct KminusBData {
  ClassFunction character;  // (g-1) rho_R + 1
  long dimension;           // m(g-1) + 1
  long degree;              // deg(K - B) = 2m(g-1)
};

// The forms vanishing on the ramification divisor B: exponents l >= m-1.
KminusBData h0KminusB_character(const HyperellipticCyclicCover& cover);

enum class ObstructionVerdict { Obstructed, NotObstructed, Unknown };

struct ObstructionReport {
  ObstructionVerdict verdict;
  std::string reason;
};

// Can G act on a hyperelliptic curve? Automorphism groups of hyperelliptic
// curves are central extensions by Z/2 of finite subgroups of PGL2(C)
// (cyclic, dihedral, A4, S4, A5). Obstructed when G is abelian of rank >= 6
// (any order) or when no central quotient of order <= 2 lands in that list
// (exact test, |G| <= 120); Unknown beyond the exact range.
ObstructionReport hyperelliptic_obstruction(const GroupPtr& group);

std::string verdict_name(ObstructionVerdict verdict);

}  // namespace covhom
