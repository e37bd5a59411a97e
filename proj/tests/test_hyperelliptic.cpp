#include "covhom/hyperelliptic.hpp"

#include <vector>

#include "covhom/character_table.hpp"
#include "covhom/chevalley_weil.hpp"
#include "common.hpp"
#include "doctest.h"

using namespace covhom;
using namespace covhom::testing;

namespace {
Cyclo c(long n) { return Cyclo(n); }
}  // namespace

TEST_CASE("model construction") {
  const HyperellipticCyclicCover cover = make_hyperelliptic_cover(2, 3);
  CHECK(cover.base_genus == 2);
  CHECK(cover.cyclic_degree == 3);
  CHECK(cover.coefficients.size() == 7);  // a_0 .. a_{2g+2}
  CHECK(cover.coefficients.front() == Rat(1));
  CHECK(cover.galois_group()->order() == 3);

  const HyperellipticCyclicCover with_coeffs =
      make_hyperelliptic_cover(2, 2, {Rat(2), Rat(0), Rat(1), Rat(0), Rat(0), Rat(0), Rat(-1)});
  CHECK(with_coeffs.coefficients[0] == Rat(2));
}

TEST_CASE("model validation") {
  CHECK(error_kind([] { (void)make_hyperelliptic_cover(1, 2); }) == "MalformedCurve");
  CHECK(error_kind([] { (void)make_hyperelliptic_cover(2, 0); }) == "MalformedCurve");
  CHECK(error_kind([] { (void)make_hyperelliptic_cover(2, 2, {Rat(1), Rat(1)}); }) ==
        "MalformedCurve");
  std::vector<Rat> zero_a0(7, Rat(1));
  zero_a0[0] = Rat(0);
  CHECK(error_kind([&] { (void)make_hyperelliptic_cover(2, 2, zero_a0); }) == "MalformedCurve");
}

TEST_CASE("differential basis") {
  const auto basis = differential_basis(make_hyperelliptic_cover(2, 3));
  REQUIRE(basis.size() == 6);  // mg forms
  for (long l = 0; l < 6; ++l) {
    CHECK(basis[static_cast<std::size_t>(l)].exponent == l);
    CHECK(basis[static_cast<std::size_t>(l)].character_value == Cyclo::zeta(3, l + 1));
  }
  CHECK(basis[0].symbol == "dx'/y");
  CHECK(basis[1].symbol == "x' dx'/y");
  CHECK(basis[2].symbol == "x'^2 dx'/y");
  // the first form vanishing on the branch divisor carries the trivial character
  CHECK(basis[2].character_value == c(1));

  const auto base_curve = differential_basis(make_hyperelliptic_cover(3, 1));
  REQUIRE(base_curve.size() == 3);
  for (const auto& form : base_curve) CHECK(form.character_value == c(1));
}

TEST_CASE("canonical sections form g copies of the regular representation") {
  for (int g = 2; g <= 4; ++g)
    for (long m = 1; m <= 5; ++m) {
      const HyperellipticCyclicCover cover = make_hyperelliptic_cover(g, m);
      const ClassFunction chi = h0K_character(cover);
      CHECK(chi == regular_character(cover.galois_group()).scaled(g));
      CHECK(chi.at_identity() == Cyclo(m * g));
    }
}

TEST_CASE("sections vanishing on the branch divisor") {
  const HyperellipticCyclicCover cover = make_hyperelliptic_cover(2, 3);
  const KminusBData data = h0KminusB_character(cover);
  CHECK(data.dimension == 4);  // m(g-1)+1
  CHECK(data.degree == 6);     // 2m(g-1)
  CHECK(data.character.at_identity() == c(4));
  const TablePtr T = CharacterTable::of(cover.galois_group());
  CHECK(decompose(T, data.character).multiplicities() == std::vector<long>{2, 1, 1});

  for (int g = 2; g <= 4; ++g)
    for (long m = 1; m <= 5; ++m) {
      const KminusBData d = h0KminusB_character(make_hyperelliptic_cover(g, m));
      CHECK(d.dimension == m * (g - 1) + 1);
      CHECK(d.degree == 2 * m * (g - 1));
      // (g-1) rho_R + 1: value g-1 at the identity coset... value 1 off the identity
      const ClassFunction chi = d.character;
      for (int cls = 1; cls < chi.size(); ++cls) CHECK(chi.value(cls) == c(1));
    }
}

TEST_CASE("Hodge consistency with the branched-cover formula") {
  // two fully ramified points on a genus-g base; chi(H^0 K) + conjugate
  // equals the closed homology character of the matching cover spec
  for (int g = 2; g <= 3; ++g)
    for (long m = 2; m <= 4; ++m) {
      const HyperellipticCyclicCover cover = make_hyperelliptic_cover(g, m);
      const GroupPtr G = cover.galois_group();
      const Elem s = G->generators()[0];
      CoverSpec spec;
      spec.group = G;
      spec.base_kind = BaseKind::Closed;
      spec.base_genus = g;
      spec.hyperbolic_images.assign(static_cast<std::size_t>(g), {0, 0});
      spec.parabolic_images = {s, G->inv(s)};
      const ClassFunction h0K = h0K_character(cover);
      CHECK(h0K + h0K.conjugate() == closed_homology_character(spec));
    }
}

TEST_CASE("obstruction verdicts") {
  CHECK(hyperelliptic_obstruction(cyclic_group(5)).verdict == ObstructionVerdict::NotObstructed);
  CHECK(hyperelliptic_obstruction(cyclic_group(12)).verdict == ObstructionVerdict::NotObstructed);
  CHECK(hyperelliptic_obstruction(dihedral_group(7)).verdict == ObstructionVerdict::NotObstructed);
  CHECK(hyperelliptic_obstruction(s4()).verdict == ObstructionVerdict::NotObstructed);
  CHECK(hyperelliptic_obstruction(a4()).verdict == ObstructionVerdict::NotObstructed);
  CHECK(hyperelliptic_obstruction(group_of("(1 2 3 4 5);(1 2 3)")).verdict ==
        ObstructionVerdict::NotObstructed);

  // Q8 modulo its central involution is the Klein four-group = Dih(2)
  const ObstructionReport q8r = hyperelliptic_obstruction(q8());
  CHECK(q8r.verdict == ObstructionVerdict::NotObstructed);
  CHECK(q8r.reason.find("central involution") != std::string::npos);

  // rank-2 and rank-3 elementary abelian 2-groups embed, rank 4 does not
  CHECK(hyperelliptic_obstruction(v4()).verdict == ObstructionVerdict::NotObstructed);
  CHECK(hyperelliptic_obstruction(group_of("(1 2);(3 4);(5 6)")).verdict ==
        ObstructionVerdict::NotObstructed);
  CHECK(hyperelliptic_obstruction(group_of("(1 2);(3 4);(5 6);(7 8)")).verdict ==
        ObstructionVerdict::Obstructed);

  const ObstructionReport rank6 =
      hyperelliptic_obstruction(group_of("(1 2);(3 4);(5 6);(7 8);(9 10);(11 12)"));
  CHECK(rank6.verdict == ObstructionVerdict::Obstructed);
  CHECK(rank6.reason.find("rank 6") != std::string::npos);

  // odd-order noncyclic abelian: no central involution to divide out
  CHECK(hyperelliptic_obstruction(group_of("(1 2 3);(4 5 6)")).verdict ==
        ObstructionVerdict::Obstructed);

  // beyond the exact range and below the rank barrier: left open
  CHECK(hyperelliptic_obstruction(cyclic_group(126)).verdict == ObstructionVerdict::Unknown);
}

TEST_CASE("verdict names") {
  CHECK(verdict_name(ObstructionVerdict::Obstructed) == "Obstructed");
  CHECK(verdict_name(ObstructionVerdict::NotObstructed) == "NotObstructed");
  CHECK(verdict_name(ObstructionVerdict::Unknown) == "Unknown");
}
