#include "covhom/character_table.hpp"

#include <algorithm>
#include <vector>

#include "covhom/class_function.hpp"
#include "common.hpp"
#include "doctest.h"

using namespace covhom;
using namespace covhom::testing;

namespace {
Cyclo c(long n) { return Cyclo(n); }
}  // namespace

TEST_CASE("class function arithmetic") {
  const GroupPtr G = s3();
  const ClassFunction triv = trivial_character(G);
  const ClassFunction reg = regular_character(G);
  CHECK(reg.at_identity() == c(6));
  CHECK(reg.value(1) == c(0));
  CHECK(nontrivial_regular_part(G) == reg - triv);
  CHECK(triv.scaled(3) + reg == reg + triv + triv + triv);
  CHECK(reg.conjugate() == reg);
  CHECK(inner_product(triv, triv) == c(1));
  CHECK(inner_product(reg, triv) == c(1));
  CHECK(inner_product(reg, reg) == c(6));
  CHECK(error_kind([&] { (void)(triv + trivial_character(cyclic_group(2))); }) == "GroupMismatch");
}

TEST_CASE("permutation characters count fixed points") {
  const GroupPtr G = s3();
  const Subgroup H = subgroup_closure(G, {G->index_of(Perm::parse_cycles("(1 2)").padded(3))});
  const ClassFunction natural = permutation_character(coset_action(G, H));
  CHECK(natural.values() == std::vector<Cyclo>{c(3), c(1), c(0)});
  CHECK(permutation_character(coset_action(G, subgroup_closure(G, {}))) == regular_character(G));
  // one orbit, one trivial constituent
  CHECK(inner_product(natural, trivial_character(G)) == c(1));
}

TEST_CASE("cyclic group of order 3 has the frozen table") {
  const TablePtr T = CharacterTable::of(cyclic_group(3));
  REQUIRE(T->rows() == 3);
  const Cyclo z = Cyclo::zeta(3);
  CHECK(T->irreducible(0).values() == std::vector<Cyclo>{c(1), c(1), c(1)});
  CHECK(T->irreducible(1).values() == std::vector<Cyclo>{c(1), z, z * z});
  CHECK(T->irreducible(2).values() == std::vector<Cyclo>{c(1), z * z, z});
  CHECK(T->irreducible(1).conjugate() == T->irreducible(2));
  CHECK_FALSE(T->irreducible(1).is_real());
}

TEST_CASE("symmetric group on three letters") {
  const TablePtr T = CharacterTable::of(s3());
  REQUIRE(T->rows() == 3);
  CHECK(T->degrees() == std::vector<long>{1, 1, 2});
  CHECK(T->irreducible(1).values() == std::vector<Cyclo>{c(1), c(-1), c(1)});
  CHECK(T->irreducible(2).values() == std::vector<Cyclo>{c(2), c(0), c(-1)});
  for (int i = 0; i < T->rows(); ++i) CHECK(T->irreducible(i).is_real());
}

TEST_CASE("quaternion group") {
  const GroupPtr G = q8();
  const TablePtr T = CharacterTable::of(G);
  REQUIRE(T->rows() == 5);
  CHECK(T->degrees() == std::vector<long>{1, 1, 1, 1, 2});
  const int central = G->class_of(G->power(G->generators()[0], 2));  // -1
  for (int cls = 0; cls < 5; ++cls) {
    const Cyclo v = T->irreducible(4).value(cls);
    if (cls == 0)
      CHECK(v == c(2));
    else if (cls == central)
      CHECK(v == c(-2));
    else
      CHECK(v == c(0));
  }
  for (int i = 1; i < 4; ++i) {
    for (int cls = 0; cls < 5; ++cls) {
      const Cyclo v = T->irreducible(i).value(cls);
      CHECK(v * v == c(1));  // linear characters of an exponent-2 quotient
    }
  }
}

TEST_CASE("alternating and symmetric groups of degree four, and A5") {
  CHECK(CharacterTable::of(a4())->degrees() == std::vector<long>{1, 1, 1, 3});
  CHECK(CharacterTable::of(s4())->degrees() == std::vector<long>{1, 1, 2, 3, 3});
  const TablePtr A4 = CharacterTable::of(a4());
  CHECK_FALSE(A4->irreducible(1).is_real());
  CHECK(A4->irreducible(1).conjugate() == A4->irreducible(2));

  const TablePtr A5 = CharacterTable::of(group_of("(1 2 3 4 5);(1 2 3)"));
  CHECK(A5->degrees() == std::vector<long>{1, 3, 3, 4, 5});
  for (int i = 0; i < 5; ++i) CHECK(A5->irreducible(i).is_real());
  // the two degree-3 rows carry the golden-ratio values from conductor 5
  CHECK(A5->irreducible(1) != A5->irreducible(2));
}

TEST_CASE("row order is trivial first, then degree, then value order") {
  for (const GroupPtr& G : {s3(), q8(), a4(), s4(), cyclic_group(6), dihedral_group(4)}) {
    const TablePtr T = CharacterTable::of(G);
    CHECK(T->trivial_row() == 0);
    CHECK(T->irreducible(0) == trivial_character(G));
    for (int i = 1; i + 1 < T->rows(); ++i) CHECK(T->degree(i) <= T->degree(i + 1));
    for (int i = 1; i + 1 < T->rows(); ++i) {
      if (T->degree(i) != T->degree(i + 1)) continue;
      int cmp = 0;
      for (int cls = 0; cls < G->class_count() && cmp == 0; ++cls)
        cmp = Cyclo::order3(T->irreducible(i).value(cls), T->irreducible(i + 1).value(cls));
      CHECK(cmp < 0);
    }
  }
}

TEST_CASE("orthogonality of columns") {
  for (const GroupPtr& G : {s3(), q8(), a4(), cyclic_group(5), dihedral_group(6)}) {
    const TablePtr T = CharacterTable::of(G);
    for (int ca = 0; ca < G->class_count(); ++ca)
      for (int cb = 0; cb < G->class_count(); ++cb) {
        Cyclo sum = c(0);
        for (int i = 0; i < T->rows(); ++i)
          sum += T->irreducible(i).value(ca) * T->irreducible(i).value(cb).conjugate();
        const long centralizer = G->order() / G->conjugacy_class(ca).size();
        CHECK(sum == (ca == cb ? c(centralizer) : c(0)));
      }
  }
}

TEST_CASE("degree-one rows count the abelianization") {
  const auto linear_count = [](const GroupPtr& G) {
    const TablePtr T = CharacterTable::of(G);
    return std::count(T->degrees().begin(), T->degrees().end(), 1L);
  };
  CHECK(linear_count(s3()) == 2);
  CHECK(linear_count(q8()) == 4);
  CHECK(linear_count(a4()) == 3);
  CHECK(linear_count(s4()) == 2);
  CHECK(linear_count(cyclic_group(6)) == 6);
}

TEST_CASE("tables are cached per group") {
  const GroupPtr G = s3();
  CHECK(CharacterTable::of(G).get() == CharacterTable::of(G).get());
  CHECK(CharacterTable::of(G)->group().get() == G.get());
}

TEST_CASE("decompose recovers multiplicities") {
  const GroupPtr G = s3();
  const TablePtr T = CharacterTable::of(G);
  CHECK(decompose(T, regular_character(G)).multiplicities() == std::vector<long>{1, 1, 2});
  CHECK(decompose(T, trivial_character(G)).multiplicities() == std::vector<long>{1, 0, 0});
  CHECK(decompose(T, nontrivial_regular_part(G)).multiplicities() == std::vector<long>{0, 1, 2});

  const TablePtr T2 = CharacterTable::of(cyclic_group(2));
  CHECK(decompose(T2, ClassFunction(T2->group(), {c(4), c(0)})).multiplicities() ==
        std::vector<long>{2, 2});
}

TEST_CASE("decompose rejects non-characters") {
  const GroupPtr G = cyclic_group(2);
  const TablePtr T = CharacterTable::of(G);
  CHECK(error_kind([&] { (void)decompose(T, ClassFunction(G, {c(1), Cyclo(rat(1, 2))})); }) ==
        "NotACharacter");
  // trivial minus regular has a negative multiplicity
  CHECK(error_kind([&] {
          (void)decompose(T, trivial_character(G) - regular_character(G));
        }) == "NotACharacter");
  CHECK(error_kind([&] { (void)decompose(T, trivial_character(s3())); }) == "GroupMismatch");
}

TEST_CASE("module expressions render in the bookkeeping notation") {
  const TablePtr T3 = CharacterTable::of(cyclic_group(3));
  CHECK(ModuleExpr(T3, {2, 1, 1}).str() == "rho_R + 1");
  CHECK(ModuleExpr(T3, {1, 1, 1}).str() == "rho_R");
  CHECK(ModuleExpr(T3, {0, 1, 1}).str() == "rho_z");
  CHECK(ModuleExpr(T3, {0, 0, 0}).str() == "0");
  CHECK(ModuleExpr(T3, {0, 2, 0}).str() == "2*chi_2");
  CHECK(ModuleExpr(T3, {2, 1, 1}).dim() == 4);

  const TablePtr TS3 = CharacterTable::of(s3());
  CHECK(ModuleExpr::regular_plus_trivial(TS3, 2, 2).str() == "2*rho_R + 2*1");
  CHECK(ModuleExpr::regular_plus_trivial(TS3, 2, 2).multiplicities() ==
        std::vector<long>{4, 2, 4});
  CHECK(ModuleExpr(TS3, {1, 0, 1}).str() == "1 + chi_3");
  CHECK(ModuleExpr(TS3, {0, 0, 0}).dim() == 0);

  const TablePtr T1 = CharacterTable::of(cyclic_group(1));
  CHECK(ModuleExpr(T1, {5}).str() == "5*1");
  CHECK(ModuleExpr(T1, {1}).str() == "1");

  const TablePtr T2 = CharacterTable::of(cyclic_group(2));
  CHECK(ModuleExpr(T2, {0, 4}).str() == "4*rho_z");
  CHECK(ModuleExpr(T2, {3, 1}).str() == "rho_R + 2*1");
}

TEST_CASE("module expressions round-trip through their character") {
  const TablePtr T = CharacterTable::of(s3());
  const ModuleExpr m(T, {3, 0, 2});
  CHECK(decompose(T, m.character()) == m);
  CHECK(m.dim() == 7);
  CHECK(m.character().at_identity() == c(7));
}

TEST_CASE("negative multiplicities trip the guard") {
  const TablePtr T = CharacterTable::of(cyclic_group(2));
  CHECK(guard_trips([&] { (void)ModuleExpr(T, {1, -1}); }));
  CHECK(error_kind([&] { (void)ModuleExpr(T, {1, -1}); }) == "NegativeMultiplicity");
}

TEST_CASE("commutant dimension of copies of the regular representation") {
  CHECK(commutant_unitary_dim(CharacterTable::of(cyclic_group(2)), 1) == 2);
  CHECK(commutant_unitary_dim(CharacterTable::of(cyclic_group(2)), 3) == 18);
  CHECK(commutant_unitary_dim(CharacterTable::of(s3()), 2) == 24);
  CHECK(commutant_unitary_dim(CharacterTable::of(q8()), 4) == 128);
  for (long i = 1; i <= 4; ++i)
    CHECK(commutant_unitary_dim(CharacterTable::of(a4()), i) == i * i * 12);
}
