#include "covhom/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "common.hpp"
#include "doctest.h"

using namespace covhom;
using namespace covhom::testing;

TEST_CASE("cycle notation round-trips") {
  for (const char* text : {"()", "(1 2)", "(1 3)(2 5 4)", "(1 2 3 4 5 6 7)"}) {
    const Perm p = Perm::parse_cycles(text);
    CHECK(p.cycles() == text);
  }
  CHECK(Perm::parse_cycles("(2 1)").cycles() == "(1 2)");
  CHECK(Perm::parse_cycles("()").degree() == 1);
}

TEST_CASE("permutation order and padding") {
  CHECK(Perm::parse_cycles("(1 2)(3 4 5)").order() == 6);
  CHECK(Perm::parse_cycles("()").order() == 1);
  const Perm p = Perm::parse_cycles("(1 2)");
  CHECK(p.padded(5).degree() == 5);
  CHECK(p.padded(5)(4) == 4);
  CHECK(error_kind([&] { (void)p.padded(1); }) == "DegreeLimitExceeded");
}

TEST_CASE("cycle parser rejects malformed input") {
  CHECK(error_kind([] { (void)Perm::parse_cycles("(1 1)"); }) == "ParseError");
  CHECK(error_kind([] { (void)Perm::parse_cycles("(1)"); }) == "ParseError");
  CHECK(error_kind([] { (void)Perm::parse_cycles("(0 2)"); }) == "ParseError");
  CHECK(error_kind([] { (void)Perm::parse_cycles("1 2"); }) == "ParseError");
  CHECK(error_kind([] { (void)Perm::parse_cycles("(65 66)"); }) == "DegreeLimitExceeded");
}

TEST_CASE("enumeration closes the generated group") {
  const GroupPtr G = s3();
  CHECK(G->order() == 6);
  CHECK(G->degree() == 3);
  CHECK(G->exponent() == 6);
  CHECK_FALSE(G->is_abelian());
  CHECK(G->identity() == 0);
  CHECK(G->perm(0).cycles() == "()");

  const GroupPtr H = q8();
  CHECK(H->order() == 8);
  CHECK(H->exponent() == 4);
  CHECK(s4()->order() == 24);
  CHECK(a4()->order() == 12);
  CHECK(v4()->is_abelian());
}

TEST_CASE("order cap aborts runaway enumeration") {
  const auto gens = std::vector<Perm>{Perm::parse_cycles("(1 2 3 4 5)").padded(5),
                                      Perm::parse_cycles("(1 2)").padded(5)};
  CHECK(error_kind([&] { (void)FiniteGroup::enumerate(gens, 10); }) == "OrderLimitExceeded");
  CHECK(FiniteGroup::enumerate(gens)->order() == 120);
}

TEST_CASE("group operations are consistent") {
  const GroupPtr G = s3();
  for (Elem a = 0; a < G->order(); ++a) {
    CHECK(G->mul(a, G->inv(a)) == G->identity());
    CHECK(G->mul(G->identity(), a) == a);
    CHECK(G->power(a, 6) == G->identity());
    CHECK(G->power(a, -1) == G->inv(a));
    CHECK(G->elem_order(a) == G->perm(a).order());
    for (Elem b = 0; b < G->order(); ++b) {
      CHECK(G->index_of(G->perm(a) * G->perm(b)) == G->mul(a, b));
      CHECK(G->commutator(a, b) ==
            G->mul(G->mul(a, b), G->mul(G->inv(a), G->inv(b))));
      CHECK(G->conjugate(a, b) == G->mul(G->mul(a, b), G->inv(a)));
    }
  }
  CHECK(G->index_of(Perm::parse_cycles("(1 2)").padded(3)) >= 0);
  CHECK(a4()->index_of(Perm::parse_cycles("(1 2)").padded(4)) == -1);
}

TEST_CASE("conjugacy classes partition the group") {
  for (const GroupPtr& G : {s3(), q8(), a4(), cyclic_group(6), dihedral_group(4)}) {
    long total = 0;
    std::set<Elem> seen;
    for (const ConjugacyClass& cls : G->conjugacy_classes()) {
      total += cls.size();
      CHECK(G->order() % cls.size() == 0);
      CHECK(std::is_sorted(cls.members.begin(), cls.members.end()));
      CHECK(cls.rep == cls.members.front());
      for (Elem x : cls.members) {
        CHECK(seen.insert(x).second);
        CHECK(G->class_of(x) == G->class_of(cls.rep));
      }
    }
    CHECK(total == G->order());
    for (int c = 0; c < G->class_count(); ++c) {
      CHECK(G->inverse_class(G->inverse_class(c)) == c);
      CHECK(G->power_class(c, 1) == c);
      CHECK(G->class_of(G->inv(G->conjugacy_class(c).rep)) == G->inverse_class(c));
    }
  }
}

TEST_CASE("known class data") {
  const GroupPtr G = s3();
  REQUIRE(G->class_count() == 3);
  CHECK(G->conjugacy_class(0).size() == 1);
  CHECK(G->conjugacy_class(1).size() == 3);
  CHECK(G->conjugacy_class(2).size() == 2);

  CHECK(q8()->class_count() == 5);
  CHECK(a4()->class_count() == 4);
  CHECK(s4()->class_count() == 5);
  CHECK(dihedral_group(4)->class_count() == 5);
  CHECK(cyclic_group(7)->class_count() == 7);
}

TEST_CASE("power maps on classes") {
  const GroupPtr G = cyclic_group(5);
  const Elem s = G->generators()[0];
  CHECK(G->power_class(G->class_of(s), 3) == G->class_of(G->power(s, 3)));
  CHECK(G->inverse_class(G->class_of(s)) == G->class_of(G->power(s, 4)));
}

TEST_CASE("centers") {
  CHECK(s3()->center().size() == 1);
  CHECK(q8()->center().size() == 2);
  CHECK(v4()->center().size() == 4);
  const GroupPtr G = q8();
  for (Elem z : G->center())
    for (Elem x = 0; x < G->order(); ++x) CHECK(G->mul(z, x) == G->mul(x, z));
}

TEST_CASE("subgroup closure") {
  const GroupPtr G = s3();
  const Subgroup A3 = subgroup_closure(G, {G->index_of(Perm::parse_cycles("(1 2 3)").padded(3))});
  CHECK(A3.order() == 3);
  CHECK(A3.is_cyclic);
  CHECK_FALSE(A3.is_central);
  CHECK(subgroup_closure(G, {}).order() == 1);
  CHECK(subgroup_closure(G, {0}).is_central);
  CHECK(error_kind([&] { (void)subgroup_closure(G, {99}); }) == "NotASubgroup");
}

TEST_CASE("subgroup inventories") {
  CHECK(all_subgroups(s3()).size() == 6);
  CHECK(all_subgroups(v4()).size() == 5);
  CHECK(all_subgroups(q8()).size() == 6);
  const auto reps = cyclic_subgroups_up_to_conjugacy(s3());
  REQUIRE(reps.size() == 3);
  CHECK(reps[0].order() == 1);
  CHECK(reps[1].order() == 2);
  CHECK(reps[2].order() == 3);
  for (const Subgroup& H : all_subgroups(q8())) CHECK(q8()->order() % H.order() == 0);
}

TEST_CASE("coset actions") {
  const GroupPtr G = s3();
  const GSet regular = coset_action(G, subgroup_closure(G, {}));
  CHECK(regular.size() == 6);
  CHECK(regular.fixed_points(G->identity()) == 6);
  for (Elem g = 1; g < G->order(); ++g) CHECK(regular.fixed_points(g) == 0);

  const Subgroup H = subgroup_closure(G, {G->index_of(Perm::parse_cycles("(1 2)").padded(3))});
  const GSet pts = coset_action(G, H);
  CHECK(pts.size() == 3);
  for (Elem g = 0; g < G->order(); ++g)
    for (int p = 0; p < pts.size(); ++p) {
      CHECK(pts.act(G->identity(), p) == p);
      CHECK(pts.act(G->inv(g), pts.act(g, p)) == p);
    }
}

TEST_CASE("commutator products grow monotonically inside the derived subgroup") {
  const GroupPtr G = s3();
  CHECK(commutator_product_set(G, 0) == std::vector<Elem>{0});
  const auto one = commutator_product_set(G, 1);
  CHECK(one.size() == 3);  // A3
  std::vector<Elem> derived_gens;
  for (Elem a = 0; a < G->order(); ++a)
    for (Elem b = 0; b < G->order(); ++b) derived_gens.push_back(G->commutator(a, b));
  const Subgroup derived = subgroup_closure(G, derived_gens);
  for (int g = 0; g + 1 <= 3; ++g) {
    const auto small = commutator_product_set(G, g);
    const auto big = commutator_product_set(G, g + 1);
    CHECK(std::includes(big.begin(), big.end(), small.begin(), small.end()));
    for (Elem x : big) CHECK(derived.contains(x));
  }
  CHECK(commutator_product_set(s4(), 2).size() == 12);  // all of A4 by two commutators
}

TEST_CASE("generation tests") {
  const GroupPtr G = s3();
  CHECK(generate_group(G, {G->generators()[0], G->generators()[1]}));
  CHECK_FALSE(generate_group(G, {G->index_of(Perm::parse_cycles("(1 2 3)").padded(3))}));
  CHECK_FALSE(generate_group(G, {}));
  CHECK(generate_group(cyclic_group(1), {}));
}

TEST_CASE("abelian rank") {
  CHECK(abelian_rank(cyclic_group(12)) == 1);
  CHECK(abelian_rank(v4()) == 2);
  CHECK(abelian_rank(group_of("(1 2);(3 4);(5 6)")) == 3);
  CHECK(abelian_rank(group_of("(1 2);(3 4 5 6)")) == 2);
  CHECK(abelian_rank(cyclic_group(1)) == 0);
  CHECK(error_kind([] { (void)abelian_rank(s3()); }) == "PreconditionViolated");
}

TEST_CASE("cyclic groups use the minimal permutation degree") {
  CHECK(cyclic_group(6)->degree() == 5);
  CHECK(cyclic_group(8)->degree() == 8);
  CHECK(cyclic_group(12)->degree() == 7);
  CHECK(cyclic_group(12)->order() == 12);
  CHECK(cyclic_group(12)->exponent() == 12);
  CHECK(cyclic_group(1)->order() == 1);
  CHECK(error_kind([] { (void)cyclic_group(67); }) == "DegreeLimitExceeded");
}

TEST_CASE("dihedral groups") {
  CHECK(dihedral_group(1)->order() == 2);
  CHECK(dihedral_group(4)->order() == 8);
  CHECK(dihedral_group(6)->order() == 12);
  CHECK(dihedral_group(6)->class_count() == 6);
  CHECK_FALSE(dihedral_group(3)->is_abelian());
  CHECK(dihedral_group(2)->is_abelian());
}
