#include "covhom/cell_complex.hpp"

#include <string>
#include <vector>

#include "covhom/chevalley_weil.hpp"
#include "common.hpp"
#include "doctest.h"

using namespace covhom;
using namespace covhom::testing;

namespace {

CoverSpec z11_torus() {
  const GroupPtr G = cyclic_group(11);
  const Elem s = G->generators()[0];
  CoverSpec spec;
  spec.group = G;
  spec.base_kind = BaseKind::Closed;
  spec.base_genus = 1;
  spec.hyperbolic_images = {{0, 0}};
  spec.parabolic_images = {G->power(s, 2), G->power(s, 4), G->power(s, 5)};
  return spec;
}

CoverSpec z2_pa(int genus, int n) {
  CoverSpec spec;
  spec.group = cyclic_group(2);
  spec.base_kind = BaseKind::Closed;
  spec.base_genus = genus;
  spec.hyperbolic_images.assign(static_cast<std::size_t>(genus), {0, 0});
  spec.parabolic_images.assign(static_cast<std::size_t>(n), 1);
  return spec;
}

CoverSpec s3_torus() {
  const GroupPtr G = s3();
  const auto el = [&](const char* t) { return G->index_of(Perm::parse_cycles(t).padded(3)); };
  CoverSpec spec;
  spec.group = G;
  spec.base_kind = BaseKind::Closed;
  spec.base_genus = 1;
  spec.hyperbolic_images = {{el("(1 3)"), el("(1 2)")}};
  spec.parabolic_images = {el("(1 2)"), el("(1 3)")};
  return spec;
}

bool is_zero(const RatMat& M) {
  for (const auto& row : M)
    for (const Rat& v : row)
      if (v != 0) return false;
  return true;
}

RatMat product(const RatMat& A, const RatMat& B) {
  const std::size_t n = A.size();
  const std::size_t k = B.size();
  const std::size_t m = k ? B[0].size() : 0;
  RatMat P(n, RatVec(m, Rat(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (A[i][j] == 0) continue;
      for (std::size_t l = 0; l < m; ++l) P[i][l] += A[i][j] * B[j][l];
    }
  return P;
}

}  // namespace

TEST_CASE("cell counts") {
  const CellComplex punctured = build_punctured_cover(z11_torus());
  CHECK(punctured.vertex_count() == 11);
  CHECK(punctured.slot_count() == 5);
  CHECK(punctured.edge_count() == 55);  // (2g+m)|G|
  CHECK(punctured.face_count() == 11);  // one relator per vertex
  CHECK_FALSE(punctured.filled());

  const CellComplex filled = fill_cover(punctured);
  CHECK(filled.face_count() == 11 + 3);
  CHECK(filled.filled());

  const CellComplex disk = build_punctured_cover(
      spec_of("group: (1 2);(1 2 3)\nbase: disk\nparabolic: l1=s1 l2=s2"));
  CHECK(disk.vertex_count() == 6);
  CHECK(disk.edge_count() == 12);
  CHECK(disk.face_count() == 0);
}

TEST_CASE("boundary of boundary vanishes") {
  for (const CoverSpec& spec : {z11_torus(), z2_pa(1, 2), s3_torus(), z2_pa(0, 6)}) {
    const CellComplex punctured = build_punctured_cover(spec);
    CHECK(is_zero(product(punctured.boundary1(), punctured.boundary2())));
    const CellComplex filled = fill_cover(punctured);
    CHECK(is_zero(product(filled.boundary1(), filled.boundary2())));
  }
}

TEST_CASE("the deck action commutes with the boundary maps") {
  const CellComplex complex = fill_cover(build_punctured_cover(s3_torus()));
  const RatMat d1 = complex.boundary1();
  const RatMat d2 = complex.boundary2();
  const GroupPtr G = complex.spec().group;
  for (Elem h = 0; h < G->order(); ++h) {
    const auto vm = complex.vertex_map(h);
    const auto em = complex.edge_map(h);
    const auto fm = complex.face_map(h);
    for (int v = 0; v < complex.vertex_count(); ++v)
      for (int e = 0; e < complex.edge_count(); ++e)
        CHECK(d1[static_cast<std::size_t>(vm[static_cast<std::size_t>(v)])]
                [static_cast<std::size_t>(em[static_cast<std::size_t>(e)])] ==
              d1[static_cast<std::size_t>(v)][static_cast<std::size_t>(e)]);
    for (int e = 0; e < complex.edge_count(); ++e)
      for (int f = 0; f < complex.face_count(); ++f)
        CHECK(d2[static_cast<std::size_t>(em[static_cast<std::size_t>(e)])]
                [static_cast<std::size_t>(fm[static_cast<std::size_t>(f)])] ==
              d2[static_cast<std::size_t>(e)][static_cast<std::size_t>(f)]);
  }
}

TEST_CASE("deck maps are group homomorphisms on cells") {
  const CellComplex complex = build_punctured_cover(z2_pa(1, 2));
  const GroupPtr G = complex.spec().group;
  for (Elem g = 0; g < G->order(); ++g)
    for (Elem h = 0; h < G->order(); ++h) {
      const auto eg = complex.edge_map(g);
      const auto eh = complex.edge_map(h);
      const auto egh = complex.edge_map(G->mul(g, h));
      for (int e = 0; e < complex.edge_count(); ++e)
        CHECK(egh[static_cast<std::size_t>(e)] ==
              eg[static_cast<std::size_t>(eh[static_cast<std::size_t>(e)])]);
    }
}

TEST_CASE("punctured Betti numbers match the rank formula") {
  CHECK(betti1(build_punctured_cover(z2_pa(1, 2))) == 5);
  CHECK(betti1(build_punctured_cover(z11_torus())) == 34);
  CHECK(betti1(build_punctured_cover(s3_torus())) == 13);
  for (const CoverSpec& spec : {z11_torus(), z2_pa(1, 2), s3_torus()})
    CHECK(betti1(build_punctured_cover(spec)) == punctured_rank(spec));
  CHECK(betti1(build_punctured_cover(
            spec_of("group: (1 2);(1 2 3)\nbase: disk\nparabolic: l1=s1 l2=s2"))) == 7);
}

TEST_CASE("filled Betti numbers match the closed dimension") {
  CHECK(betti1(fill_cover(build_punctured_cover(z2_pa(1, 2)))) == 4);
  CHECK(betti1(fill_cover(build_punctured_cover(z11_torus()))) == 32);
  for (const CoverSpec& spec : {z11_torus(), z2_pa(1, 2), s3_torus(), z2_pa(0, 6)})
    CHECK(betti1(fill_cover(build_punctured_cover(spec))) == closed_h1_dim(spec));
}

TEST_CASE("the closed base with no branch points is already closed") {
  // degree-1 cover of the torus: one vertex, two loops, one square
  CoverSpec self;
  self.group = cyclic_group(1);
  self.base_kind = BaseKind::Closed;
  self.base_genus = 1;
  self.hyperbolic_images = {{0, 0}};
  const CellComplex torus = build_punctured_cover(self);
  CHECK(torus.vertex_count() == 1);
  CHECK(torus.edge_count() == 2);
  CHECK(torus.face_count() == 1);
  CHECK(betti1(torus) == 2);
  CHECK(h1_character(torus).values() == std::vector<Cyclo>{Cyclo(2)});

  // unramified double cover of the torus: again a torus, trivial deck action on H_1
  CoverSpec unram;
  unram.group = cyclic_group(2);
  unram.base_kind = BaseKind::Closed;
  unram.base_genus = 1;
  unram.hyperbolic_images = {{1, 0}};
  const CellComplex cover = build_punctured_cover(unram);
  CHECK(betti1(cover) == 2);
  CHECK(h1_character(cover).values() == std::vector<Cyclo>{Cyclo(2), Cyclo(2)});
}

TEST_CASE("frozen homology characters") {
  CHECK(h1_character(build_punctured_cover(z2_pa(1, 2))).values() ==
        std::vector<Cyclo>{Cyclo(5), Cyclo(1)});
  CHECK(h1_character(fill_cover(build_punctured_cover(z2_pa(1, 2)))).values() ==
        std::vector<Cyclo>{Cyclo(4), Cyclo(0)});

  const ClassFunction chi = h1_character(fill_cover(build_punctured_cover(z11_torus())));
  CHECK(chi.at_identity() == Cyclo(32));
  for (int c = 1; c < chi.size(); ++c) CHECK(chi.value(c) == Cyclo(-1));

  const ClassFunction disk = h1_character(build_punctured_cover(
      spec_of("group: (1 2);(1 2 3)\nbase: disk\nparabolic: l1=s1 l2=s2")));
  CHECK(disk.values() == std::vector<Cyclo>{Cyclo(7), Cyclo(1), Cyclo(1)});
}

TEST_CASE("oracle agrees with the closed formula on nonabelian input") {
  const CoverSpec spec = s3_torus();
  CHECK(h1_character(fill_cover(build_punctured_cover(spec))) == closed_homology_character(spec));
}

TEST_CASE("filling is for closed bases, once") {
  const CellComplex disk = build_punctured_cover(
      spec_of("group: (1 2);(1 2 3)\nbase: disk\nparabolic: l1=s1 l2=s2"));
  CHECK(error_kind([&] { (void)fill_cover(disk); }) == "PreconditionViolated");
  const CellComplex filled = fill_cover(build_punctured_cover(z2_pa(1, 2)));
  CHECK(error_kind([&] { (void)fill_cover(filled); }) == "PreconditionViolated");
}

TEST_CASE("boundary triplet dump") {
  const CellComplex complex = build_punctured_cover(z2_pa(1, 2));
  const std::string dump = boundary_triplets(complex);
  CHECK(dump.find("d1 ") != std::string::npos);
  CHECK(dump.find("d2 ") != std::string::npos);
  // deterministic
  CHECK(dump == boundary_triplets(complex));
}
