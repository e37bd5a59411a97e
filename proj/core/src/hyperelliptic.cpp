#include "covhom/hyperelliptic.hpp"

#include <algorithm>

#include "covhom/error.hpp"

namespace covhom {

namespace {

// Exponent of each class representative with respect to the canonical
// generator of a cyclic group, in class order.
std::vector<long> class_exponents(const GroupPtr& cyclic) {
  const Elem gen = cyclic->generators().at(0);
  std::vector<long> exp_of(static_cast<std::size_t>(cyclic->order()), -1);
  Elem cur = cyclic->identity();
  for (long k = 0; k < cyclic->order(); ++k) {
    exp_of[static_cast<std::size_t>(cur)] = k;
    cur = cyclic->mul(cur, gen);
  }
  std::vector<long> out;
  for (int c = 0; c < cyclic->class_count(); ++c) {
    const long k = exp_of[static_cast<std::size_t>(cyclic->conjugacy_class(c).rep)];
    check_internal(k >= 0, "cyclic generator must reach every element");
    out.push_back(k);
  }
  return out;
}

ClassFunction exponent_sum_character(const HyperellipticCyclicCover& cover, long lo, long hi) {
  const GroupPtr G = cover.galois_group();
  const long m = cover.cyclic_degree;
  const std::vector<long> exps = class_exponents(G);
  std::vector<Cyclo> values;
  for (long k : exps) {
    Cyclo sum;
    for (long l = lo; l <= hi; ++l) sum += Cyclo::zeta(m, (l + 1) * k);
    values.push_back(std::move(sum));
  }
  return ClassFunction(G, std::move(values));
}

bool is_cyclic_of_full_order(const GroupPtr& Q) {
  for (Elem x = 0; x < Q->order(); ++x)
    if (Q->elem_order(x) == Q->order()) return true;
  return false;
}

bool is_dihedral(const GroupPtr& Q) {
  const long q = Q->order();
  if (q % 2 != 0) return false;
  for (Elem r = 0; r < q; ++r) {
    if (Q->power(r, q / 2) != Q->identity()) continue;
    const Subgroup rot = cyclic_subgroup(Q, r);
    if (rot.order() != q / 2) continue;
    for (Elem s = 0; s < q; ++s) {
      if (Q->mul(s, s) != Q->identity() || rot.contains(s)) continue;
      const Elem rs = Q->mul(r, s);
      if (Q->mul(rs, rs) == Q->identity()) return true;
    }
  }
  return false;
}

// Von Dyck presentation check: orders (p, 2, q) on a generating pair force
// the triangle-group quotient, which the order pins down.
bool matches_triangle(const GroupPtr& Q, long target_order, long a_pow, long ab_pow) {
  if (Q->order() != target_order) return false;
  for (Elem a = 0; a < Q->order(); ++a) {
    if (Q->power(a, a_pow) != Q->identity()) continue;
    for (Elem b = 0; b < Q->order(); ++b) {
      if (Q->mul(b, b) != Q->identity()) continue;
      if (Q->power(Q->mul(a, b), ab_pow) != Q->identity()) continue;
      if (generate_group(Q, {a, b})) return true;
    }
  }
  return false;
}

// The image of G acting on the cosets of a central subgroup of order <= 2.
GroupPtr central_quotient(const GroupPtr& G, Elem z) {
  if (z == G->identity()) return G;
  const Subgroup Z = cyclic_subgroup(G, z);
  const GSet cosets = coset_action(G, Z);
  std::vector<Perm> images;
  for (Elem gen : G->generators()) {
    std::vector<std::uint8_t> map(static_cast<std::size_t>(cosets.size()));
    for (int p = 0; p < cosets.size(); ++p)
      map[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>(cosets.act(gen, p));
    images.push_back(Perm::from_images(std::move(map)));
  }
  return FiniteGroup::enumerate(std::move(images));
}

std::string pgl2_family(const GroupPtr& Q) {
  if (is_cyclic_of_full_order(Q)) return "cyclic of order " + std::to_string(Q->order());
  if (is_dihedral(Q)) return "dihedral of order " + std::to_string(Q->order());
  if (matches_triangle(Q, 12, 3, 3)) return "A4";
  if (matches_triangle(Q, 24, 4, 3)) return "S4";
  if (matches_triangle(Q, 60, 5, 3)) return "A5";
  return "";
}

}  // namespace

HyperellipticCyclicCover make_hyperelliptic_cover(int base_genus, long cyclic_degree,
                                                  std::vector<Rat> coefficients) {
  if (base_genus < 2) fail("MalformedCurve", "hyperelliptic base needs genus >= 2");
  if (cyclic_degree < 1) fail("MalformedCurve", "cyclic degree must be positive");
  const std::size_t count = 2 * static_cast<std::size_t>(base_genus) + 3;
  if (coefficients.empty()) coefficients.assign(count, Rat(1));
  if (coefficients.size() != count)
    fail("MalformedCurve", "the curve y^2 = sum a_i x^i needs coefficients a_0..a_" +
                               std::to_string(2 * base_genus + 2) + ", got " +
                               std::to_string(coefficients.size()));
  if (coefficients[0] == 0)
    fail("MalformedCurve", "a_0 = 0: the branch points (0, +-sqrt(a_0)) degenerate");
  return HyperellipticCyclicCover{base_genus, cyclic_degree, std::move(coefficients),
                                  cyclic_group(cyclic_degree)};
}

std::vector<DifferentialBasisElement> differential_basis(const HyperellipticCyclicCover& cover) {
  const long m = cover.cyclic_degree;
  std::vector<DifferentialBasisElement> basis;
  for (long l = 0; l < m * cover.base_genus; ++l) {
    std::string symbol = l == 0    ? std::string("dx'/y")
                         : l == 1 ? std::string("x' dx'/y")
                                  : "x'^" + std::to_string(l) + " dx'/y";
    basis.push_back(DifferentialBasisElement{l, Cyclo::zeta(m, l + 1), std::move(symbol)});
  }
  return basis;
}

ClassFunction h0K_character(const HyperellipticCyclicCover& cover) {
  const ClassFunction chi =
      exponent_sum_character(cover, 0, cover.cyclic_degree * cover.base_genus - 1);
  check_internal(chi.at_identity() == Cyclo(rat(cover.cyclic_degree * cover.base_genus)),
                 "h0(K) must have dimension mg");
  return chi;
}

KminusBData h0KminusB_character(const HyperellipticCyclicCover& cover) {
  const long m = cover.cyclic_degree;
  const long g = cover.base_genus;
  ClassFunction chi = exponent_sum_character(cover, m - 1, m * g - 1);
  const long dim = m * (g - 1) + 1;
  check_internal(chi.at_identity() == Cyclo(rat(dim)), "h0(K-B) must have dimension m(g-1)+1");
  return KminusBData{std::move(chi), dim, 2 * m * (g - 1)};
}

ObstructionReport hyperelliptic_obstruction(const GroupPtr& group) {
  if (group->is_abelian()) {
    const int rank = abelian_rank(group);
    if (rank >= 6)
      return {ObstructionVerdict::Obstructed,
              "abelian of rank " + std::to_string(rank) + " >= 6; GL2(C) has no such subgroup"};
  }
  if (group->order() > 120)
    return {ObstructionVerdict::Unknown,
            "order " + std::to_string(group->order()) +
                " exceeds the exact test range and the abelian rank criterion does not fire"};

  std::vector<Elem> centers{group->identity()};
  for (Elem z : group->center())
    if (group->elem_order(z) == 2) centers.push_back(z);
  for (Elem z : centers) {
    const GroupPtr Q = central_quotient(group, z);
    const std::string family = pgl2_family(Q);
    if (family.empty()) continue;
    const std::string how = z == group->identity()
                                ? "G itself is " + family
                                : "G modulo a central involution is " + family;
    return {ObstructionVerdict::NotObstructed, how + ", a finite subgroup of PGL2(C)"};
  }
  return {ObstructionVerdict::Obstructed,
          "no quotient by a central subgroup of order <= 2 is cyclic, dihedral, A4, S4 or A5"};
}

std::string verdict_name(ObstructionVerdict verdict) {
  switch (verdict) {
    case ObstructionVerdict::Obstructed: return "Obstructed";
    case ObstructionVerdict::NotObstructed: return "NotObstructed";
    default: return "Unknown";
  }
}

}  // namespace covhom
