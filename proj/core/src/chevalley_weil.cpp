#include "covhom/chevalley_weil.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "covhom/error.hpp"

namespace covhom {

ClassFunction punctured_homology_character(const CoverSpec& spec) {
  validate(spec);
  const int m = spec.branch_count();
  if (m < 1)
    fail("PreconditionViolated",
         "punctured homology needs a branch point; use the closed homology character for m = 0");
  const long copies = spec.is_closed() ? 2L * spec.base_genus + m - 2 : m - 1L;
  ClassFunction chi = regular_character(spec.group).scaled(copies) + trivial_character(spec.group);
  check_internal(chi.at_identity() == Cyclo(rat(punctured_rank(spec))),
                 "punctured character dimension must match the free rank");
  return chi;
}

ClassFunction closed_homology_character(const CoverSpec& spec) {
  validate(spec);
  if (!spec.is_closed()) fail("PreconditionViolated", "closed homology needs a closed base");
  const long copies = 2L * spec.base_genus + spec.branch_count() - 2;
  ClassFunction chi = regular_character(spec.group).scaled(copies) + trivial_character(spec.group).scaled(2);
  for (const auto& fiber : branch_fibers(spec)) chi = chi - permutation_character(fiber.fiber);
  check_internal(chi.at_identity() == Cyclo(rat(closed_h1_dim(spec))),
                 "closed character dimension must match the surface-group count");
  try {
    decompose(CharacterTable::of(spec.group), chi);
  } catch (const Error& e) {
    if (e.kind() == std::string("NotACharacter"))
      fail_guard("NegativeMultiplicity", std::string("closed homology character fails to decompose: ") + e.what());
    throw;
  }
  return chi;
}

ModuleExpr closed_homology_module(const CoverSpec& spec) {
  return decompose(CharacterTable::of(spec.group), closed_homology_character(spec));
}

HodgeCharacterPair hodge_split(const CoverSpec& spec, Orientation orientation) {
  const ClassFunction closed = closed_homology_character(spec);
  const auto& G = *spec.group;
  const auto fibers = branch_fibers(spec);

  // Powers of each stabilizer generator, for reading off the local rotation
  // exponent at a fixed coset.
  std::vector<std::vector<Elem>> powers;
  for (const auto& fiber : fibers) {
    std::vector<Elem> p;
    for (long j = 0; j < fiber.ramification_order; ++j)
      p.push_back(G.power(spec.parabolic_images[static_cast<std::size_t>(fiber.index - 1)], j));
    powers.push_back(std::move(p));
  }

  const Cyclo one(rat(1));
  std::vector<Cyclo> values;
  for (int c = 0; c < G.class_count(); ++c) {
    const Elem h = G.conjugacy_class(c).rep;
    if (h == G.identity()) {
      values.push_back(Cyclo(rat(cover_genus(spec))));
      continue;
    }
    Cyclo sum;
    for (std::size_t i = 0; i < fibers.size(); ++i) {
      const GSet& fiber = fibers[i].fiber;
      const long ni = fibers[i].ramification_order;
      for (int p = 0; p < fiber.size(); ++p) {
        if (fiber.act(h, p) != p) continue;
        const Elem x = fiber.rep(p);
        const Elem local = G.mul(G.mul(G.inv(x), h), x);
        long a = -1;
        for (long j = 0; j < ni; ++j)
          if (powers[i][static_cast<std::size_t>(j)] == local) {
            a = j;
            break;
          }
        check_internal(a > 0, "fixed coset must conjugate h into a nontrivial stabilizer power");
        sum += one / (one - Cyclo::zeta(ni, a));
      }
    }
    values.push_back(one - sum);
  }

  ClassFunction chi01(spec.group, std::move(values));
  ClassFunction chi10 = chi01.conjugate();
  if (!(chi10 + chi01 == closed))
    fail_guard("HodgeSumMismatch", "chi10 + chi01 differs from the closed homology character");
  if (orientation == Orientation::Negative) std::swap(chi10, chi01);
  return HodgeCharacterPair{std::move(chi10), std::move(chi01), orientation};
}

bool hodge_is_real(const CoverSpec& spec) {
  const HodgeCharacterPair pair = hodge_split(spec);
  return pair.chi10 == pair.chi01;
}

PaDoubleCoverReport pa_double_cover_module(int genus, int n_branch) {
  if (genus < 0) fail("PreconditionViolated", "negative base genus");
  if (n_branch <= 0 || n_branch % 2 != 0)
    fail("OddBranchCount", "Z/2 branching needs a positive even number of branch points, got " +
                               std::to_string(n_branch));
  CoverSpec spec;
  spec.group = cyclic_group(2);
  spec.base_kind = BaseKind::Closed;
  spec.base_genus = genus;
  spec.hyperbolic_images.assign(static_cast<std::size_t>(genus), {0, 0});
  spec.parabolic_images.assign(static_cast<std::size_t>(n_branch), 1);
  validate(spec);

  PaDoubleCoverReport report{spec,
                             closed_homology_module(spec),
                             closed_h1_dim(spec),
                             "",
                             4L * genus + n_branch,
                             false};

  std::vector<std::string> terms;
  const auto push = [&](long k, const std::string& name) {
    if (k == 0) return;
    terms.push_back(k == 1 ? name : std::to_string(k) + "*" + name);
  };
  push(2L * genus, "rho_R");
  push(n_branch - 1L, "rho_z");
  terms.push_back("1");
  std::string expr = terms[0];
  for (std::size_t i = 1; i < terms.size(); ++i) expr += " + " + terms[i];
  report.claimed_expr = expr;

  const std::vector<long> claimed_mult{2L * genus + 1, 2L * genus + n_branch - 1};
  report.agree =
      report.computed.multiplicities() == claimed_mult && report.computed_dim == report.claimed_dim;
  return report;
}

TopologicalResult is_topological_perm_rep(const GroupPtr& group, const ClassFunction& chi) {
  if (group.get() != chi.group().get()) fail("GroupMismatch", "character lives on a different group");
  for (const Cyclo& v : chi.values())
    if (!v.is_integer() || v.integer_value() < 0)
      fail("NotAPermutationCharacter", "value " + v.str() + " is not a nonnegative integer");
  if (chi.at_identity().integer_value() < 1)
    fail("NotAPermutationCharacter", "a transitive action has at least one point");
  if (!(inner_product(chi, trivial_character(group)) == Cyclo(rat(1))))
    fail("NotAPermutationCharacter", "trivial multiplicity differs from 1, the action is not transitive");

  for (const Subgroup& H : cyclic_subgroups_up_to_conjugacy(group))
    if (permutation_character(coset_action(group, H)) == chi) return TopologicalResult{true, H};
  for (const Subgroup& H : all_subgroups(group))
    if (permutation_character(coset_action(group, H)) == chi) return TopologicalResult{false, std::nullopt};
  fail("NotAPermutationCharacter", "no coset action realizes the character");
}

std::optional<std::vector<std::pair<Elem, Elem>>> extend_to_closed_surface(
    const GroupPtr& group, const std::vector<Elem>& parabolic_images, int genus) {
  if (genus < 0) fail("PreconditionViolated", "negative genus");
  for (std::size_t i = 0; i < parabolic_images.size(); ++i) {
    const Elem l = parabolic_images[i];
    if (l < 0 || l >= group->order())
      fail("MalformedSpec", "parabolic image index " + std::to_string(l) + " out of range");
    if (l == group->identity())
      fail("TrivialBranch", "parabolic image l" + std::to_string(i + 1) + " is the identity");
  }
  Elem target = group->identity();
  for (Elem l : parabolic_images) target = group->mul(target, l);

  // Membership tables for products of at most j commutators, used to prune.
  std::vector<std::vector<char>> reachable;
  for (int j = 0; j <= genus; ++j) {
    std::vector<char> table(static_cast<std::size_t>(group->order()), 0);
    for (Elem x : commutator_product_set(group, j)) table[static_cast<std::size_t>(x)] = 1;
    reachable.push_back(std::move(table));
  }
  if (!reachable[static_cast<std::size_t>(genus)][static_cast<std::size_t>(target)]) return std::nullopt;

  std::vector<std::pair<Elem, Elem>> handles;
  std::set<std::tuple<int, Elem, std::vector<Elem>>> dead;

  const auto generated_with = [&](const std::vector<std::pair<Elem, Elem>>& hs) {
    std::vector<Elem> gens = parabolic_images;
    for (const auto& [a, b] : hs) {
      gens.push_back(a);
      gens.push_back(b);
    }
    return subgroup_closure(group, gens).elements;
  };

  const std::function<bool(int, Elem)> search = [&](int i, Elem prefix) -> bool {
    if (i == genus) {
      return prefix == target && static_cast<long>(generated_with(handles).size()) == group->order();
    }
    const std::vector<Elem> span = generated_with(handles);
    const auto key = std::make_tuple(i, prefix, span);
    if (dead.count(key)) return false;
    for (Elem a = 0; a < group->order(); ++a)
      for (Elem b = 0; b < group->order(); ++b) {
        const Elem next = group->mul(prefix, group->commutator(a, b));
        const Elem rest = group->mul(group->inv(next), target);
        if (!reachable[static_cast<std::size_t>(genus - i - 1)][static_cast<std::size_t>(rest)]) continue;
        handles.emplace_back(a, b);
        if (search(i + 1, next)) return true;
        handles.pop_back();
      }
    dead.insert(key);
    return false;
  };

  if (!search(0, group->identity())) return std::nullopt;
  return handles;
}

}  // namespace covhom
