#include "covhom/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "covhom/error.hpp"

namespace covhom {

namespace {
constexpr long kMulTableCap = 2048;  // |G| up to this gets a dense product table
}

GroupPtr FiniteGroup::enumerate(std::vector<Perm> generators, long max_order) {
  if (generators.empty()) fail("ParseError", "a group needs at least one generator");
  if (max_order < 1 || max_order > kOrderCap) max_order = kOrderCap;
  const int degree = generators.front().degree();
  for (const auto& g : generators)
    if (g.degree() != degree)
      fail("DegreeMismatch", "generators act on different sets: degree " +
                                 std::to_string(degree) + " vs " + std::to_string(g.degree()));

  auto group = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  group->degree_ = degree;

  group->elements_.push_back(Perm(degree));
  group->index_.emplace(group->elements_[0], 0);
  for (std::size_t at = 0; at < group->elements_.size(); ++at) {
    for (const auto& g : generators) {
      const Perm next = group->elements_[at] * g;
      if (group->index_.emplace(next, static_cast<Elem>(group->elements_.size())).second) {
        group->elements_.push_back(next);
        if (static_cast<long>(group->elements_.size()) > max_order)
          fail("OrderLimitExceeded",
               "group enumeration exceeded " + std::to_string(max_order) + " elements");
      }
    }
  }

  const long n = group->order();
  group->generators_.reserve(generators.size());
  for (const auto& g : generators) group->generators_.push_back(group->index_.at(g));

  group->inverse_.resize(static_cast<std::size_t>(n));
  for (Elem x = 0; x < n; ++x)
    group->inverse_[static_cast<std::size_t>(x)] = group->index_.at(group->elements_[static_cast<std::size_t>(x)].inverse());

  if (n <= kMulTableCap) {
    group->mul_table_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        group->mul_table_[static_cast<std::size_t>(a) * n + b] =
            group->index_.at(group->elements_[static_cast<std::size_t>(a)] *
                             group->elements_[static_cast<std::size_t>(b)]);
  }

  // Conjugacy classes: orbits under conjugation by generators, seeded in
  // element order so the identity class comes first and reps are minimal.
  group->class_of_.assign(static_cast<std::size_t>(n), -1);
  for (Elem x = 0; x < n; ++x) {
    if (group->class_of_[static_cast<std::size_t>(x)] >= 0) continue;
    const int cls = static_cast<int>(group->classes_.size());
    std::vector<Elem> orbit{x};
    group->class_of_[static_cast<std::size_t>(x)] = cls;
    for (std::size_t at = 0; at < orbit.size(); ++at) {
      for (Elem g : group->generators_) {
        const Elem y = group->conjugate(g, orbit[at]);
        if (group->class_of_[static_cast<std::size_t>(y)] < 0) {
          group->class_of_[static_cast<std::size_t>(y)] = cls;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    group->classes_.push_back(ConjugacyClass{x, std::move(orbit)});
  }

  long expo = 1;
  for (const auto& c : group->classes_) expo = std::lcm(expo, group->elem_order(c.rep));
  group->exponent_ = expo;

  return group;
}

Elem FiniteGroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

Elem FiniteGroup::mul(Elem a, Elem b) const {
  if (!mul_table_.empty()) return mul_table_[static_cast<std::size_t>(a) * order() + b];
  return index_.at(elements_[static_cast<std::size_t>(a)] * elements_[static_cast<std::size_t>(b)]);
}

Elem FiniteGroup::power(Elem a, long k) const {
  const long n = elem_order(a);
  k %= n;
  if (k < 0) k += n;
  Elem acc = 0;
  Elem base = a;
  while (k > 0) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

int FiniteGroup::inverse_class(int c) const { return class_of(inv(conjugacy_class(c).rep)); }

int FiniteGroup::power_class(int c, long k) const { return class_of(power(conjugacy_class(c).rep, k)); }

bool FiniteGroup::is_abelian() const {
  for (Elem a : generators_)
    for (Elem b : generators_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<Elem> FiniteGroup::center() const {
  std::vector<Elem> out;
  for (Elem x = 0; x < order(); ++x) {
    bool central = true;
    for (Elem g : generators_)
      if (mul(x, g) != mul(g, x)) {
        central = false;
        break;
      }
    if (central) out.push_back(x);
  }
  return out;
}

bool Subgroup::contains(Elem x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

namespace {

std::vector<Elem> closure_elements(const FiniteGroup& G, const std::vector<Elem>& gens) {
  std::vector<char> in(static_cast<std::size_t>(G.order()), 0);
  std::vector<Elem> elems{0};
  in[0] = 1;
  for (std::size_t at = 0; at < elems.size(); ++at) {
    for (Elem g : gens) {
      const Elem y = G.mul(elems[at], g);
      if (!in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = 1;
        elems.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

Subgroup make_subgroup(const GroupPtr& group, std::vector<Elem> gens, std::vector<Elem> elems) {
  Subgroup H;
  H.parent = group;
  H.generators = std::move(gens);
  H.elements = std::move(elems);
  H.is_cyclic = false;
  for (Elem x : H.elements)
    if (group->elem_order(x) == H.order()) {
      H.is_cyclic = true;
      break;
    }
  H.is_central = true;
  const auto center = group->center();
  for (Elem x : H.elements)
    if (!std::binary_search(center.begin(), center.end(), x)) {
      H.is_central = false;
      break;
    }
  return H;
}

}  // namespace

Subgroup subgroup_closure(const GroupPtr& group, std::vector<Elem> generators) {
  for (Elem g : generators)
    if (g < 0 || g >= group->order())
      fail("NotASubgroup", "generator index out of range: " + std::to_string(g));
  auto elems = closure_elements(*group, generators);
  return make_subgroup(group, std::move(generators), std::move(elems));
}

Subgroup cyclic_subgroup(const GroupPtr& group, Elem g) {
  return subgroup_closure(group, {g});
}

std::vector<Subgroup> cyclic_subgroups_up_to_conjugacy(const GroupPtr& group) {
  // Distinct cyclic subgroups keyed by element list, then one representative
  // per conjugation orbit: the lexicographically smallest list.
  std::map<std::vector<Elem>, Elem> distinct;
  for (Elem x = 0; x < group->order(); ++x) {
    auto elems = closure_elements(*group, {x});
    distinct.try_emplace(std::move(elems), x);
  }
  std::set<std::vector<Elem>> seen;
  std::vector<Subgroup> out;
  for (const auto& [elems, gen] : distinct) {
    if (seen.count(elems)) continue;
    std::vector<Elem> key = elems;
    for (Elem g = 0; g < group->order(); ++g) {
      std::vector<Elem> conj;
      conj.reserve(elems.size());
      for (Elem x : elems) conj.push_back(group->conjugate(g, x));
      std::sort(conj.begin(), conj.end());
      seen.insert(conj);
      if (conj < key) key = std::move(conj);
    }
    Elem gen_of_key = gen;
    for (Elem x : key)
      if (group->elem_order(x) == static_cast<long>(key.size())) {
        gen_of_key = x;
        break;
      }
    out.push_back(make_subgroup(group, {gen_of_key}, key));
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  return out;
}

std::vector<Subgroup> all_subgroups(const GroupPtr& group) {
  // Saturate: extend each known subgroup by each element until nothing new
  // appears.  Fine for the small orders this library targets.
  std::map<std::vector<Elem>, std::vector<Elem>> found;  // elements -> generators
  found.emplace(std::vector<Elem>{0}, std::vector<Elem>{});
  std::vector<std::vector<Elem>> work{{0}};
  for (std::size_t at = 0; at < work.size(); ++at) {
    const auto current = work[at];
    const auto& gens = found.at(current);
    for (Elem x = 0; x < group->order(); ++x) {
      if (std::binary_search(current.begin(), current.end(), x)) continue;
      auto bigger_gens = gens;
      bigger_gens.push_back(x);
      auto elems = closure_elements(*group, bigger_gens);
      if (found.emplace(elems, bigger_gens).second) work.push_back(std::move(elems));
    }
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (const auto& [elems, gens] : found) out.push_back(make_subgroup(group, gens, elems));
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  return out;
}

GSet::GSet(GroupPtr group, const Subgroup& stabilizer) : group_(std::move(group)) {
  if (stabilizer.parent.get() != group_.get())
    fail("NotASubgroup", "stabilizer belongs to a different group");
  if (stabilizer.elements.empty() || stabilizer.elements[0] != 0)
    fail("NotASubgroup", "stabilizer does not contain the identity");
  for (Elem h : stabilizer.elements) {
    if (h < 0 || h >= group_->order())
      fail("NotASubgroup", "stabilizer element out of range");
    for (Elem g : stabilizer.generators)
      if (!stabilizer.contains(group_->mul(h, g)))
        fail("NotASubgroup", "stabilizer element list is not closed under products");
  }

  point_of_.assign(static_cast<std::size_t>(group_->order()), -1);
  for (Elem x = 0; x < group_->order(); ++x) {
    if (point_of_[static_cast<std::size_t>(x)] >= 0) continue;
    const int point = static_cast<int>(reps_.size());
    reps_.push_back(x);
    for (Elem h : stabilizer.elements)
      point_of_[static_cast<std::size_t>(group_->mul(x, h))] = point;
  }
}

int GSet::act(Elem g, int point) const {
  return point_of_[static_cast<std::size_t>(group_->mul(g, rep(point)))];
}

long GSet::fixed_points(Elem g) const {
  long count = 0;
  for (int p = 0; p < size(); ++p)
    if (act(g, p) == p) ++count;
  return count;
}

GSet coset_action(const GroupPtr& group, const Subgroup& stabilizer) {
  return GSet(group, stabilizer);
}

std::vector<Elem> commutator_product_set(const GroupPtr& group, int g) {
  if (g < 0) fail("ParseError", "negative genus in commutator product set");
  const long n = group->order();
  std::vector<char> comm(static_cast<std::size_t>(n), 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) comm[static_cast<std::size_t>(group->commutator(a, b))] = 1;

  std::vector<char> cur(static_cast<std::size_t>(n), 0);
  cur[0] = 1;
  for (int step = 0; step < g; ++step) {
    std::vector<char> next(static_cast<std::size_t>(n), 0);
    for (Elem x = 0; x < n; ++x) {
      if (!cur[static_cast<std::size_t>(x)]) continue;
      for (Elem c = 0; c < n; ++c)
        if (comm[static_cast<std::size_t>(c)]) next[static_cast<std::size_t>(group->mul(x, c))] = 1;
    }
    cur = std::move(next);
  }
  std::vector<Elem> out;
  for (Elem x = 0; x < n; ++x)
    if (cur[static_cast<std::size_t>(x)]) out.push_back(x);
  return out;
}

bool generate_group(const GroupPtr& group, const std::vector<Elem>& elems) {
  return static_cast<long>(closure_elements(*group, elems).size()) == group->order();
}

int abelian_rank(const GroupPtr& group) {
  if (!group->is_abelian()) fail("PreconditionViolated", "abelian_rank needs an abelian group");
  long n = group->order();
  int rank = 0;
  for (long p = 2; p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    long torsion = 0;
    for (Elem x = 0; x < group->order(); ++x)
      if (group->power(x, p) == 0) ++torsion;
    int dim = 0;
    while (torsion > 1) {
      torsion /= p;
      ++dim;
    }
    rank = std::max(rank, dim);
  }
  return rank;
}

GroupPtr cyclic_group(long n) {
  if (n < 1) fail("ParseError", "cyclic group order must be positive");
  if (n == 1) return FiniteGroup::enumerate({Perm(1)});
  // One cycle per maximal prime power factor.
  std::vector<int> cycle_lengths;
  long rest = n;
  for (long p = 2; rest > 1; ++p) {
    if (rest % p != 0) continue;
    long q = 1;
    while (rest % p == 0) {
      rest /= p;
      q *= p;
    }
    cycle_lengths.push_back(static_cast<int>(q));
  }
  int degree = 0;
  for (int len : cycle_lengths) degree += len;
  if (degree > Perm::kMaxDegree)
    fail("DegreeLimitExceeded", "cyclic group of order " + std::to_string(n) +
                                    " needs permutation degree " + std::to_string(degree));
  std::vector<std::uint8_t> img(static_cast<std::size_t>(degree));
  int base = 0;
  for (int len : cycle_lengths) {
    for (int i = 0; i < len; ++i)
      img[static_cast<std::size_t>(base + i)] = static_cast<std::uint8_t>(base + (i + 1) % len);
    base += len;
  }
  return FiniteGroup::enumerate({Perm::from_images(std::move(img))});
}

GroupPtr dihedral_group(int n) {
  if (n < 1) fail("ParseError", "dihedral parameter must be positive");
  if (n == 1) return cyclic_group(2);
  if (n == 2) {
    return FiniteGroup::enumerate(
        {Perm::parse_cycles("(1 2)", 4), Perm::parse_cycles("(3 4)", 4)});
  }
  if (n > Perm::kMaxDegree)
    fail("DegreeLimitExceeded", "dihedral group needs degree " + std::to_string(n));
  std::vector<std::uint8_t> rot(static_cast<std::size_t>(n));
  std::vector<std::uint8_t> flip(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    rot[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((i + 1) % n);
    flip[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((n - i) % n);
  }
  return FiniteGroup::enumerate({Perm::from_images(std::move(rot)), Perm::from_images(std::move(flip))});
}

}  // namespace covhom
