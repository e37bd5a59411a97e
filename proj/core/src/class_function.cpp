#include "covhom/class_function.hpp"

#include "covhom/error.hpp"

namespace covhom {

ClassFunction::ClassFunction(GroupPtr group, std::vector<Cyclo> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != group_->class_count())
    fail_guard("InternalCheckFailed", "class function length does not match the class count");
}

ClassFunction ClassFunction::operator+(const ClassFunction& rhs) const {
  require_same_group(*this, rhs);
  auto vals = values_;
  for (std::size_t i = 0; i < vals.size(); ++i) vals[i] += rhs.values_[i];
  return ClassFunction(group_, std::move(vals));
}

ClassFunction ClassFunction::operator-(const ClassFunction& rhs) const {
  require_same_group(*this, rhs);
  auto vals = values_;
  for (std::size_t i = 0; i < vals.size(); ++i) vals[i] -= rhs.values_[i];
  return ClassFunction(group_, std::move(vals));
}

ClassFunction ClassFunction::scaled(long k) const {
  auto vals = values_;
  const Cyclo factor{rat(k)};
  for (auto& v : vals) v *= factor;
  return ClassFunction(group_, std::move(vals));
}

ClassFunction ClassFunction::conjugate() const {
  auto vals = values_;
  for (auto& v : vals) v = v.conjugate();
  return ClassFunction(group_, std::move(vals));
}

bool ClassFunction::operator==(const ClassFunction& rhs) const {
  if (group_.get() != rhs.group_.get()) return false;
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] != rhs.values_[i]) return false;
  return true;
}

bool ClassFunction::is_real() const {
  for (const auto& v : values_)
    if (!v.is_real()) return false;
  return true;
}

void require_same_group(const ClassFunction& a, const ClassFunction& b) {
  if (a.group().get() != b.group().get())
    fail("GroupMismatch", "class functions live on different groups");
}

Cyclo inner_product(const ClassFunction& a, const ClassFunction& b) {
  require_same_group(a, b);
  const auto& G = *a.group();
  Cyclo sum;
  for (int c = 0; c < G.class_count(); ++c) {
    const Cyclo term = a.value(c) * b.value(c).conjugate();
    sum += Cyclo(rat(G.conjugacy_class(c).size())) * term;
  }
  return sum * Cyclo(rat(1, G.order()));
}

ClassFunction trivial_character(const GroupPtr& group) {
  return ClassFunction(group, std::vector<Cyclo>(static_cast<std::size_t>(group->class_count()),
                                                 Cyclo(rat(1))));
}

ClassFunction regular_character(const GroupPtr& group) {
  std::vector<Cyclo> vals(static_cast<std::size_t>(group->class_count()), Cyclo());
  vals[0] = Cyclo(rat(group->order()));
  return ClassFunction(group, std::move(vals));
}

ClassFunction nontrivial_regular_part(const GroupPtr& group) {
  return regular_character(group) - trivial_character(group);
}

ClassFunction permutation_character(const GSet& action) {
  const auto& group = action.group();
  std::vector<Cyclo> vals;
  vals.reserve(static_cast<std::size_t>(group->class_count()));
  for (const auto& cls : group->conjugacy_classes())
    vals.emplace_back(rat(action.fixed_points(cls.rep)));
  return ClassFunction(group, std::move(vals));
}

}  // namespace covhom
