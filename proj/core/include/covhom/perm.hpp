#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace covhom {

// Permutation of {0, ..., degree-1}.  Text form is 1-based disjoint cycle
// notation, e.g. "(1 2)(3 4 5)"; the identity prints as "()".
class Perm {
public:
  static constexpr int kMaxDegree = 64;

  Perm() = default;
  explicit Perm(int degree);  // identity
  static Perm from_images(std::vector<std::uint8_t> images);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }

  // (p * q)(i) = p(q(i)); products of group words multiply left to right.
  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  Perm power(long k) const;

  bool operator==(const Perm& rhs) const { return img_ == rhs.img_; }
  bool operator!=(const Perm& rhs) const { return img_ != rhs.img_; }
  bool operator<(const Perm& rhs) const { return img_ < rhs.img_; }

  bool is_identity() const;
  long order() const;

  // Identity-padded copy acting on a larger set.
  Perm padded(int degree) const;

  std::string cycles() const;
  static Perm parse_cycles(const std::string& text, int min_degree = 1);

  const std::vector<std::uint8_t>& images() const { return img_; }

private:
  std::vector<std::uint8_t> img_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::size_t h = 1469598103934665603ull;
    for (auto v : p.images()) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace covhom
