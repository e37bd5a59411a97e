#include "covhom/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "covhom/error.hpp"

namespace covhom {

Perm::Perm(int degree) {
  if (degree < 1 || degree > kMaxDegree)
    fail("DegreeLimitExceeded", "permutation degree must be in [1, 64], got " + std::to_string(degree));
  img_.resize(static_cast<std::size_t>(degree));
  std::iota(img_.begin(), img_.end(), std::uint8_t{0});
}

Perm Perm::from_images(std::vector<std::uint8_t> images) {
  const auto n = images.size();
  if (n < 1 || n > static_cast<std::size_t>(kMaxDegree))
    fail("DegreeLimitExceeded", "permutation degree must be in [1, 64], got " + std::to_string(n));
  std::vector<bool> seen(n, false);
  for (auto v : images) {
    if (v >= n || seen[v]) fail("ParseError", "image list is not a permutation");
    seen[v] = true;
  }
  Perm p;
  p.img_ = std::move(images);
  return p;
}

Perm Perm::operator*(const Perm& rhs) const {
  if (degree() != rhs.degree())
    fail("DegreeMismatch", "product of permutations of degree " + std::to_string(degree()) +
                               " and " + std::to_string(rhs.degree()));
  Perm out;
  out.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) out.img_[i] = img_[rhs.img_[i]];
  return out;
}

Perm Perm::inverse() const {
  Perm out;
  out.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) out.img_[img_[i]] = static_cast<std::uint8_t>(i);
  return out;
}

Perm Perm::power(long k) const {
  const long n = order();
  k %= n;
  if (k < 0) k += n;
  Perm acc(degree());
  Perm base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

long Perm::order() const {
  std::vector<bool> seen(img_.size(), false);
  long ord = 1;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    long len = 0;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = img_[j];
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

Perm Perm::padded(int degree) const {
  if (degree < this->degree() || degree > kMaxDegree)
    fail("DegreeLimitExceeded", "cannot pad degree " + std::to_string(this->degree()) + " to " +
                                    std::to_string(degree));
  Perm out(degree);
  std::copy(img_.begin(), img_.end(), out.img_.begin());
  return out;
}

std::string Perm::cycles() const {
  std::string out;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = img_[j];
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

Perm Perm::parse_cycles(const std::string& text, int min_degree) {
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  const auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_ws();
  if (pos >= text.size()) fail("ParseError", "empty permutation text");
  int max_point = 0;
  while (pos < text.size()) {
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] != '(') fail("ParseError", "expected '(' in cycle notation: " + text);
    ++pos;
    std::vector<int> cyc;
    for (;;) {
      skip_ws();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) fail("ParseError", "expected point number in cycle notation: " + text);
      int point = std::stoi(text.substr(start, pos - start));
      if (point < 1) fail("ParseError", "cycle points are 1-based: " + text);
      if (point > kMaxDegree)
        fail("DegreeLimitExceeded", "point " + std::to_string(point) + " exceeds the degree cap 64");
      cyc.push_back(point);
      max_point = std::max(max_point, point);
    }
    if (cyc.size() == 1) fail("ParseError", "singleton cycle in: " + text);
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
  }
  skip_ws();
  if (pos != text.size()) fail("ParseError", "trailing characters in cycle notation: " + text);

  const int degree = std::max(std::max(max_point, 1), min_degree);
  Perm p(degree);
  std::vector<bool> moved(static_cast<std::size_t>(degree), false);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const int from = cyc[i] - 1;
      const int to = cyc[(i + 1) % cyc.size()] - 1;
      if (moved[static_cast<std::size_t>(from)])
        fail("ParseError", "point " + std::to_string(from + 1) + " appears twice in: " + text);
      moved[static_cast<std::size_t>(from)] = true;
      p.img_[static_cast<std::size_t>(from)] = static_cast<std::uint8_t>(to);
    }
  }
  return p;
}

}  // namespace covhom
