#include "covhom/cyclo.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "covhom/error.hpp"

namespace covhom {

long euler_phi(long e) {
  long result = e;
  long rest = e;
  for (long p = 2; rest > 1; ++p) {
    if (rest % p != 0) continue;
    result -= result / p;
    while (rest % p == 0) rest /= p;
  }
  return result;
}

namespace {

// Coefficients of the cyclotomic polynomial Phi_e, ascending degree.
// Computed as (x^e - 1) / prod of the Phi_d over proper divisors d.
std::vector<long long> cyclotomic_poly(long e, std::map<long, std::vector<long long>>& memo) {
  auto it = memo.find(e);
  if (it != memo.end()) return it->second;
  std::vector<long long> poly(static_cast<std::size_t>(e) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(e)] = 1;
  for (long d = 1; d < e; ++d) {
    if (e % d != 0) continue;
    const auto div = cyclotomic_poly(d, memo);
    // Exact long division by the monic polynomial div.
    std::vector<long long> quot(poly.size() - div.size() + 1, 0);
    for (std::size_t qi = quot.size(); qi-- > 0;) {
      const long long lead = poly[qi + div.size() - 1];
      quot[qi] = lead;
      if (lead == 0) continue;
      for (std::size_t j = 0; j < div.size(); ++j) poly[qi + j] -= lead * div[j];
    }
    poly = std::move(quot);
  }
  memo.emplace(e, poly);
  return poly;
}

struct ConductorTable {
  long e;
  long phi;
  // rows[k] = coordinates of zeta^k in the power basis, k in [0, e).
  std::vector<std::vector<Rat>> rows;
};

const ConductorTable& table_for(long e) {
  static std::mutex mutex;
  static std::map<long, std::unique_ptr<ConductorTable>> cache;
  static std::map<long, std::vector<long long>> poly_memo;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(e);
  if (it != cache.end()) return *it->second;

  auto tbl = std::make_unique<ConductorTable>();
  tbl->e = e;
  const auto poly = cyclotomic_poly(e, poly_memo);
  tbl->phi = static_cast<long>(poly.size()) - 1;
  check_internal(tbl->phi == euler_phi(e), "cyclotomic polynomial degree");
  const std::size_t phi = static_cast<std::size_t>(tbl->phi);

  tbl->rows.resize(static_cast<std::size_t>(e));
  for (std::size_t k = 0; k < phi && k < static_cast<std::size_t>(e); ++k) {
    tbl->rows[k].assign(phi, Rat(0));
    tbl->rows[k][k] = rat(1);
  }
  // zeta^phi = -(lower coefficients of Phi_e); then multiply by zeta stepwise.
  std::vector<Rat> cur(phi, Rat(0));
  for (std::size_t j = 0; j < phi; ++j) cur[j] = rat(-poly[j]);
  for (long k = tbl->phi; k < e; ++k) {
    tbl->rows[static_cast<std::size_t>(k)] = cur;
    if (k + 1 == e) break;
    std::vector<Rat> next(phi, Rat(0));
    const Rat top = cur[phi - 1];
    for (std::size_t j = phi - 1; j > 0; --j) next[j] = cur[j - 1];
    next[0] = Rat(0);
    if (top != 0)
      for (std::size_t j = 0; j < phi; ++j) next[j] += top * rat(-poly[j]);
    cur = std::move(next);
  }

  const auto& ref = *tbl;
  cache.emplace(e, std::move(tbl));
  return ref;
}

}  // namespace

Cyclo::Cyclo(long conductor, std::vector<Rat> coeffs)
    : conductor_(conductor), c_(std::move(coeffs)) {
  trim();
}

void Cyclo::trim() {
  if (conductor_ == 1) return;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return;
  c_.resize(1);
  conductor_ = 1;
}

Cyclo Cyclo::zeta(long e, long a) {
  if (e < 1) fail("ParseError", "root of unity order must be positive");
  if (e > kConductorCap)
    fail("ConductorLimitExceeded", "conductor " + std::to_string(e) + " exceeds the cap");
  a %= e;
  if (a < 0) a += e;
  if (e == 1) return Cyclo(rat(1));
  return Cyclo(e, table_for(e).rows[static_cast<std::size_t>(a)]);
}

std::vector<Rat> Cyclo::lifted_to(long e) const {
  check_internal(e % conductor_ == 0, "conductor lift must be to a multiple");
  if (e == conductor_) return c_;
  const auto& tbl = table_for(e);
  const long k = e / conductor_;
  std::vector<Rat> out(static_cast<std::size_t>(tbl.phi), Rat(0));
  for (std::size_t a = 0; a < c_.size(); ++a) {
    if (c_[a] == 0) continue;
    const auto& row = tbl.rows[a * static_cast<std::size_t>(k)];
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += c_[a] * row[j];
  }
  return out;
}

Cyclo Cyclo::operator+(const Cyclo& rhs) const {
  const long e = std::lcm(conductor_, rhs.conductor_);
  if (e > kConductorCap)
    fail("ConductorLimitExceeded", "conductor " + std::to_string(e) + " exceeds the cap");
  auto a = lifted_to(e);
  const auto b = rhs.lifted_to(e);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return Cyclo(e, std::move(a));
}

Cyclo Cyclo::operator-() const {
  auto c = c_;
  for (auto& v : c) v = -v;
  return Cyclo(conductor_, std::move(c));
}

Cyclo Cyclo::operator-(const Cyclo& rhs) const { return *this + (-rhs); }

Cyclo Cyclo::operator*(const Cyclo& rhs) const {
  const long e = std::lcm(conductor_, rhs.conductor_);
  if (e > kConductorCap)
    fail("ConductorLimitExceeded", "conductor " + std::to_string(e) + " exceeds the cap");
  const auto a = lifted_to(e);
  const auto b = rhs.lifted_to(e);
  const std::size_t phi = a.size();
  std::vector<Rat> conv(2 * phi - 1, Rat(0));
  for (std::size_t i = 0; i < phi; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (b[j] == 0) continue;
      conv[i + j] += a[i] * b[j];
    }
  }
  if (e == 1) return Cyclo(1, {conv[0]});
  const auto& tbl = table_for(e);
  std::vector<Rat> out(phi, Rat(0));
  for (std::size_t i = 0; i < phi; ++i) out[i] = conv[i];
  for (std::size_t i = phi; i < conv.size(); ++i) {
    if (conv[i] == 0) continue;
    const auto& row = tbl.rows[i % static_cast<std::size_t>(e)];
    for (std::size_t j = 0; j < phi; ++j) out[j] += conv[i] * row[j];
  }
  return Cyclo(e, std::move(out));
}

Cyclo Cyclo::conjugate() const {
  if (conductor_ == 1) return *this;
  const auto& tbl = table_for(conductor_);
  std::vector<Rat> out(c_.size(), Rat(0));
  for (std::size_t a = 0; a < c_.size(); ++a) {
    if (c_[a] == 0) continue;
    const std::size_t ia = a == 0 ? 0 : static_cast<std::size_t>(conductor_) - a;
    const auto& row = tbl.rows[ia];
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += c_[a] * row[j];
  }
  return Cyclo(conductor_, std::move(out));
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) fail("DivisionByZero", "inverse of zero");
  if (conductor_ == 1) return Cyclo(Rat(1 / c_[0]));
  // Extended Euclid in Q[x] against Phi_e; Phi_e is irreducible, so the gcd
  // is a nonzero constant.
  const auto poly = [&] {
    const auto& tbl = table_for(conductor_);
    // Reconstruct Phi from the reduction row of x^phi: x^phi = -row.
    std::vector<Rat> f(static_cast<std::size_t>(tbl.phi) + 1, Rat(0));
    f[static_cast<std::size_t>(tbl.phi)] = rat(1);
    const auto& row = tbl.rows[static_cast<std::size_t>(tbl.phi)];
    for (std::size_t j = 0; j < row.size(); ++j) f[j] = -row[j];
    return f;
  }();

  using Poly = std::vector<Rat>;
  const auto deg = [](const Poly& p) {
    for (std::size_t i = p.size(); i-- > 0;)
      if (p[i] != 0) return static_cast<long>(i);
    return -1L;
  };
  const auto scale_add = [](Poly& target, const Poly& src, const Rat& factor, std::size_t shift) {
    if (target.size() < src.size() + shift) target.resize(src.size() + shift, Rat(0));
    for (std::size_t i = 0; i < src.size(); ++i) target[i + shift] += factor * src[i];
  };

  Poly r0 = poly, r1 = c_;
  Poly t0{Rat(0)}, t1{Rat(1)};
  while (deg(r1) > 0) {
    // r0 = q * r1 + r, achieved by repeated leading-term elimination.
    Poly rem = r0;
    Poly q{Rat(0)};
    const long d1 = deg(r1);
    const Rat lead1 = r1[static_cast<std::size_t>(d1)];
    while (deg(rem) >= d1) {
      const long d = deg(rem);
      const Rat factor = rem[static_cast<std::size_t>(d)] / lead1;
      const std::size_t shift = static_cast<std::size_t>(d - d1);
      scale_add(q, Poly{factor}, rat(1), shift);
      scale_add(rem, r1, -factor, shift);
    }
    Poly tnext = t0;
    for (std::size_t i = 0; i < q.size(); ++i)
      if (q[i] != 0) scale_add(tnext, t1, -q[i], i);
    r0 = std::move(r1);
    r1 = std::move(rem);
    t0 = std::move(t1);
    t1 = std::move(tnext);
  }
  check_internal(deg(r1) == 0, "cyclotomic inverse: gcd must be a nonzero constant");
  const Rat unit = r1[0];
  std::vector<Rat> out(c_.size(), Rat(0));
  const auto& tbl = table_for(conductor_);
  for (std::size_t i = 0; i < t1.size(); ++i) {
    if (t1[i] == 0) continue;
    const Rat v = t1[i] / unit;
    if (i < out.size()) {
      out[i] += v;
    } else {
      const auto& row = tbl.rows[i];
      for (std::size_t j = 0; j < out.size(); ++j) out[j] += v * row[j];
    }
  }
  return Cyclo(conductor_, std::move(out));
}

Cyclo Cyclo::operator/(const Cyclo& rhs) const { return *this * rhs.inverse(); }

bool Cyclo::operator==(const Cyclo& rhs) const {
  if (conductor_ == rhs.conductor_) return c_ == rhs.c_;
  const long e = std::lcm(conductor_, rhs.conductor_);
  return lifted_to(e) == rhs.lifted_to(e);
}

bool Cyclo::is_zero() const { return conductor_ == 1 && c_[0] == 0; }

Rat Cyclo::rational_value() const {
  if (conductor_ != 1) fail("PreconditionViolated", "value " + str() + " is not rational");
  return c_[0];
}

long Cyclo::integer_value() const {
  if (!is_integer()) fail("PreconditionViolated", "value " + str() + " is not a rational integer");
  return rat_to_long(c_[0]);
}

int Cyclo::order3(const Cyclo& a, const Cyclo& b) {
  const long e = std::lcm(a.conductor_, b.conductor_);
  const auto va = a.lifted_to(e);
  const auto vb = b.lifted_to(e);
  for (std::size_t i = 0; i < va.size(); ++i) {
    if (va[i] == vb[i]) continue;
    return va[i] > vb[i] ? -1 : 1;
  }
  return 0;
}

std::string Cyclo::str() const {
  const auto zterm = [&](std::size_t a) {
    std::string z = "z" + std::to_string(conductor_);
    if (a != 1) z += "^" + std::to_string(a);
    return z;
  };
  std::string out;
  for (std::size_t a = 0; a < c_.size(); ++a) {
    if (c_[a] == 0) continue;
    Rat coeff = c_[a];
    if (out.empty()) {
      if (coeff < 0) {
        out += "-";
        coeff = -coeff;
      }
    } else {
      out += coeff < 0 ? " - " : " + ";
      if (coeff < 0) coeff = -coeff;
    }
    if (a == 0) {
      out += rat_str(coeff);
    } else if (coeff == 1) {
      out += zterm(a);
    } else {
      out += rat_str(coeff) + "*" + zterm(a);
    }
  }
  return out.empty() ? "0" : out;
}

namespace {

struct CycloParser {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }
  bool take(char c) {
    if (!peek(c)) return false;
    ++pos;
    return true;
  }
  [[noreturn]] void err(const std::string& what) {
    fail("ParseError", what + " at position " + std::to_string(pos) + " in \"" + text + "\"");
  }

  long integer() {
    skip_ws();
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      neg = text[pos] == '-';
      ++pos;
    }
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) err("expected an integer");
    long v = std::stol(text.substr(start, pos - start));
    return neg ? -v : v;
  }

  // term := rational ['*' zpart] | zpart
  Cyclo term() {
    skip_ws();
    if (pos < text.size() && text[pos] == 'z') return zpart();
    const long num = integer();
    long den = 1;
    if (take('/')) {
      den = integer();
      if (den == 0) err("zero denominator");
    }
    const Rat q = rat(num, den);
    if (take('*')) {
      skip_ws();
      if (pos >= text.size() || text[pos] != 'z') err("expected a root of unity after '*'");
      return Cyclo(q) * zpart();
    }
    return Cyclo(q);
  }

  Cyclo zpart() {
    ++pos;  // 'z'
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) err("expected a conductor after 'z'");
    const long e = std::stol(text.substr(start, pos - start));
    long a = 1;
    if (take('^')) a = integer();
    if (e < 1) err("conductor must be positive");
    return Cyclo::zeta(e, a);
  }

  Cyclo parse() {
    skip_ws();
    if (pos >= text.size()) err("empty cyclotomic expression");
    bool neg = take('-');
    Cyclo value = term();
    if (neg) value = -value;
    for (;;) {
      skip_ws();
      if (pos >= text.size()) break;
      if (take('+')) {
        value += term();
      } else if (take('-')) {
        value -= term();
      } else {
        err("expected '+' or '-'");
      }
    }
    return value;
  }
};

}  // namespace

Cyclo Cyclo::parse(const std::string& text) {
  CycloParser parser{text};
  return parser.parse();
}

}  // namespace covhom
