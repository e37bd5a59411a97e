#pragma once

#include <string>
#include <vector>

#include "covhom/rational.hpp"

namespace covhom {

long euler_phi(long e);

// Element of the cyclotomic field Q(zeta_e), stored as rational coordinates
// in the power basis 1, zeta, ..., zeta^(phi(e)-1) reduced modulo the e-th
// cyclotomic polynomial.  Values whose coordinates collapse to the constant
// are kept at conductor 1, so plain rationals always compare as such; other
// equality tests lift both sides to the lcm conductor.
class Cyclo {
public:
  static constexpr long kConductorCap = 10000;

  Cyclo() : conductor_(1), c_{Rat(0)} {}
  explicit Cyclo(const Rat& q) : conductor_(1), c_{q} {}
  explicit Cyclo(long n) : conductor_(1), c_{rat(n)} {}

  static Cyclo zeta(long e, long a = 1);

  long conductor() const { return conductor_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  Cyclo operator+(const Cyclo& rhs) const;
  Cyclo operator-(const Cyclo& rhs) const;
  Cyclo operator*(const Cyclo& rhs) const;
  Cyclo operator/(const Cyclo& rhs) const;
  Cyclo operator-() const;
  Cyclo& operator+=(const Cyclo& rhs) { return *this = *this + rhs; }
  Cyclo& operator-=(const Cyclo& rhs) { return *this = *this - rhs; }
  Cyclo& operator*=(const Cyclo& rhs) { return *this = *this * rhs; }

  Cyclo conjugate() const;
  Cyclo inverse() const;

  bool operator==(const Cyclo& rhs) const;
  bool operator!=(const Cyclo& rhs) const { return !(*this == rhs); }

  bool is_zero() const;
  bool is_real() const { return *this == conjugate(); }
  bool is_rational() const { return conductor_ == 1; }
  bool is_integer() const { return conductor_ == 1 && rat_is_integer(c_[0]); }
  Rat rational_value() const;  // errors when not rational
  long integer_value() const;  // errors when not a rational integer

  // Text form, e.g. "3/2 - z11^3 + 2*z11^7"; parse() round-trips it exactly.
  std::string str() const;
  static Cyclo parse(const std::string& text);

  // Total order; ties broken so that a larger leading coordinate sorts
  // earlier (this puts 1 before zeta_3 before zeta_3^2).
  static int order3(const Cyclo& a, const Cyclo& b);

private:
  Cyclo(long conductor, std::vector<Rat> coeffs);
  std::vector<Rat> lifted_to(long e) const;
  void trim();

  long conductor_;
  std::vector<Rat> c_;
};

inline Cyclo operator*(const Rat& q, const Cyclo& x) { return Cyclo(q) * x; }

}  // namespace covhom
