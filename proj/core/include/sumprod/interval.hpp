#pragma once

// Closed real intervals with MPFR endpoints and outward rounding. Used
// wherever a real-valued quantity must be compared against an integer or a
// threshold: a comparison is only reported when the enclosure decides it.

#include <optional>
#include <string>

#include <mpfr.h>

#include "sumprod/arith.hpp"

namespace sumprod {

inline constexpr mpfr_prec_t kDefaultPrecision = 128;

/// RAII owner of one mpfr_t.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = kDefaultPrecision);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

 private:
  mpfr_t value_;
};

class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = kDefaultPrecision);

  static Interval from_integer(const Integer& n, mpfr_prec_t prec = kDefaultPrecision);
  static Interval from_rational(const Rational& q, mpfr_prec_t prec = kDefaultPrecision);
  /// Exact enclosure of a binary double.
  static Interval from_double(double x, mpfr_prec_t prec = kDefaultPrecision);
  static Interval pi(mpfr_prec_t prec = kDefaultPrecision);
  /// Enclosures of cos(2*pi*r/n) and sin(2*pi*r/n).
  static Interval cos_two_pi_ratio(long r, long n, mpfr_prec_t prec = kDefaultPrecision);
  static Interval sin_two_pi_ratio(long r, long n, mpfr_prec_t prec = kDefaultPrecision);

  const Real& lower() const { return lo_; }
  const Real& upper() const { return hi_; }
  mpfr_prec_t precision() const { return lo_.precision(); }

  double lower_double() const;  // rounded toward -inf
  double upper_double() const;  // rounded toward +inf
  double midpoint() const;
  double width() const;

  bool contains_zero() const;
  bool certainly_positive() const;
  bool certainly_less_than(const Interval& other) const;
  bool certainly_greater_than(const Interval& other) const;
  /// True when the two enclosures share no point.
  bool disjoint_from(const Interval& other) const;

  /// floor(x) when every point of the interval has the same floor.
  std::optional<Integer> certain_floor() const;
  std::optional<Integer> certain_ceil() const;

  Interval& operator+=(const Interval& rhs);
  Interval& operator-=(const Interval& rhs);
  Interval& operator*=(const Interval& rhs);
  Interval& operator/=(const Interval& rhs);

  friend Interval operator+(Interval a, const Interval& b) { return a += b; }
  friend Interval operator-(Interval a, const Interval& b) { return a -= b; }
  friend Interval operator*(Interval a, const Interval& b) { return a *= b; }
  friend Interval operator/(Interval a, const Interval& b) { return a /= b; }
  Interval operator-() const;

  friend Interval sqrt(const Interval& x);
  friend Interval log(const Interval& x);
  friend Interval exp(const Interval& x);
  friend Interval square(const Interval& x);
  /// x^e for x > 0, as exp(e * log x).
  friend Interval pow(const Interval& x, const Interval& e);
  friend Interval hull(const Interval& a, const Interval& b);
  /// Pointwise minimum {min(x, y) : x in a, y in b}.
  friend Interval min(const Interval& a, const Interval& b);

  std::string to_string(int digits = 20) const;

 private:
  Real lo_;
  Real hi_;
};

}  // namespace sumprod
