#include "sumprod/interval.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "sumprod/errors.hpp"

namespace sumprod {

Real::Real(mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, other.precision());
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

namespace {

// Lower and upper ends of {a*b} for the four endpoint products.
void product_bounds(mpfr_srcptr a0, mpfr_srcptr a1, mpfr_srcptr b0, mpfr_srcptr b1,
                    Real& lo, Real& hi) {
  mpfr_srcptr as[2] = {a0, a1};
  mpfr_srcptr bs[2] = {b0, b1};
  Real t(lo.precision());
  bool first = true;
  for (auto a : as) {
    for (auto b : bs) {
      mpfr_mul(t.get(), a, b, MPFR_RNDD);
      if (first || mpfr_less_p(t.get(), lo.get())) mpfr_set(lo.get(), t.get(), MPFR_RNDD);
      mpfr_mul(t.get(), a, b, MPFR_RNDU);
      if (first || mpfr_greater_p(t.get(), hi.get())) mpfr_set(hi.get(), t.get(), MPFR_RNDU);
      first = false;
    }
  }
}

// Center value and error radius for cos/sin(2*pi*r/n). The value is taken
// at higher precision; the radius bounds argument and result rounding
// (|arg| < 2*pi < 8).
std::pair<Real, Real> trig_two_pi_ratio(long r, long n, mpfr_prec_t prec, bool cosine) {
  if (n <= 0) throw DomainError("root-of-unity order must be positive");
  r %= n;
  if (r < 0) r += n;
  const mpfr_prec_t work = prec + 32;
  Real x(work), v(work), radius(work);
  mpfr_const_pi(x.get(), MPFR_RNDN);
  mpfr_mul_si(x.get(), x.get(), 2 * r, MPFR_RNDN);
  mpfr_div_si(x.get(), x.get(), n, MPFR_RNDN);
  if (cosine) {
    mpfr_cos(v.get(), x.get(), MPFR_RNDN);
  } else {
    mpfr_sin(v.get(), x.get(), MPFR_RNDN);
  }
  mpfr_set_ui_2exp(radius.get(), 1, -(work - 6), MPFR_RNDU);
  return {std::move(v), std::move(radius)};
}

}  // namespace

Interval::Interval(mpfr_prec_t prec) : lo_(prec), hi_(prec) {}

Interval Interval::from_integer(const Integer& n, mpfr_prec_t prec) {
  Interval out(prec);
  mpfr_set_z(out.lo_.get(), n.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(out.hi_.get(), n.get_mpz_t(), MPFR_RNDU);
  return out;
}

Interval Interval::from_rational(const Rational& q, mpfr_prec_t prec) {
  Interval out(prec);
  mpfr_set_q(out.lo_.get(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(out.hi_.get(), q.get_mpq_t(), MPFR_RNDU);
  return out;
}

Interval Interval::from_double(double x, mpfr_prec_t prec) {
  Interval out(prec);
  mpfr_set_d(out.lo_.get(), x, MPFR_RNDD);
  mpfr_set_d(out.hi_.get(), x, MPFR_RNDU);
  return out;
}

Interval Interval::pi(mpfr_prec_t prec) {
  Interval out(prec);
  mpfr_const_pi(out.lo_.get(), MPFR_RNDD);
  mpfr_const_pi(out.hi_.get(), MPFR_RNDU);
  return out;
}

Interval Interval::cos_two_pi_ratio(long r, long n, mpfr_prec_t prec) {
  auto [v, radius] = trig_two_pi_ratio(r, n, prec, true);
  Interval out(prec);
  mpfr_sub(out.lo_.get(), v.get(), radius.get(), MPFR_RNDD);
  mpfr_add(out.hi_.get(), v.get(), radius.get(), MPFR_RNDU);
  return out;
}

Interval Interval::sin_two_pi_ratio(long r, long n, mpfr_prec_t prec) {
  auto [v, radius] = trig_two_pi_ratio(r, n, prec, false);
  Interval out(prec);
  mpfr_sub(out.lo_.get(), v.get(), radius.get(), MPFR_RNDD);
  mpfr_add(out.hi_.get(), v.get(), radius.get(), MPFR_RNDU);
  return out;
}

double Interval::lower_double() const { return mpfr_get_d(lo_.get(), MPFR_RNDD); }
double Interval::upper_double() const { return mpfr_get_d(hi_.get(), MPFR_RNDU); }

double Interval::midpoint() const {
  Real m(precision() + 1);
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return m.to_double();
}

double Interval::width() const {
  Real w(precision());
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return mpfr_get_d(w.get(), MPFR_RNDU);
}

bool Interval::contains_zero() const {
  return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0;
}

bool Interval::certainly_positive() const { return mpfr_sgn(lo_.get()) > 0; }

bool Interval::certainly_less_than(const Interval& other) const {
  return mpfr_less_p(hi_.get(), other.lo_.get());
}

bool Interval::certainly_greater_than(const Interval& other) const {
  return other.certainly_less_than(*this);
}

bool Interval::disjoint_from(const Interval& other) const {
  return certainly_less_than(other) || certainly_greater_than(other);
}

std::optional<Integer> Interval::certain_floor() const {
  Integer a, b;
  mpfr_get_z(a.get_mpz_t(), lo_.get(), MPFR_RNDD);
  mpfr_get_z(b.get_mpz_t(), hi_.get(), MPFR_RNDD);
  if (a != b) return std::nullopt;
  return a;
}

std::optional<Integer> Interval::certain_ceil() const {
  Integer a, b;
  mpfr_get_z(a.get_mpz_t(), lo_.get(), MPFR_RNDU);
  mpfr_get_z(b.get_mpz_t(), hi_.get(), MPFR_RNDU);
  if (a != b) return std::nullopt;
  return a;
}

Interval& Interval::operator+=(const Interval& rhs) {
  mpfr_add(lo_.get(), lo_.get(), rhs.lo_.get(), MPFR_RNDD);
  mpfr_add(hi_.get(), hi_.get(), rhs.hi_.get(), MPFR_RNDU);
  return *this;
}

Interval& Interval::operator-=(const Interval& rhs) {
  Real lo(precision()), hi(precision());
  mpfr_sub(lo.get(), lo_.get(), rhs.hi_.get(), MPFR_RNDD);
  mpfr_sub(hi.get(), hi_.get(), rhs.lo_.get(), MPFR_RNDU);
  lo_ = std::move(lo);
  hi_ = std::move(hi);
  return *this;
}

Interval& Interval::operator*=(const Interval& rhs) {
  Real lo(precision()), hi(precision());
  product_bounds(lo_.get(), hi_.get(), rhs.lo_.get(), rhs.hi_.get(), lo, hi);
  lo_ = std::move(lo);
  hi_ = std::move(hi);
  return *this;
}

Interval& Interval::operator/=(const Interval& rhs) {
  if (rhs.contains_zero()) throw DomainError("interval division by an enclosure of zero");
  Real lo(precision()), hi(precision()), t(precision());
  bool first = true;
  for (mpfr_srcptr a : {lo_.get(), hi_.get()}) {
    for (mpfr_srcptr b : {rhs.lo_.get(), rhs.hi_.get()}) {
      mpfr_div(t.get(), a, b, MPFR_RNDD);
      if (first || mpfr_less_p(t.get(), lo.get())) mpfr_set(lo.get(), t.get(), MPFR_RNDD);
      mpfr_div(t.get(), a, b, MPFR_RNDU);
      if (first || mpfr_greater_p(t.get(), hi.get())) mpfr_set(hi.get(), t.get(), MPFR_RNDU);
      first = false;
    }
  }
  lo_ = std::move(lo);
  hi_ = std::move(hi);
  return *this;
}

Interval Interval::operator-() const {
  Interval out(precision());
  mpfr_neg(out.lo_.get(), hi_.get(), MPFR_RNDD);
  mpfr_neg(out.hi_.get(), lo_.get(), MPFR_RNDU);
  return out;
}

Interval sqrt(const Interval& x) {
  if (mpfr_sgn(x.hi_.get()) < 0) throw DomainError("sqrt of a negative interval");
  Interval out(x.precision());
  if (mpfr_sgn(x.lo_.get()) <= 0) {
    mpfr_set_zero(out.lo_.get(), 1);
  } else {
    mpfr_sqrt(out.lo_.get(), x.lo_.get(), MPFR_RNDD);
  }
  mpfr_sqrt(out.hi_.get(), x.hi_.get(), MPFR_RNDU);
  return out;
}

Interval log(const Interval& x) {
  if (!x.certainly_positive()) throw DomainError("log of a non-positive interval");
  Interval out(x.precision());
  mpfr_log(out.lo_.get(), x.lo_.get(), MPFR_RNDD);
  mpfr_log(out.hi_.get(), x.hi_.get(), MPFR_RNDU);
  return out;
}

Interval exp(const Interval& x) {
  Interval out(x.precision());
  mpfr_exp(out.lo_.get(), x.lo_.get(), MPFR_RNDD);
  mpfr_exp(out.hi_.get(), x.hi_.get(), MPFR_RNDU);
  return out;
}

Interval square(const Interval& x) {
  Interval out(x.precision());
  if (x.contains_zero()) {
    Real a(x.precision()), b(x.precision());
    mpfr_sqr(a.get(), x.lo_.get(), MPFR_RNDU);
    mpfr_sqr(b.get(), x.hi_.get(), MPFR_RNDU);
    mpfr_set_zero(out.lo_.get(), 1);
    mpfr_max(out.hi_.get(), a.get(), b.get(), MPFR_RNDU);
    return out;
  }
  return x * x;
}

Interval pow(const Interval& x, const Interval& e) { return exp(e * log(x)); }

Interval hull(const Interval& a, const Interval& b) {
  Interval out(std::max(a.precision(), b.precision()));
  mpfr_min(out.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_max(out.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return out;
}

Interval min(const Interval& a, const Interval& b) {
  Interval out(std::max(a.precision(), b.precision()));
  mpfr_min(out.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_min(out.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return out;
}

std::string Interval::to_string(int digits) const {
  auto render = [digits](mpfr_srcptr v, mpfr_rnd_t rnd) {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*R*g", digits, rnd, v);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
  };
  return "[" + render(lo_.get(), MPFR_RNDD) + ", " + render(hi_.get(), MPFR_RNDU) + "]";
}

}  // namespace sumprod
