#include "sumprod/arith.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>

#include "sumprod/errors.hpp"

namespace sumprod {

namespace {

constexpr std::uint32_t kTrialDivisionLimit = 1'000'000;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialDivisionLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kTrialDivisionLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j <= kTrialDivisionLimit; j += i) {
        composite[j] = true;
      }
    }
    return out;
  }();
  return primes;
}

bool valid_decimal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

bool miller_rabin_round(const Integer& n, const Integer& n_minus_1, const Integer& odd,
                        unsigned long twos, const Integer& base) {
  Integer x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), odd.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long r = 1; r < twos; ++r) {
    x = x * x % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

// Brent's cycle-finding variant of Pollard rho. Returns a nontrivial
// factor of the composite n, or n itself when this constant fails.
Integer rho_attempt(const Integer& n, const Integer& c) {
  Integer y = 2, x, q = 1, g = 1, ys;
  unsigned long r = 1;
  constexpr unsigned long kBatch = 128;
  do {
    x = y;
    for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
    unsigned long k = 0;
    do {
      ys = y;
      for (unsigned long i = 0; i < std::min(kBatch, r - k); ++i) {
        y = (y * y + c) % n;
        Integer diff = x - y;
        q = q * abs(diff) % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += kBatch;
    } while (k < r && g == 1);
    r *= 2;
  } while (g == 1);
  if (g == n) {
    do {
      ys = (ys * ys + c) % n;
      Integer diff = x - ys;
      Integer ad = abs(diff);
      mpz_gcd(g.get_mpz_t(), ad.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g;
}

void factor_large(const Integer& n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  if (auto r = perfect_square_root(n)) {
    factor_large(*r, out);
    factor_large(*r, out);
    return;
  }
  for (unsigned long c = 1;; ++c) {
    Integer g = rho_attempt(n, Integer(c));
    if (g != n && g != 1) {
      factor_large(g, out);
      factor_large(Integer(n / g), out);
      return;
    }
  }
}

}  // namespace

Integer parse_integer(std::string_view text) {
  if (!valid_decimal(text)) {
    throw ValidationError("not a decimal integer: '" + std::string(text) + "'");
  }
  std::string s(text);
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw ValidationError("signed denominator in '" + std::string(text) + "'");
  }
  Integer den = parse_integer(den_text);
  if (den == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
  return make_rational(num, den);
}

std::string to_string(const Integer& n) { return n.get_str(10); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str(10);
  return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer int_sqrt_floor(const Integer& n) {
  if (n < 0) throw DomainError("int_sqrt_floor of negative integer " + to_string(n));
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Integer int_root_floor(const Integer& n, unsigned long k) {
  if (n < 0) throw DomainError("int_root_floor of negative integer");
  if (k == 0) throw DomainError("zeroth root");
  Integer r;
  mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

Integer int_root_ceil(const Integer& n, unsigned long k) {
  Integer r = int_root_floor(n, k);
  Integer p;
  mpz_pow_ui(p.get_mpz_t(), r.get_mpz_t(), k);
  if (p < n) ++r;
  return r;
}

std::optional<Integer> perfect_square_root(const Integer& n) {
  if (n < 0) return std::nullopt;
  Integer r = int_sqrt_floor(n);
  if (r * r != n) return std::nullopt;
  return r;
}

std::optional<Rational> rational_square_root(const Rational& q) {
  auto num = perfect_square_root(q.get_num());
  if (!num) return std::nullopt;
  auto den = perfect_square_root(q.get_den());
  if (!den) return std::nullopt;
  return make_rational(*num, *den);
}

bool is_rational_square(const Rational& q) { return rational_square_root(q).has_value(); }

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  static constexpr unsigned kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (unsigned p : kBases) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  Integer n_minus_1 = n - 1;
  Integer odd = n_minus_1;
  unsigned long twos = mpz_scan1(odd.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(odd.get_mpz_t(), odd.get_mpz_t(), twos);
  for (unsigned p : kBases) {
    if (!miller_rabin_round(n, n_minus_1, odd, twos, Integer(p))) return false;
  }
  // The 13 prime bases above are a proof of primality below 3.3e24.
  static const Integer kDeterministicLimit("3317044064679887385961981", 10);
  if (n < kDeterministicLimit) return true;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::map<Integer, unsigned> factorize(const Integer& n) {
  if (n == 0) throw DomainError("cannot factor zero");
  std::map<Integer, unsigned> out;
  Integer rest = abs(n);
  for (std::uint32_t p : small_primes()) {
    if (Integer(p) * p > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      ++out[Integer(p)];
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    }
  }
  if (rest == 1) return out;
  if (rest <= Integer(kTrialDivisionLimit) * kTrialDivisionLimit) {
    ++out[rest];
    return out;
  }
  factor_large(rest, out);
  return out;
}

std::vector<Integer> divisors(const Integer& n) {
  if (n == 0) throw DomainError("divisors of zero");
  std::vector<Integer> out{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    Integer pk = 1;
    for (unsigned i = 0; i < e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace sumprod
