#pragma once

// Exact integer and rational arithmetic. Integer and Rational are GMP
// values; every Rational handed out by this library is canonical
// (den > 0, gcd(|num|, den) = 1).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace sumprod {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses an optionally signed decimal integer. Throws ValidationError.
Integer parse_integer(std::string_view text);

/// Parses "p/q" or "p". The result is canonicalized; q == 0 throws.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& n);

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& q);

Rational make_rational(const Integer& num, const Integer& den);

/// Largest r with r*r <= n. Throws DomainError for n < 0.
Integer int_sqrt_floor(const Integer& n);

/// Largest r with r^k <= n, for n >= 0 and k >= 1.
Integer int_root_floor(const Integer& n, unsigned long k);

/// Smallest r with r^k >= n, for n >= 0 and k >= 1.
Integer int_root_ceil(const Integer& n, unsigned long k);

/// r >= 0 with r*r == n, or nullopt. Negative n is never a square.
std::optional<Integer> perfect_square_root(const Integer& n);

/// r >= 0 with r*r == q, present iff numerator and denominator are both squares.
std::optional<Rational> rational_square_root(const Rational& q);

bool is_rational_square(const Rational& q);

/// Deterministic primality for n < 3.3e24; BPSW plus extra Miller-Rabin
/// rounds above that.
bool is_prime(const Integer& n);

/// Prime factorization of |n| (n != 0) as prime -> exponent. Trial division
/// by primes below 10^6, then Brent's variant of Pollard rho.
std::map<Integer, unsigned> factorize(const Integer& n);

/// All positive divisors of |n|, ascending. Throws DomainError for n == 0.
std::vector<Integer> divisors(const Integer& n);

Integer lcm(const Integer& a, const Integer& b);

/// Binomial coefficient C(n, k).
Integer binomial(unsigned long n, unsigned long k);

}  // namespace sumprod
