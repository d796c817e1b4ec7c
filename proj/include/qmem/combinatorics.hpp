#pragma once

// Exact big-integer combinatorics: central binomial ratios, the three
// factorial-sum identities, and the two-sided Stirling bounds.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "qmem/error.hpp"

namespace qmem {

using BigInt = boost::multiprecision::cpp_int;
/// Always reduced, denominator > 0.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt b = 1;
  for (unsigned i = 1; i <= k; ++i) {
    b *= n - k + i;
    b /= i;
  }
  return b;
}

/// Nearest-ish double of an arbitrary rational (relative error < 2^-62),
/// safe when numerator and denominator individually overflow a double.
inline double to_double(const Rational& r) {
  using boost::multiprecision::msb;
  BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (num == 0) return 0.0;
  const bool negative = num < 0;
  if (negative) num = -num;
  const long long gap = static_cast<long long>(msb(den)) - static_cast<long long>(msb(num));
  const long long shift = std::max<long long>(0, 64 + gap);
  const BigInt q = (num << static_cast<unsigned>(shift)) / den;
  double v = std::ldexp(q.convert_to<double>(), static_cast<int>(-shift));
  return negative ? -v : v;
}

/// binom(m, m/2) * 2^-m for even m >= 2.
inline Rational binomial_c(long long m) {
  detail::require(m >= 2 && m % 2 == 0, "binomial_c: m must be even and at least 2");
  const auto mu = static_cast<unsigned>(m);
  return Rational(binomial(mu, mu / 2), BigInt(1) << mu);
}

struct IdentityPair {
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs == rhs; }
};

struct FactsumIdentities {
  /// sum_z binom(2a,z) |1/2 - z/(2a)| = binom(2a,a)/2; defined for a >= 1 only.
  std::optional<IdentityPair> central;
  /// sum_z z / ((a+z)!(a-z)!(b+z)!(b-z)!) = ab / (2(a+b)(a!)^2(b!)^2).
  IdentityPair even;
  /// sum_z (z+1/2) / ((a+z+1)!(a-z)!(b+z+1)!(b-z)!) = 1 / (2(a+b+1)(a!)^2(b!)^2).
  IdentityPair odd;

  bool all_hold() const { return (!central || central->holds()) && even.holds() && odd.holds(); }
};

/// Both sides of each identity, evaluated independently in exact rationals.
/// For a = b = 0 the right side of `even` reads 0/0; the sum is empty of
/// nonzero terms there, so the right side is taken as 0.
inline FactsumIdentities factsum_identities(unsigned a, unsigned b) {
  FactsumIdentities out;

  if (a >= 1) {
    const unsigned two_a = 2 * a;
    Rational lhs = 0;
    for (unsigned z = 0; z <= two_a; ++z) {
      Rational dev = Rational(1, 2) - Rational(z, two_a);
      if (dev < 0) dev = -dev;
      lhs += Rational(binomial(two_a, z)) * dev;
    }
    out.central = IdentityPair{lhs, Rational(binomial(two_a, a), 2)};
  }

  const unsigned zmax = std::min(a, b);
  const BigInt fa = factorial(a);
  const BigInt fb = factorial(b);

  Rational even_lhs = 0;
  for (unsigned z = 0; z <= zmax; ++z) {
    const BigInt den = factorial(a + z) * factorial(a - z) * factorial(b + z) * factorial(b - z);
    even_lhs += Rational(BigInt(z), den);
  }
  Rational even_rhs = 0;
  if (a + b > 0) even_rhs = Rational(BigInt(a) * b, BigInt(2) * (a + b) * fa * fa * fb * fb);
  out.even = IdentityPair{even_lhs, even_rhs};

  Rational odd_lhs = 0;
  for (unsigned z = 0; z <= zmax; ++z) {
    const BigInt den =
        factorial(a + z + 1) * factorial(a - z) * factorial(b + z + 1) * factorial(b - z);
    odd_lhs += Rational(BigInt(2 * z + 1), BigInt(2) * den);
  }
  out.odd = IdentityPair{odd_lhs, Rational(BigInt(1), BigInt(2) * (a + b + 1) * fa * fa * fb * fb)};
  return out;
}

/// log-space sandwich
///   log(sqrt(2 pi) n^{n+1/2} e^{-n + 1/(12n+1)}) < log n! < same with 1/(12n).
struct StirlingBounds {
  double lower = 0.0;
  double exact_log = 0.0;
  double upper = 0.0;
  bool strict() const { return lower < exact_log && exact_log < upper; }
};

inline StirlingBounds stirling_bounds(long long n) {
  detail::require(n >= 1, "stirling_bounds: n must be positive");
  const auto x = static_cast<double>(n);
  const double base = 0.5 * std::log(2.0 * std::numbers::pi) + (x + 0.5) * std::log(x) - x;
  StirlingBounds out;
  out.lower = base + 1.0 / (12.0 * x + 1.0);
  out.upper = base + 1.0 / (12.0 * x);
  out.exact_log = std::lgamma(x + 1.0);
  return out;
}

}  // namespace qmem
