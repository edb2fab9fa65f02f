#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace quadnorm {

using Int = mpz_class;
using Rational = mpq_class;

/// Floor division and the matching non-negative remainder (for positive m).
Int floor_div(const Int& a, const Int& b);
Int mod_floor(const Int& a, const Int& m);

/// floor(sqrt(n)) for n >= 0.
Int isqrt(const Int& n);
bool is_perfect_square(const Int& n);

/// Exponent of the prime p in n (n != 0).
unsigned valuation(const Int& n, long p);

std::string to_string(const Int& n);
std::string to_string(const Rational& q);

/// Narrowing conversion; throws std::overflow_error when n does not fit.
long long to_ll(const Int& n);

bool is_prime(long long n);
bool is_squarefree(long long n);
std::vector<long long> prime_divisors(long long n);

/// Extended gcd: returns g = gcd(a, b) >= 0 and sets u, v with u*a + v*b = g.
Int xgcd(const Int& a, const Int& b, Int& u, Int& v);

}  // namespace quadnorm
