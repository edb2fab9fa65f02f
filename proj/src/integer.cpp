#include "quadnorm/integer.hpp"

#include <cstdlib>
#include <stdexcept>

namespace quadnorm {

Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw std::domain_error("floor_div: division by zero");
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int mod_floor(const Int& a, const Int& m) {
  if (m == 0) throw std::domain_error("mod_floor: zero modulus");
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (r < 0) r += abs(m);
  return r;
}

Int isqrt(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt: negative argument");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const Int& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

unsigned valuation(const Int& n, long p) {
  if (n == 0) throw std::domain_error("valuation of zero");
  Int rest = n;
  const Int prime = p;
  return static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), prime.get_mpz_t()));
}

std::string to_string(const Int& n) { return n.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

long long to_ll(const Int& n) {
  if (!mpz_fits_slong_p(n.get_mpz_t())) throw std::overflow_error("integer does not fit in 64 bits: " + n.get_str());
  return mpz_get_si(n.get_mpz_t());
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

bool is_squarefree(long long n) {
  n = std::llabs(n);
  if (n == 0) return false;
  for (long long q = 2; q * q <= n; ++q) {
    if (n % (q * q) == 0) return false;
  }
  return true;
}

std::vector<long long> prime_divisors(long long n) {
  n = std::llabs(n);
  std::vector<long long> out;
  for (long long q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Int xgcd(const Int& a, const Int& b, Int& u, Int& v) {
  Int g;
  mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace quadnorm
