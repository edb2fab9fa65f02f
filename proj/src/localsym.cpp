#include "quadnorm/localsym.hpp"

#include <algorithm>
#include <stdexcept>

namespace quadnorm {

Place Place::finite(long p) {
  if (!is_prime(p)) throw std::invalid_argument("place: " + std::to_string(p) + " is not prime");
  return Place(Kind::finite, p);
}

std::string Place::to_string() const { return is_infinite() ? std::string("inf") : std::to_string(p_); }

SigmaSet::SigmaSet(std::vector<long> finite_primes) : primes_(std::move(finite_primes)) {
  for (long p : primes_)
    if (!is_prime(p)) throw std::invalid_argument("sigma: " + std::to_string(p) + " is not prime");
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
}

bool SigmaSet::contains(long p) const { return std::binary_search(primes_.begin(), primes_.end(), p); }

std::vector<Place> SigmaSet::places() const {
  std::vector<Place> out{Place::infinity()};
  for (long p : primes_) out.push_back(Place::finite(p));
  return out;
}

SigmaSet SigmaSet::with(const std::vector<long>& more) const {
  std::vector<long> all = primes_;
  all.insert(all.end(), more.begin(), more.end());
  return SigmaSet(std::move(all));
}

std::string SigmaSet::to_string() const {
  std::string out = "{inf";
  for (long p : primes_) out += "," + std::to_string(p);
  return out + "}";
}

int kronecker(const Int& a, const Int& n) {
  if (a == 0 && n == 0) throw std::invalid_argument("kronecker: both arguments are zero");
  return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

namespace {

// a = p^alpha * u with p not dividing u.
struct PrimeSplit {
  unsigned alpha;
  Int unit;
};

PrimeSplit split_at(const Int& a, long p) {
  PrimeSplit s{0, a};
  const Int prime = p;
  s.alpha = static_cast<unsigned>(mpz_remove(s.unit.get_mpz_t(), a.get_mpz_t(), prime.get_mpz_t()));
  return s;
}

// (u - 1)/2 mod 2 and (u^2 - 1)/8 mod 2 for odd u.
int eps2(const Int& u) { return mod_floor(u, 4) == 3 ? 1 : 0; }
int omega2(const Int& u) {
  const Int r = mod_floor(u, 8);
  return (r == 3 || r == 5) ? 1 : 0;
}

}  // namespace

int hilbert(const Int& a, const Int& b, const Place& v) {
  if (a == 0 || b == 0) throw std::invalid_argument("hilbert: arguments must be nonzero");
  if (v.is_infinite()) return (a < 0 && b < 0) ? -1 : 1;

  const long p = v.prime();
  const PrimeSplit x = split_at(a, p);
  const PrimeSplit y = split_at(b, p);
  int exponent = 0;
  if (p == 2) {
    exponent = eps2(x.unit) * eps2(y.unit) + static_cast<int>(x.alpha % 2) * omega2(y.unit) +
               static_cast<int>(y.alpha % 2) * omega2(x.unit);
    return exponent % 2 ? -1 : 1;
  }
  // Tame symbol: (-1)^(alpha beta (p-1)/2) (u/p)^beta (v/p)^alpha.
  const long half = (p - 1) / 2;
  exponent = static_cast<int>((x.alpha % 2) * (y.alpha % 2) * (half % 2));
  int sign = exponent ? -1 : 1;
  const Int prime = p;
  if (y.alpha % 2) sign *= kronecker(x.unit, prime);
  if (x.alpha % 2) sign *= kronecker(y.unit, prime);
  return sign;
}

int hilbert(const Rational& a, const Rational& b, const Place& v) {
  // n/m and n*m share a square class.
  return hilbert(Int(a.get_num() * a.get_den()), Int(b.get_num() * b.get_den()), v);
}

std::string to_string(SplittingType t) {
  switch (t) {
    case SplittingType::split:
      return "split";
    case SplittingType::inert:
      return "inert";
    case SplittingType::ramified:
      return "ramified";
  }
  return "?";
}

bool is_fundamental_discriminant(const Int& D) {
  if (D == 0 || D == 1) return false;
  if (!mpz_fits_slong_p(D.get_mpz_t())) return false;
  const long long v = to_ll(D);
  const long long r = ((v % 4) + 4) % 4;
  if (r == 1) return is_squarefree(v);
  if (r != 0) return false;
  const long long m = v / 4;
  const long long rm = ((m % 4) + 4) % 4;
  return (rm == 2 || rm == 3) && is_squarefree(m);
}

Int fundamental_discriminant(long d) {
  if (d == 0 || d == 1 || !is_squarefree(d)) throw std::invalid_argument("d = " + std::to_string(d) + " is not a squarefree integer other than 0, 1");
  return ((d % 4) + 4) % 4 == 1 ? Int(d) : Int(4 * d);
}

SplittingType splitting_type(const Int& D, long p) {
  if (!is_fundamental_discriminant(D)) throw std::invalid_argument("splitting_type: " + D.get_str() + " is not a fundamental discriminant");
  if (!is_prime(p)) throw std::invalid_argument("splitting_type: " + std::to_string(p) + " is not prime");
  if (mpz_divisible_ui_p(D.get_mpz_t(), static_cast<unsigned long>(p))) return SplittingType::ramified;
  return kronecker(D, Int(p)) == 1 ? SplittingType::split : SplittingType::inert;
}

void validate_sigma(long d, const SigmaSet& sigma) {
  const Int D = fundamental_discriminant(d);
  for (long long q : prime_divisors(to_ll(D)))
    if (!sigma.contains(static_cast<long>(q)))
      throw std::invalid_argument("sigma " + sigma.to_string() + " misses the prime " + std::to_string(q) +
                                  " ramified in Q(sqrt " + std::to_string(d) + ")");
}

SigmaPrime sigma_prime_set(long d, const SigmaSet& sigma) {
  validate_sigma(d, sigma);
  const Int D = fundamental_discriminant(d);
  SigmaPrime out;
  if (d < 0) out.places.push_back(Place::infinity());
  for (long p : sigma.finite_primes())
    if (splitting_type(D, p) != SplittingType::split) out.places.push_back(Place::finite(p));
  out.rho = std::max(0, static_cast<int>(out.places.size()) - 1);
  return out;
}

bool is_local_norm(const Rational& x, long d, const Place& v) { return hilbert(x, Rational(d), v) == 1; }

BitMatrix hilbert_matrix(const std::vector<Rational>& generators, long d, const std::vector<Place>& places) {
  BitMatrix m(places.size(), generators.size());
  for (std::size_t r = 0; r < places.size(); ++r)
    for (std::size_t c = 0; c < generators.size(); ++c) m.set(r, c, !is_local_norm(generators[c], d, places[r]));
  return m;
}

}  // namespace quadnorm
