#pragma once

// Local arithmetic over Q: residue symbols, Hilbert symbols at every place,
// splitting of primes in Q(sqrt d), and the places where K/Q is nonsplit.

#include <compare>
#include <string>
#include <vector>

#include "quadnorm/f2.hpp"
#include "quadnorm/integer.hpp"

namespace quadnorm {

class Place {
 public:
  static Place infinity() { return Place(Kind::infinite, 0); }
  /// Throws std::invalid_argument unless p is prime.
  static Place finite(long p);

  bool is_infinite() const { return kind_ == Kind::infinite; }
  long prime() const { return p_; }
  std::string to_string() const;

  // The infinite place sorts first.
  auto operator<=>(const Place&) const = default;

 private:
  enum class Kind { infinite = 0, finite = 1 };
  Place(Kind k, long p) : kind_(k), p_(p) {}
  Kind kind_;
  long p_;
};

/// A finite set of places of Q that always contains the infinite place.
class SigmaSet {
 public:
  SigmaSet() = default;
  /// Sorted and deduplicated; throws std::invalid_argument on a non-prime.
  explicit SigmaSet(std::vector<long> finite_primes);

  const std::vector<long>& finite_primes() const { return primes_; }
  bool contains(long p) const;
  std::vector<Place> places() const;
  SigmaSet with(const std::vector<long>& more) const;
  /// "{inf,2,7}"
  std::string to_string() const;

  bool operator==(const SigmaSet&) const = default;
  auto operator<=>(const SigmaSet&) const = default;

 private:
  std::vector<long> primes_;
};

/// Kronecker symbol (a | n); throws std::invalid_argument when a = n = 0.
int kronecker(const Int& a, const Int& n);

/// Hilbert symbol (a, b)_v in {+1, -1}; a, b nonzero.
int hilbert(const Int& a, const Int& b, const Place& v);
int hilbert(const Rational& a, const Rational& b, const Place& v);

enum class SplittingType { split, inert, ramified };
std::string to_string(SplittingType t);

bool is_fundamental_discriminant(const Int& D);
/// D = d when d = 1 mod 4, else 4d. Throws for d not squarefree or d in {0, 1}.
Int fundamental_discriminant(long d);

/// Throws std::invalid_argument for a non-fundamental D or non-prime p.
SplittingType splitting_type(const Int& D, long p);

/// Throws std::invalid_argument when sigma misses a prime ramified in Q(sqrt d).
void validate_sigma(long d, const SigmaSet& sigma);

struct SigmaPrime {
  std::vector<Place> places;  // infinite place first, then primes ascending
  int rho = 0;
};

SigmaPrime sigma_prime_set(long d, const SigmaSet& sigma);

bool is_local_norm(const Rational& x, long d, const Place& v);

/// Entry (v, g) is 1 when g is not a local norm from Q_v(sqrt d), else 0.
BitMatrix hilbert_matrix(const std::vector<Rational>& generators, long d, const std::vector<Place>& places);

}  // namespace quadnorm
