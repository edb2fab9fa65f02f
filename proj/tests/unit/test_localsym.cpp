#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "quadnorm/localsym.hpp"
#include "support/oracles.hpp"

using namespace quadnorm;

TEST_CASE("places and sigma sets") {
  CHECK(Place::infinity() < Place::finite(2));
  CHECK(Place::finite(2) < Place::finite(3));
  CHECK(Place::finite(7).to_string() == "7");
  CHECK_THROWS_AS(Place::finite(9), std::invalid_argument);
  const SigmaSet s({7, 2, 7});
  CHECK(s.finite_primes() == std::vector<long>{2, 7});
  CHECK(s.to_string() == "{inf,2,7}");
  CHECK(s.places().size() == 3);
  CHECK(s.with({3}).to_string() == "{inf,2,3,7}");
  CHECK_THROWS_AS(SigmaSet({4}), std::invalid_argument);
}

TEST_CASE("kronecker symbol") {
  for (long n = 1; n < 30; ++n) CHECK(kronecker(1, n) == 1);
  CHECK(kronecker(2, 7) == 1);
  CHECK(kronecker(-20, 3) == 1);
  CHECK(kronecker(-56, 5) == 1);
  CHECK_THROWS_AS(kronecker(0, 0), std::invalid_argument);
}

TEST_CASE("hilbert symbol values") {
  CHECK(hilbert(Int(-1), Int(-1), Place::infinity()) == -1);
  CHECK(hilbert(Int(-1), Int(3), Place::infinity()) == 1);
  CHECK(hilbert(Int(2), Int(-5), Place::finite(2)) == -1);
  CHECK(hilbert(Int(7), Int(-14), Place::finite(7)) == 1);
  CHECK(hilbert(Int(-1), Int(-1), Place::finite(2)) == -1);
  CHECK(hilbert(Int(-1), Int(-1), Place::finite(3)) == 1);
  CHECK(hilbert(Rational(1, 2), Rational(-5), Place::finite(2)) == -1);
  CHECK_THROWS_AS(hilbert(Int(0), Int(1), Place::finite(2)), std::invalid_argument);
}

TEST_CASE("hilbert symbol agrees with conic solvability") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> v(-20, 20);
  for (long p : {2L, 3L, 5L, 7L}) {
    for (int t = 0; t < 150; ++t) {
      const long a = v(rng), b = v(rng);
      if (a == 0 || b == 0) continue;
      CAPTURE(a);
      CAPTURE(b);
      CAPTURE(p);
      CHECK(hilbert(Int(a), Int(b), Place::finite(p)) == oracle::hilbert_brute(a, b, p));
    }
  }
}

TEST_CASE("splitting types") {
  CHECK(splitting_type(Int(-20), 2) == SplittingType::ramified);
  CHECK(splitting_type(Int(-20), 3) == SplittingType::split);
  CHECK(splitting_type(Int(-56), 5) == SplittingType::split);
  CHECK(splitting_type(Int(-56), 11) == SplittingType::inert);
  CHECK(splitting_type(Int(5), 2) == SplittingType::inert);
  CHECK(splitting_type(Int(-7), 2) == SplittingType::split);
  CHECK_THROWS_AS(splitting_type(Int(-5), 3), std::invalid_argument);
  CHECK_THROWS_AS(splitting_type(Int(-20), 4), std::invalid_argument);
  // Brute force: p splits iff x^2 = D mod 4p has a root and p does not divide D.
  for (long D : {-56L, -20L, -23L, 8L, 12L, 5L, 13L, -4L, -3L})
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
      bool root = false;
      for (long x = 0; x < 4 * p; ++x)
        if (((x * x - D) % (4 * p) + 4 * p) % (4 * p) == 0) root = true;
      const SplittingType t = splitting_type(Int(D), p);
      CAPTURE(D);
      CAPTURE(p);
      if (D % p == 0) CHECK(t == SplittingType::ramified);
      else CHECK((t == SplittingType::split) == root);
    }
}

TEST_CASE("discriminants") {
  CHECK(fundamental_discriminant(-5) == -20);
  CHECK(fundamental_discriminant(-3) == -3);
  CHECK(fundamental_discriminant(6) == 24);
  CHECK(is_fundamental_discriminant(Int(-4)));
  CHECK_FALSE(is_fundamental_discriminant(Int(-16)));
  CHECK_THROWS_AS(fundamental_discriminant(4), std::invalid_argument);
  for (long D = -200; D < 200; ++D) CHECK(is_fundamental_discriminant(Int(D)) == oracle::is_fundamental(D));
}

TEST_CASE("sigma prime sets") {
  const SigmaPrime a = sigma_prime_set(-5, SigmaSet({2, 5}));
  CHECK(a.places == std::vector<Place>{Place::infinity(), Place::finite(2), Place::finite(5)});
  CHECK(a.rho == 2);
  const SigmaPrime b = sigma_prime_set(-5, SigmaSet({2, 3, 5}));
  CHECK(b.places == a.places);
  CHECK(b.rho == 2);
  const SigmaPrime c = sigma_prime_set(2, SigmaSet({2}));
  CHECK(c.places == std::vector<Place>{Place::finite(2)});
  CHECK(c.rho == 0);
  CHECK_THROWS_AS(sigma_prime_set(-5, SigmaSet({2})), std::invalid_argument);
}

TEST_CASE("local norms and the Hilbert matrix") {
  for (const Place& v : SigmaSet({2, 3, 5}).places()) CHECK(is_local_norm(Rational(5), -5, v));
  CHECK_FALSE(is_local_norm(Rational(-1), -5, Place::infinity()));
  CHECK(is_local_norm(Rational(2), -14, Place::finite(2)));

  const std::vector<Place> sp{Place::infinity(), Place::finite(2), Place::finite(7)};
  const BitMatrix m = hilbert_matrix({Rational(-1), Rational(2), Rational(7)}, -14, sp);
  CHECK(m.column(0) == BitVec{1, 0, 1});
  CHECK(m.column(1) == BitVec{0, 0, 0});
  CHECK(m.column(2) == BitVec{0, 0, 0});
  const BitMatrix five = hilbert_matrix({Rational(5)}, -5, SigmaSet({2, 5}).places());
  CHECK(five.column(0) == BitVec{0, 0, 0});
  CHECK(hilbert_matrix({}, -5, sp).cols() == 0);
}
