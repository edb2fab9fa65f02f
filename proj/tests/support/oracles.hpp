#pragma once
// Brute-force reference computations used only by the tests. None of these
// call into the algorithms they are used to check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "quadnorm/abgroup.hpp"

namespace oracle {

using quadnorm::Element;
using quadnorm::FinAbGroup;
using quadnorm::Int;

// ---------------------------------------------------------------- groups

inline std::vector<Element> elements(const FinAbGroup& g) {
  std::vector<Element> out{Element(g.ngens(), 0)};
  for (std::size_t i = 0; i < g.ngens(); ++i) {
    const long n = g.invariant_factors()[i].get_si();
    std::vector<Element> next;
    for (const Element& e : out)
      for (long k = 0; k < n; ++k) {
        Element x = e;
        x[i] = k;
        next.push_back(x);
      }
    out = std::move(next);
  }
  return out;
}

inline std::vector<long> key(const FinAbGroup& g, const Element& x) {
  const Element r = g.reduce(x);
  std::vector<long> k;
  for (const Int& v : r) k.push_back(v.get_si());
  return k;
}

inline std::set<std::vector<long>> image_set(const quadnorm::AbHom& f) {
  std::set<std::vector<long>> s;
  for (const Element& x : elements(f.domain())) s.insert(key(f.codomain(), f(x)));
  return s;
}

inline std::set<std::vector<long>> kernel_set(const quadnorm::AbHom& f) {
  std::set<std::vector<long>> s;
  for (const Element& x : elements(f.domain()))
    if (f.codomain().is_zero(f(x))) s.insert(key(f.domain(), x));
  return s;
}

inline long count_kernel(const quadnorm::AbHom& f) { return static_cast<long>(kernel_set(f).size()); }
inline long count_image(const quadnorm::AbHom& f) { return static_cast<long>(image_set(f).size()); }

/// Image equals kernel at every interior term, by listing elements.
inline bool exact_by_enumeration(const quadnorm::ExactSequence& seq) {
  for (std::size_t i = 1; i < seq.terms.size() - 1; ++i)
    if (image_set(seq.maps[i - 1]) != kernel_set(seq.maps[i])) return false;
  return true;
}

/// A random finite group given by cyclic factors with product <= max_order.
inline FinAbGroup random_group(std::mt19937& rng, long max_order) {
  std::vector<Int> orders;
  long total = 1;
  std::uniform_int_distribution<long> pick(2, 8);
  std::uniform_int_distribution<int> count(0, 3);
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    const long c = pick(rng);
    if (total * c > max_order) break;
    total *= c;
    orders.push_back(c);
  }
  return FinAbGroup::from_orders(orders);
}

/// A random homomorphism: generator i (of order n_i) goes to an element killed by n_i.
inline quadnorm::AbHom random_hom(std::mt19937& rng, const FinAbGroup& a, const FinAbGroup& b) {
  const std::vector<Element> all = elements(b);
  std::vector<Element> cols;
  for (std::size_t i = 0; i < a.ngens(); ++i) {
    const Int& n = a.invariant_factors()[i];
    std::vector<Element> ok;
    for (const Element& y : all)
      if (b.is_zero(b.scale(y, n))) ok.push_back(y);
    cols.push_back(ok[std::uniform_int_distribution<std::size_t>(0, ok.size() - 1)(rng)]);
  }
  return quadnorm::AbHom(a, b, quadnorm::IntMatrix::from_columns(b.ngens(), cols));
}

// ---------------------------------------------------------------- symbols

inline long squarefree_part(long a) {
  long s = a < 0 ? -1 : 1;
  long m = a < 0 ? -a : a;
  for (long q = 2; q * q <= m; ++q)
    while (m % (q * q) == 0) m /= q * q;
  return s * m;
}

/// a x^2 + b y^2 = z^2 has a primitive solution modulo p^k. For squarefree
/// a, b this decides solvability over Q_p with k = 3 (p odd) or k = 6 (p = 2).
inline bool conic_solvable_mod(long a, long b, long p, int k) {
  long m = 1;
  for (int i = 0; i < k; ++i) m *= p;
  auto md = [m](long x) { return ((x % m) + m) % m; };
  std::vector<std::uint8_t> any_square(m, 0), unit_square(m, 0);
  std::vector<long> unit_sq, nonunit_sq;
  {
    std::set<long> us, ns;
    for (long z = 0; z < m; ++z) {
      const long s = z * z % m;
      any_square[s] = 1;
      if (z % p) unit_square[s] = 1, us.insert(s);
      else ns.insert(s);
    }
    unit_sq.assign(us.begin(), us.end());
    nonunit_sq.assign(ns.begin(), ns.end());
  }
  // (x, y) with x or y a unit: z is free. Both divisible by p: z must be a unit.
  for (long qx : unit_sq) {
    for (long qy : unit_sq)
      if (any_square[md(a * qx + b * qy)]) return true;
    for (long qy : nonunit_sq)
      if (any_square[md(a * qx + b * qy)]) return true;
  }
  for (long qx : nonunit_sq) {
    for (long qy : unit_sq)
      if (any_square[md(a * qx + b * qy)]) return true;
    for (long qy : nonunit_sq)
      if (unit_square[md(a * qx + b * qy)]) return true;
  }
  return false;
}

/// Hilbert symbol at a finite prime by conic solvability.
inline int hilbert_brute(long a, long b, long p) {
  static std::map<std::tuple<long, long, long>, int> memo;
  const long sa = squarefree_part(a), sb = squarefree_part(b);
  const auto key = std::make_tuple(sa, sb, p);
  const auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  const int r = conic_solvable_mod(sa, sb, p, p == 2 ? 6 : 3) ? 1 : -1;
  memo[key] = r;
  return r;
}

// ---------------------------------------------------------------- forms

inline long gcd3(long a, long b, long c) { return std::gcd(std::gcd(std::labs(a), std::labs(b)), std::labs(c)); }

/// Number of primitive reduced positive definite forms of discriminant D < 0.
inline long count_reduced_forms(long D) {
  long h = 0;
  for (long a = 1; 3 * a * a <= -D; ++a)
    for (long b = -a + 1; b <= a; ++b) {
      const long num = b * b - D;
      if (num % (4 * a)) continue;
      const long c = num / (4 * a);
      if (c < a) continue;
      if (c == a && b < 0) continue;
      if (gcd3(a, b, c) == 1) ++h;
    }
  return h;
}

inline bool is_fundamental(long D) {
  auto sqfree = [](long m) {
    m = std::labs(m);
    for (long q = 2; q * q <= m; ++q)
      if (m % (q * q) == 0) return false;
    return true;
  };
  const long r = ((D % 4) + 4) % 4;
  if (r == 1) return D != 1 && sqfree(D);
  if (r != 0) return false;
  const long m = D / 4;
  const long rm = ((m % 4) + 4) % 4;
  return (rm == 2 || rm == 3) && sqfree(m);
}

// ---------------------------------------------------------------- lattices

/// Hermite form (a, b0, c) of the Z-lattice spanned by integer vectors (u, v),
/// meaning the lattice is {(u, v)} = Z (a, 0) + Z (b0, c), 0 <= b0 < a, c > 0.
struct Lattice2 {
  Int a, b0, c;
  bool operator==(const Lattice2&) const = default;
};

inline Lattice2 lattice_hnf(std::vector<std::pair<Int, Int>> vs) {
  // Euclid on the second coordinate, then on the first.
  Lattice2 out{0, 0, 0};
  std::pair<Int, Int> pivot{0, 0};
  std::vector<std::pair<Int, Int>> rest;
  for (auto& v : vs) {
    if (v.second == 0) {
      rest.push_back(v);
      continue;
    }
    if (pivot.second == 0) {
      pivot = v;
      continue;
    }
    while (v.second != 0) {
      const Int q = pivot.second / v.second;
      pivot.first -= q * v.first;
      pivot.second -= q * v.second;
      std::swap(pivot, v);
    }
    rest.push_back(v);
  }
  if (pivot.second < 0) pivot.first = -pivot.first, pivot.second = -pivot.second;
  Int g = 0;
  for (auto& v : rest) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.first.get_mpz_t());
  out.a = g;
  out.c = pivot.second;
  out.b0 = g == 0 ? pivot.first : Int(((pivot.first % g) + g) % g);
  return out;
}

}  // namespace oracle
