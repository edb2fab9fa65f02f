#include "quadnorm/units.hpp"

#include <algorithm>
#include <stdexcept>

namespace quadnorm {

namespace {

// Sector [0, 2 pi / w) for imaginary fields; positivity for real ones.
bool is_normalized(const QuadField& k, const QuadElement& x) {
  if (k.is_real()) return x.sign() > 0;
  const Int& X = x.x();
  const Int& Y = x.y();
  switch (k.torsion_order()) {
    case 4:
      return X > 0 && Y >= 0;
    case 6:
      return Y >= 0 && Y < X;
    default:
      return Y > 0 || (Y == 0 && X > 0);
  }
}

// Kernel of Z^n -> C_K as rows whose last nonzero entry is a positive pivot,
// sorted by pivot position.
IntMatrix lower_lattice_basis(const FinAbGroup& cl, const std::vector<Element>& classes) {
  const std::size_t n = classes.size();
  if (n == 0) return IntMatrix(0, 0);
  const std::size_t m = cl.ngens();
  IntMatrix map(m, n + m);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i) map(i, j) = classes[j][i];
  for (std::size_t i = 0; i < m; ++i) map(i, n + i) = cl.invariant_factors()[i];
  const IntMatrix ker = integer_kernel(map);
  IntMatrix reversed(ker.cols(), n);
  for (std::size_t r = 0; r < ker.cols(); ++r)
    for (std::size_t j = 0; j < n; ++j) reversed(r, j) = ker(n - 1 - j, r);
  const IntMatrix h = hnf(reversed);
  if (h.rows() != n) throw std::logic_error("s-units: class map kernel has the wrong rank");
  IntMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j < n; ++j) out(n - 1 - r, j) = h(r, n - 1 - j);
  return out;
}

}  // namespace

QuadElement normalize_associate(const QuadField& k, const QuadElement& x) {
  if (x.is_zero()) throw std::domain_error("normalize_associate: zero element");
  const QuadElement zeta = k.torsion_generator();
  QuadElement y = x;
  for (int i = 0; i < k.torsion_order(); ++i) {
    if (is_normalized(k, y)) return y;
    y = y * zeta;
  }
  throw std::logic_error("normalize_associate: no associate of " + x.to_string() + " is normalized");
}

FinAbGroup SUnitGroup::abstract_group() const {
  std::vector<Int> factors{Int(torsion_order)};
  factors.resize(1 + free_gens.size(), 0);
  std::vector<std::string> labels{torsion_gen.to_string()};
  for (const QuadElement& g : free_gens) labels.push_back(g.to_string());
  return FinAbGroup(std::move(factors), std::move(labels));
}

std::vector<QuadElement> SUnitGroup::generators() const {
  std::vector<QuadElement> out{torsion_gen};
  out.insert(out.end(), free_gens.begin(), free_gens.end());
  return out;
}

std::vector<long> SUnitGroup::valuations(const QuadElement& x) const {
  std::vector<long> v;
  for (const PrimeIdeal& P : places) v.push_back(valuation(x, P));
  return v;
}

Element SUnitGroup::dlog(const QuadElement& x) const {
  if (x.is_zero() || x.discriminant() != field.discriminant())
    throw std::invalid_argument("dlog: " + x.to_string() + " is not a nonzero element of " + field.to_string());
  const Rational n = x.norm();
  for (const Int& part : {Int(abs(n.get_num())), Int(n.get_den())})
    for (long long p : prime_divisors(to_ll(part)))
      if (!sigma.contains(static_cast<long>(p)))
        throw std::invalid_argument("dlog: " + x.to_string() + " is not a unit away from " + sigma.to_string());
  const std::vector<long> vals = valuations(x);
  const std::size_t n_places = places.size();
  Element target(n_places);
  for (std::size_t i = 0; i < n_places; ++i) target[i] = vals[i];
  Element c(n_places, 0);
  if (n_places) {
    const auto sol = solve_integer(lattice_basis.transpose(), target);
    if (!sol) throw std::invalid_argument("dlog: valuations of " + x.to_string() + " are not a principal divisor");
    c = *sol;
  }
  const std::size_t offset = field.is_real() ? 1 : 0;
  QuadElement u = x;
  for (std::size_t i = 0; i < n_places; ++i) u = u / free_gens[offset + i].pow(to_ll(c[i]));
  if (!u.is_unit()) throw std::logic_error("dlog: quotient " + u.to_string() + " is not a unit");
  Int m = 0;
  if (field.is_real()) {
    const QuadElement& eps = free_gens[0];
    const QuadElement eps_inv = eps.inverse();
    for (int guard = 0; u.exceeds_one_in_absolute_value() || u.inverse().exceeds_one_in_absolute_value(); ++guard) {
      if (guard > 100000) throw std::logic_error("dlog: unit exponent search did not terminate");
      if (u.exceeds_one_in_absolute_value()) {
        u = u * eps_inv;
        ++m;
      } else {
        u = u * eps;
        --m;
      }
    }
  }
  Element out{Int(-1)};
  QuadElement z(field.discriminant(), 1);
  for (int j = 0; j < torsion_order; ++j) {
    if (z == u) {
      out[0] = j;
      break;
    }
    z = z * torsion_gen;
  }
  if (out[0] < 0) throw std::logic_error("dlog: " + u.to_string() + " is not a root of unity");
  if (field.is_real()) out.push_back(m);
  out.insert(out.end(), c.begin(), c.end());
  return out;
}

QuadElement SUnitGroup::element(const Element& coords) const {
  if (coords.size() != 1 + free_gens.size()) throw std::invalid_argument("element: wrong number of coordinates");
  QuadElement x = torsion_gen.pow(to_ll(mod_floor(coords[0], torsion_order)));
  for (std::size_t i = 0; i < free_gens.size(); ++i) x = x * free_gens[i].pow(to_ll(coords[i + 1]));
  return x;
}

SUnitGroup s_unit_group(const QuadField& k, const SigmaSet& sigma) { return s_unit_group(ClassGroup(k), sigma); }

SUnitGroup s_unit_group(const ClassGroup& cl, const SigmaSet& sigma) {
  const QuadField& k = cl.field();
  validate_sigma(k.d(), sigma);
  check_envelope(k.d(), sigma);
  SUnitGroup out{k, sigma, sigma_primes(k, sigma), k.torsion_generator(), k.torsion_order(), {}, {}, {}};
  std::vector<Element> classes;
  for (const PrimeIdeal& P : out.places) classes.push_back(cl.class_of(P.ideal));
  out.lattice_basis = lower_lattice_basis(cl.group(), classes);
  const std::size_t n = out.places.size();
  if (k.is_real()) out.free_gens.push_back(normalize_associate(k, fundamental_unit(k)));
  for (std::size_t r = 0; r < n; ++r) {
    QuadIdeal I = QuadIdeal::unit(k.discriminant());
    for (std::size_t j = 0; j < n; ++j) {
      const Int& e = out.lattice_basis(r, j);
      const QuadIdeal base = e < 0 ? out.places[j].ideal.inverse() : out.places[j].ideal;
      I = I * base.pow(static_cast<unsigned>(to_ll(abs(e))));
    }
    const auto g = principal_generator(k, I);
    if (!g) throw std::logic_error("s-units: lattice ideal " + I.to_string() + " is not principal");
    out.free_gens.push_back(normalize_associate(k, *g));
  }
  out.valuation_matrix = IntMatrix(n, out.free_gens.size());
  for (std::size_t c = 0; c < out.free_gens.size(); ++c) {
    const std::vector<long> v = out.valuations(out.free_gens[c]);
    for (std::size_t r = 0; r < n; ++r) out.valuation_matrix(r, c) = v[r];
  }
  const std::size_t offset = k.is_real() ? 1 : 0;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j < n; ++j)
      if (out.valuation_matrix(j, offset + r) != out.lattice_basis(r, j))
        throw std::logic_error("s-units: generator " + out.free_gens[offset + r].to_string() + " has unexpected support");
  return out;
}

}  // namespace quadnorm
