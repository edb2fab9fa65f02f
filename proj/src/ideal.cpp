#include "quadnorm/ideal.hpp"

#include <stdexcept>

namespace quadnorm {

namespace {

Int delta_of(const Int& D) { return mod_floor(D, 2); }

// x = u + v omega with omega = (delta + sqrt D)/2.
struct OmegaCoords {
  Rational u, v;
};

OmegaCoords omega_coords(const QuadElement& x) {
  const Int delta = delta_of(x.discriminant());
  OmegaCoords c{Rational(Int(x.x() - x.y() * delta), x.den()), Rational(Int(2 * x.y()), x.den())};
  c.u.canonicalize();
  c.v.canonicalize();
  return c;
}

QuadElement omega(const Int& D) { return QuadElement(D, delta_of(D), 1, 2); }

Int exact_div(const Int& n, const Int& d) {
  if (!mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) throw std::logic_error("exact_div: " + n.get_str() + " / " + d.get_str());
  Int q;
  mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// (b + sqrt D)/(2c)
QuadElement step_multiplier(const Int& D, const Int& b, const Int& c) { return QuadElement(D, b, 1, 2 * c); }

bool is_reduced_real(const Int& a, const Int& b, const Int& s) {
  if (a > s) return false;
  const Int br = s - mod_floor(s - b, 2 * a);
  return br > 0 && 2 * a - br <= s;
}

// One step J = mu * J_next of the real reduction, with the middle coefficient
// chosen like the rho operator on forms.
std::pair<QuadIdeal, QuadElement> real_step(const QuadIdeal& J, const Int& s) {
  const Int& D = J.discriminant();
  const Int& a = J.a();
  Int b = J.b();
  if (a <= s) b = s - mod_floor(s - b, 2 * a);
  const Int c = exact_div(b * b - D, 4 * a);
  return {QuadIdeal(D, abs(c), -b), step_multiplier(D, b, c)};
}

}  // namespace

QuadIdeal::QuadIdeal(Int D, Int a, Int b, Rational scale)
    : D_(std::move(D)), a_(std::move(a)), b_(std::move(b)), scale_(std::move(scale)) {
  scale_.canonicalize();
  if (a_ <= 0) throw std::invalid_argument("QuadIdeal: a must be positive");
  if (scale_ <= 0) throw std::invalid_argument("QuadIdeal: scale must be positive");
  const Int r = b_ * b_ - D_;
  if (!mpz_divisible_p(r.get_mpz_t(), Int(4 * a_).get_mpz_t()))
    throw std::invalid_argument("QuadIdeal: b^2 != D mod 4a for a = " + a_.get_str() + ", b = " + b_.get_str());
  b_ += 2 * a_ * floor_div(a_ - b_, 2 * a_);
}

QuadIdeal QuadIdeal::unit(const Int& D) { return QuadIdeal(D, 1, delta_of(D)); }

QuadIdeal QuadIdeal::principal(const QuadElement& x) { return generated_by(x.discriminant(), {x}); }

QuadIdeal QuadIdeal::generated_by(const Int& D, const std::vector<QuadElement>& gens) {
  if (gens.empty()) throw std::invalid_argument("generated_by: no generators");
  const QuadElement w = omega(D);
  std::vector<OmegaCoords> coords;
  Int L = 1;
  for (const QuadElement& g : gens) {
    if (g.is_zero()) throw std::invalid_argument("generated_by: zero generator");
    if (g.discriminant() != D) throw std::invalid_argument("generated_by: element of another field");
    for (const QuadElement& h : {g, g * w}) {
      coords.push_back(omega_coords(h));
      mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), coords.back().u.get_den_mpz_t());
      mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), coords.back().v.get_den_mpz_t());
    }
  }
  IntMatrix m(coords.size(), 2);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    m(i, 0) = coords[i].v.get_num() * exact_div(L, coords[i].v.get_den());
    m(i, 1) = coords[i].u.get_num() * exact_div(L, coords[i].u.get_den());
  }
  const IntMatrix h = hnf(m);
  if (h.rows() != 2) throw std::logic_error("generated_by: lattice is not of full rank");
  const Int& v1 = h(0, 0);
  const Int a = exact_div(h(1, 1), v1);
  const Int b = 2 * exact_div(h(0, 1), v1) + delta_of(D);
  return QuadIdeal(D, a, b, Rational(v1, L));
}

Rational QuadIdeal::norm() const {
  Rational n = scale_ * scale_ * Rational(a_);
  n.canonicalize();
  return n;
}

bool QuadIdeal::is_integral() const { return scale_.get_den() == 1; }

QuadForm QuadIdeal::form() const { return form_from(D_, a_, b_); }

QuadIdeal QuadIdeal::conj() const { return QuadIdeal(D_, a_, -b_, scale_); }

// [a, beta][a, conj(beta)] = a O
QuadIdeal QuadIdeal::inverse() const { return QuadIdeal(D_, a_, -b_, 1 / (scale_ * a_)); }

bool QuadIdeal::contains(const QuadElement& x) const {
  if (x.discriminant() != D_) throw std::invalid_argument("contains: element of another field");
  const QuadElement t = x * QuadElement::rational(D_, 1 / scale_);
  const OmegaCoords c = omega_coords(t);
  if (c.v.get_den() != 1) return false;
  Rational rest = c.u - c.v * Rational(Int((b_ - delta_of(D_)) / 2));
  rest /= a_;
  rest.canonicalize();
  return rest.get_den() == 1;
}

QuadIdeal QuadIdeal::operator*(const QuadIdeal& rhs) const {
  if (D_ != rhs.D_) throw std::invalid_argument("QuadIdeal: ideals of different fields");
  const QuadForm f = compose(form(), rhs.form());
  const Int d = gcd(gcd(a_, rhs.a_), (b_ + rhs.b_) / 2);
  return QuadIdeal(D_, f.a, f.b, scale_ * rhs.scale_ * Rational(d));
}

QuadIdeal QuadIdeal::pow(unsigned k) const {
  QuadIdeal acc = unit(D_);
  for (unsigned i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

std::string QuadIdeal::to_string() const {
  std::string core = "[" + a_.get_str() + ", (" + b_.get_str() + "+sqrt(" + D_.get_str() + "))/2]";
  if (scale_ == 1) return core;
  return quadnorm::to_string(scale_) + "*" + core;
}

ReducedIdeal reduce_ideal(const QuadIdeal& I) {
  const Int& D = I.discriminant();
  QuadElement gamma = QuadElement::rational(D, I.scale());
  QuadIdeal J(D, I.a(), I.b());
  if (D < 0) {
    for (;;) {
      const Int c = exact_div(J.b() * J.b() - D, 4 * J.a());
      if (J.a() > c || (J.a() == c && J.b() < 0)) {
        gamma = gamma * step_multiplier(D, J.b(), c);
        J = QuadIdeal(D, c, -J.b());
        continue;
      }
      return ReducedIdeal{J, gamma};
    }
  }
  const Int s = isqrt(D);
  const std::size_t limit = 64 + 8 * mpz_sizeinbase(J.a().get_mpz_t(), 2) + 8 * mpz_sizeinbase(D.get_mpz_t(), 2);
  for (std::size_t steps = 0; !is_reduced_real(J.a(), J.b(), s); ++steps) {
    if (steps > limit) throw std::logic_error("reduce_ideal: no reduced ideal reached from " + I.to_string());
    auto [next, mu] = real_step(J, s);
    gamma = gamma * mu;
    J = next;
  }
  return ReducedIdeal{J, gamma};
}

QuadElement fundamental_unit(const QuadField& k) {
  if (!k.is_real()) throw std::domain_error("fundamental_unit: " + k.to_string() + " is imaginary");
  const Int& D = k.discriminant();
  const Int s = isqrt(D);
  const Int b0 = delta_of(D);
  Int P = b0, Q = 2;
  Int p_prev = 1, p = 0, q_prev = 0, q = 1;  // p_{k-1}, p_{k-2} style seeds
  for (long step = 0;; ++step) {
    const Int a = floor_div(P + s, Q);
    const Int p_next = a * p_prev + p;
    const Int q_next = a * q_prev + q;
    p = p_prev;
    q = q_prev;
    p_prev = p_next;
    q_prev = q_next;
    P = a * Q - P;
    Q = exact_div(D - P * P, Q);
    if (Q == 2) break;
    if (step > 1000000) throw std::logic_error("fundamental_unit: continued fraction period not found");
  }
  // eps = p - q * conj(omega) with (p, q) the last convergent of the period.
  const QuadElement eps(D, 2 * p_prev - q_prev * b0, q_prev, 2);
  if (!eps.is_unit()) throw std::logic_error("fundamental_unit: " + eps.to_string() + " is not a unit");
  return eps;
}

std::optional<QuadElement> principal_generator(const QuadField& k, const QuadIdeal& I) {
  const Int& D = k.discriminant();
  if (I.discriminant() != D) throw std::invalid_argument("principal_generator: ideal of another field");
  const ReducedIdeal r = reduce_ideal(I);
  std::optional<QuadElement> g;
  if (k.is_imaginary()) {
    if (r.ideal.a() == 1) g = r.gamma;
  } else {
    const Int s = isqrt(D);
    const QuadIdeal one = QuadIdeal::unit(D);
    QuadIdeal J = one;
    QuadElement theta(D, 1);  // O = theta * J
    for (std::size_t steps = 0;; ++steps) {
      if (J == r.ideal) {
        g = r.gamma / theta;
        break;
      }
      auto [next, mu] = real_step(J, s);
      theta = theta * mu;
      J = next;
      if (J == one) break;
      if (steps > 1000000) throw std::logic_error("principal_generator: cycle did not close");
    }
  }
  if (g) {
    if (!I.contains(*g) || abs(g->norm()) != I.norm())
      throw std::logic_error("principal_generator: " + g->to_string() + " does not generate " + I.to_string());
  }
  return g;
}

std::vector<PrimeIdeal> primes_above(const QuadField& k, long p) {
  const Int& D = k.discriminant();
  const SplittingType t = splitting_type(D, p);
  if (t == SplittingType::inert) return {PrimeIdeal{QuadIdeal(D, 1, delta_of(D), Rational(p)), p, t}};
  const Int four_p = 4 * Int(p);
  for (Int b = delta_of(D); b <= p; b += 2) {
    if (!mpz_divisible_p(Int(b * b - D).get_mpz_t(), four_p.get_mpz_t())) continue;
    const QuadIdeal P(D, p, b);
    if (t == SplittingType::ramified) return {PrimeIdeal{P, p, t}};
    return {PrimeIdeal{P, p, t}, PrimeIdeal{P.conj(), p, t}};
  }
  throw std::logic_error("primes_above: no square root of D mod 4p");
}

long valuation(const QuadElement& x, const PrimeIdeal& P) {
  if (x.is_zero()) throw std::domain_error("valuation: zero element");
  const Int& D = x.discriminant();
  const QuadElement alpha(D, x.x(), x.y());
  const long from_den = static_cast<long>(quadnorm::valuation(x.den(), P.p)) * P.e();
  const Rational n = alpha.norm();
  const long bound = static_cast<long>(quadnorm::valuation(abs(n.get_num()), P.p));
  QuadIdeal power = QuadIdeal::unit(D);
  long k = 0;
  while (k < bound) {
    power = power * P.ideal;
    if (!power.contains(alpha)) break;
    ++k;
  }
  return k - from_den;
}

}  // namespace quadnorm
