#include "quadnorm/field.hpp"

#include <cstdlib>
#include <stdexcept>

#include "quadnorm/localsym.hpp"

namespace quadnorm {

QuadField::QuadField(long d) : d_(d) {
  if (d == 0 || d == 1 || !is_squarefree(d))
    throw std::invalid_argument("d = " + std::to_string(d) + " must be squarefree and not 0 or 1");
  if (std::labs(d) > kMaxAbsD)
    throw EnvelopeError("|d| = " + std::to_string(std::labs(d)) + " exceeds the supported bound " + std::to_string(kMaxAbsD));
  D_ = fundamental_discriminant(d);
  s_ = isqrt(Int(abs(D_)));
}

int QuadField::torsion_order() const {
  if (d_ == -1) return 4;
  if (d_ == -3) return 6;
  return 2;
}

QuadElement QuadField::torsion_generator() const {
  if (d_ == -1) return QuadElement(D_, 0, 1, 2);  // sqrt(-4)/2 = i
  if (d_ == -3) return QuadElement(D_, 1, 1, 2);
  return QuadElement(D_, -1);
}

std::string QuadField::to_string() const { return "Q(sqrt(" + std::to_string(d_) + "))"; }

QuadField field(long d) { return QuadField(d); }

void check_envelope(long d, const SigmaSet& sigma) {
  if (std::labs(d) > kMaxAbsD)
    throw EnvelopeError("|d| = " + std::to_string(std::labs(d)) + " exceeds the supported bound " + std::to_string(kMaxAbsD));
  const Int D = fundamental_discriminant(d);
  for (long p : sigma.finite_primes())
    if (p > kMaxSigmaPrime && !mpz_divisible_ui_p(D.get_mpz_t(), static_cast<unsigned long>(p)))
      throw EnvelopeError("unramified sigma prime " + std::to_string(p) + " exceeds the supported bound " +
                          std::to_string(kMaxSigmaPrime));
}

// ---------------------------------------------------------------- elements

QuadElement::QuadElement(Int D, Int x, Int y, Int den)
    : D_(std::move(D)), x_(std::move(x)), y_(std::move(y)), den_(std::move(den)) {
  normalize();
}

QuadElement QuadElement::rational(const Int& D, const Rational& q) { return QuadElement(D, q.get_num(), 0, q.get_den()); }

QuadElement QuadElement::sqrt_d(const QuadField& k) {
  const Int f = k.discriminant() == k.d() ? Int(1) : Int(2);
  return QuadElement(k.discriminant(), 0, 1, f);
}

void QuadElement::normalize() {
  if (den_ == 0) throw std::domain_error("QuadElement: zero denominator");
  if (den_ < 0) {
    x_ = -x_;
    y_ = -y_;
    den_ = -den_;
  }
  Int g;
  mpz_gcd(g.get_mpz_t(), x_.get_mpz_t(), y_.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_.get_mpz_t());
  if (g > 1) {
    mpz_divexact(x_.get_mpz_t(), x_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(y_.get_mpz_t(), y_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

QuadElement QuadElement::conj() const { return QuadElement(D_, x_, -y_, den_); }

Rational QuadElement::norm() const {
  Rational n(Int(x_ * x_ - y_ * y_ * D_), Int(den_ * den_));
  n.canonicalize();
  return n;
}

Rational QuadElement::trace() const {
  Rational t(Int(2 * x_), den_);
  t.canonicalize();
  return t;
}

bool QuadElement::is_integral() const { return trace().get_den() == 1 && norm().get_den() == 1; }

bool QuadElement::is_unit() const { return is_integral() && abs(norm()) == 1; }

QuadElement QuadElement::operator*(const QuadElement& rhs) const {
  if (D_ != rhs.D_) throw std::invalid_argument("QuadElement: elements of different fields");
  return QuadElement(D_, x_ * rhs.x_ + y_ * rhs.y_ * D_, x_ * rhs.y_ + y_ * rhs.x_, den_ * rhs.den_);
}

QuadElement QuadElement::operator+(const QuadElement& rhs) const {
  if (D_ != rhs.D_) throw std::invalid_argument("QuadElement: elements of different fields");
  return QuadElement(D_, x_ * rhs.den_ + rhs.x_ * den_, y_ * rhs.den_ + rhs.y_ * den_, den_ * rhs.den_);
}

QuadElement QuadElement::operator-(const QuadElement& rhs) const { return *this + (-rhs); }

QuadElement QuadElement::operator-() const { return QuadElement(D_, -x_, -y_, den_); }

QuadElement QuadElement::inverse() const {
  if (is_zero()) throw std::domain_error("QuadElement: inverse of zero");
  return QuadElement(D_, x_ * den_, -y_ * den_, x_ * x_ - y_ * y_ * D_);
}

QuadElement QuadElement::pow(long long k) const {
  QuadElement base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1 : static_cast<unsigned long long>(k);
  QuadElement acc(D_, 1);
  while (e) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

bool QuadElement::operator==(const QuadElement& rhs) const {
  return D_ == rhs.D_ && x_ == rhs.x_ && y_ == rhs.y_ && den_ == rhs.den_;
}

int sign_of(const Int& x, const Int& y, const Int& D) {
  const int sx = sgn(x);
  const int sy = sgn(y);
  if (sy == 0) return sx;
  if (sx == 0 || sx == sy) return sy;
  const Int lhs = x * x;
  const Int rhs = y * y * D;
  if (lhs == rhs) throw std::logic_error("sign_of: D is a perfect square");
  return lhs > rhs ? sx : sy;
}

int QuadElement::sign() const {
  if (D_ < 0) throw std::domain_error("sign: imaginary field has no real place");
  return sign_of(x_, y_, D_);
}

bool QuadElement::exceeds_one_in_absolute_value() const {
  if (D_ < 0) throw std::domain_error("exceeds_one_in_absolute_value: imaginary field");
  return sign_of(x_ - den_, y_, D_) > 0 || sign_of(x_ + den_, y_, D_) < 0;
}

std::string QuadElement::to_string() const {
  // D = f^2 d with f in {1, 2}.
  const Int f = (D_ % 4 == 0) ? Int(2) : Int(1);
  const Int d = D_ / (f * f);
  Rational a(x_, den_), b(Int(y_ * f), den_);
  a.canonicalize();
  b.canonicalize();
  if (b == 0) return a.get_str();
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
  const Int A = a.get_num() * (l / a.get_den());
  const Int B = b.get_num() * (l / b.get_den());
  const std::string root = "sqrt(" + d.get_str() + ")";
  std::string bterm = B == 1 ? root : B == -1 ? "-" + root : B.get_str() + "*" + root;
  std::string num;
  if (A != 0) num = A.get_str() + (B > 0 ? "+" : "") + bterm;
  else num = bterm;
  if (l == 1) return num;
  return (A != 0 ? "(" + num + ")" : num) + "/" + l.get_str();
}

}  // namespace quadnorm
