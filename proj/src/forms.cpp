#include "quadnorm/forms.hpp"

#include <stdexcept>

namespace quadnorm {

namespace {

IntMatrix translation(const Int& k) {
  IntMatrix m = IntMatrix::identity(2);
  m(0, 1) = k;
  return m;
}

const IntMatrix& swap_matrix() {
  static const IntMatrix s{{0, -1}, {1, 0}};
  return s;
}

}  // namespace

bool QuadForm::is_primitive() const {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g == 1;
}

QuadForm QuadForm::transform(const IntMatrix& m) const {
  const Int& al = m(0, 0);
  const Int& be = m(0, 1);
  const Int& ga = m(1, 0);
  const Int& de = m(1, 1);
  return QuadForm{a * al * al + b * al * ga + c * ga * ga,
                  2 * a * al * be + b * (al * de + be * ga) + 2 * c * ga * de,
                  a * be * be + b * be * de + c * de * de};
}

std::string QuadForm::to_string() const { return "(" + a.get_str() + "," + b.get_str() + "," + c.get_str() + ")"; }

QuadForm principal_form(const Int& D) {
  const Int b = mod_floor(D, 2);
  return QuadForm{1, b, (b * b - D) / 4};
}

QuadForm form_from(const Int& D, const Int& a, const Int& b) {
  const Int num = b * b - D;
  const Int den = 4 * a;
  if (a == 0 || !mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw std::invalid_argument("form_from: b^2 - D is not divisible by 4a");
  Int c;
  mpz_divexact(c.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return QuadForm{a, b, c};
}

bool is_reduced(const QuadForm& f) {
  const Int D = f.discriminant();
  if (D < 0) {
    if (f.a <= 0) return false;
    if (abs(f.b) > f.a || f.a > f.c) return false;
    if ((abs(f.b) == f.a || f.a == f.c) && f.b < 0) return false;
    return true;
  }
  const Int s = isqrt(D);
  const Int twice_a = 2 * abs(f.a);
  return f.b > 0 && f.b <= s && twice_a + f.b >= s + 1 && twice_a - f.b <= s;
}

ReducedForm rho(const QuadForm& f) {
  const Int D = f.discriminant();
  if (D <= 0) throw std::invalid_argument("rho: indefinite forms only");
  const Int s = isqrt(D);
  const Int ac = abs(f.c);
  const Int twice = 2 * ac;
  Int nb;
  if (ac <= s) nb = s - mod_floor(s + f.b, twice);
  else nb = -f.b + twice * floor_div(ac + f.b, twice);
  // (c, -b, a) translated so the middle coefficient becomes nb.
  Int k;
  const Int shift = nb + f.b;
  mpz_divexact(k.get_mpz_t(), shift.get_mpz_t(), Int(2 * f.c).get_mpz_t());
  const IntMatrix m = swap_matrix() * translation(k);
  return ReducedForm{form_from(D, f.c, nb), m};
}

ReducedForm reduce_form(const QuadForm& input) {
  const Int D = input.discriminant();
  if (D == 0 || is_perfect_square(D)) throw std::invalid_argument("reduce_form: discriminant must not be a square");
  QuadForm f = input;
  IntMatrix m = IntMatrix::identity(2);
  if (D < 0) {
    if (f.a < 0) throw std::invalid_argument("reduce_form: negative definite form");
    for (;;) {
      const Int k = floor_div(f.a - f.b, 2 * f.a);
      if (k != 0) {
        const IntMatrix t = translation(k);
        f = f.transform(t);
        m = m * t;
      }
      if (f.a > f.c || (f.a == f.c && f.b < 0)) {
        f = QuadForm{f.c, -f.b, f.a};
        m = m * swap_matrix();
        continue;
      }
      break;
    }
    return ReducedForm{f, m};
  }
  // Each rho step shrinks |a| until the form is reduced; the bound is generous.
  const std::size_t limit = 64 + 4 * mpz_sizeinbase(f.a.get_mpz_t(), 2) + 4 * mpz_sizeinbase(f.c.get_mpz_t(), 2) +
                            4 * mpz_sizeinbase(D.get_mpz_t(), 2);
  std::size_t steps = 0;
  while (!is_reduced(f)) {
    if (++steps > limit) throw std::logic_error("reduce_form: rho iteration did not terminate for " + input.to_string());
    const ReducedForm r = rho(f);
    f = r.form;
    m = m * r.transform;
  }
  return ReducedForm{f, m};
}

QuadForm compose(const QuadForm& f, const QuadForm& g) {
  const Int D = f.discriminant();
  if (D != g.discriminant()) throw std::invalid_argument("compose: forms of different discriminants");
  const Int s = (f.b + g.b) / 2;
  Int u1, v1, x, w;
  const Int d1 = xgcd(f.a, g.a, u1, v1);
  const Int d = xgcd(d1, s, x, w);
  const Int v = x * v1;
  Int a3;
  mpz_divexact(a3.get_mpz_t(), Int(f.a * g.a).get_mpz_t(), Int(d * d).get_mpz_t());
  Int a2d;
  mpz_divexact(a2d.get_mpz_t(), g.a.get_mpz_t(), d.get_mpz_t());
  Int b3 = g.b + 2 * a2d * (v * (s - g.b) - w * g.c);
  b3 = mod_floor(b3, 2 * abs(a3));
  return form_from(D, a3, b3);
}

std::vector<QuadForm> reduced_forms(const Int& D) {
  if (D == 0 || is_perfect_square(D)) throw std::invalid_argument("reduced_forms: discriminant must not be a square");
  std::vector<QuadForm> out;
  const Int parity = mod_floor(D, 2);
  if (D < 0) {
    for (Int a = 1; 3 * a * a <= -D; ++a) {
      for (Int b = -a + 1; b <= a; ++b) {
        if (mod_floor(b, 2) != parity) continue;
        const Int num = b * b - D;
        if (!mpz_divisible_p(num.get_mpz_t(), Int(4 * a).get_mpz_t())) continue;
        const QuadForm f = form_from(D, a, b);
        if (f.c < a || (f.c == a && b < 0)) continue;
        if (f.is_primitive()) out.push_back(f);
      }
    }
    return out;
  }
  const Int s = isqrt(D);
  for (Int b = 1; b <= s; ++b) {
    if (mod_floor(b, 2) != parity) continue;
    const Int n = (D - b * b) / 4;  // = -ac > 0
    for (Int a = 1; 2 * a <= s + b; ++a) {
      if (2 * a + b < s + 1) continue;
      if (!mpz_divisible_p(n.get_mpz_t(), a.get_mpz_t())) continue;
      for (int sign : {1, -1}) {
        const QuadForm f = form_from(D, Int(sign * a), b);
        if (f.is_primitive()) out.push_back(f);
      }
    }
  }
  return out;
}

}  // namespace quadnorm
