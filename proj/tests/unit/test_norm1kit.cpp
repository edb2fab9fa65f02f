#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <json.hpp>
#include <set>

#include "quadnorm/norm1kit.hpp"

using namespace quadnorm;

namespace {

// Squarefree representatives of every element of the span of a basis.
std::set<Int> span_reps(const UnitSquareClasses& classes, const std::vector<BitVec>& basis) {
  std::set<Int> out;
  const std::size_t n = basis.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    BitVec v(classes.dimension(), 0);
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) v = add(v, basis[i]);
    out.insert(classes.representative(v));
  }
  return out;
}

std::set<Int> reps(std::initializer_list<long> xs) {
  std::set<Int> out;
  for (long x : xs) out.insert(Int(x));
  return out;
}

struct Orders {
  long c_sigma, c_fixed, h_minus1, w_over_n, coker, brauer;
};

void check_orders(const VerificationReport& r, const Orders& o) {
  CHECK(r.order_c_sigma == o.c_sigma);
  CHECK(r.order_c_fixed == o.c_fixed);
  CHECK(r.order_h_minus1 == o.h_minus1);
  CHECK(r.order_w_over_n == o.w_over_n);
  CHECK(r.coker_lambda == o.coker);
  CHECK(r.brauer_order == o.brauer);
  CHECK(r.passed());
}

}  // namespace

TEST_CASE("unit square classes") {
  const UnitSquareClasses c(SigmaSet({2, 7}));
  CHECK(c.dimension() == 3);
  CHECK(c.basis_labels() == std::vector<std::string>{"-1", "2", "7"});
  CHECK(c.vector_of(Rational(-28)) == BitVec{1, 0, 1});
  CHECK(c.vector_of(Rational(1, 8)) == BitVec{0, 1, 0});
  CHECK(c.representative(BitVec{1, 1, 1}) == -14);
  CHECK_THROWS_AS(c.vector_of(Rational(3)), std::invalid_argument);
  CHECK_THROWS_AS(c.vector_of(Rational(0)), std::invalid_argument);
}

TEST_CASE("w subgroup") {
  const SigmaProfile a = w_subgroup(-14, SigmaSet({2, 7}));
  CHECK(a.rho == 2);
  CHECK(a.e == 1);
  CHECK(a.coker_lambda_order == 2);
  CHECK(span_reps(a.classes, a.w_basis) == reps({1, 2, 7, 14}));

  const SigmaProfile b = w_subgroup(-5, SigmaSet({2, 5}));
  CHECK(b.rho == 2);
  CHECK(b.e == 2);
  CHECK(b.coker_lambda_order == 1);
  CHECK(span_reps(b.classes, b.w_basis) == reps({1, 5}));

  const SigmaProfile c = w_subgroup(-5, SigmaSet({2, 3, 5}));
  CHECK(c.rho == 2);
  CHECK(c.e == 2);
  CHECK(c.coker_lambda_order == 1);
  CHECK(span_reps(c.classes, c.w_basis) == reps({1, 5, 6, 30}));

  CHECK_THROWS_AS(w_subgroup(-5, SigmaSet({2})), std::invalid_argument);
}

TEST_CASE("norm image") {
  const QuadField k(-5);
  const SigmaSet s1({2, 5}), s2({2, 3, 5});
  CHECK(span_reps(UnitSquareClasses(s1), norm_image(s_unit_group(k, s1), UnitSquareClasses(s1))) == reps({1, 5}));
  CHECK(span_reps(UnitSquareClasses(s2), norm_image(s_unit_group(k, s2), UnitSquareClasses(s2))) == reps({1, 5, 6, 30}));
  const SigmaSet s3({2, 7});
  CHECK(span_reps(UnitSquareClasses(s3), norm_image(s_unit_group(QuadField(-14), s3), UnitSquareClasses(s3))) ==
        reps({1, 14}));
}

TEST_CASE("w over n") {
  auto order = [](long d, const SigmaSet& s) {
    SigmaProfile p = w_subgroup(d, s);
    p.norm_image_basis = norm_image(s_unit_group(QuadField(d), s), p.classes);
    return w_over_n_order(p);
  };
  CHECK(order(-14, SigmaSet({2, 7})) == 2);
  CHECK(order(-5, SigmaSet({2, 5})) == 1);
  CHECK(order(-5, SigmaSet({2, 3, 5})) == 1);

  // A norm image outside W is a bug, not data.
  SigmaProfile p = w_subgroup(-5, SigmaSet({2, 5}));
  p.norm_image_basis = {BitVec{1, 0, 0}};
  CHECK_THROWS_AS(w_over_n_order(p), std::logic_error);
}

TEST_CASE("relative brauer order") {
  CHECK(relative_brauer_order(w_subgroup(-14, SigmaSet({2, 7}))) == 4);
  CHECK(relative_brauer_order(w_subgroup(2, SigmaSet({2}))) == 1);
  CHECK(lambda_in_sum_kernel(w_subgroup(-14, SigmaSet({2, 7}))));
  for (long d : {-1L, -3L, -30L, 5L, 6L, 105L, -105L}) {
    const SigmaProfile p = w_subgroup(d, minimal_sigma(d).with({2, 3, 5, 7}));
    CHECK(relative_brauer_order(p) == Int(1) << p.rho);
    CHECK(lambda_in_sum_kernel(p));
  }
}

TEST_CASE("ambiguous classes and H^-1") {
  CHECK(ambiguous_class_order(QuadField(-14), SigmaSet({2, 7})) == 2);
  CHECK(ambiguous_class_order(QuadField(-5), SigmaSet({2, 5})) == 1);
  CHECK(ambiguous_class_order(QuadField(-23), SigmaSet({23})) == 1);
  CHECK(h_minus_one_order(QuadField(-14), SigmaSet({2, 7})) == 2);
  CHECK(h_minus_one_order(QuadField(-5), SigmaSet({2, 5})) == 1);
  CHECK(h_minus_one_order(QuadField(-5), SigmaSet({2, 3, 5})) == 1);
  // tau inverts Z/3, so both groups are trivial.
  CHECK(h_minus_one_order(QuadField(-23), SigmaSet({23})) == 1);
}

TEST_CASE("alpha beta at r = 0") {
  for (long d : {-1L, -3L, -5L, -14L, -23L, 2L, 3L, 5L, 79L, 94L}) {
    const AlphaBetaCheck c = alpha_beta_r0_check(s_unit_group(QuadField(d), minimal_sigma(d)));
    CAPTURE(d);
    CHECK(c.passed());
    CHECK(c.failure.empty());
  }
  const AlphaBetaCheck c = alpha_beta_r0_check(s_unit_group(QuadField(2), SigmaSet({2})));
  // Q = <1+sqrt2> x <sqrt2> / <-1, 2> and N1 = <-1, -(1+sqrt2)^2>.
  CHECK(c.quotient == FinAbGroup::from_orders({Int(0), Int(2)}));
  CHECK(c.norm_one == FinAbGroup::from_orders({Int(2), Int(0)}));
}

TEST_CASE("verify_field") {
  check_orders(verify_field(-14, SigmaSet({2, 7})), {2, 2, 2, 2, 2, 4});
  check_orders(verify_field(-5, SigmaSet({2, 5})), {1, 1, 1, 1, 1, 4});
  check_orders(verify_field(-5, SigmaSet({2, 3, 5})), {1, 1, 1, 1, 1, 4});
  const VerificationReport r = verify_field(-14, SigmaSet({2, 7}));
  CHECK(r.rho == 2);
  CHECK(r.e == 1);
  CHECK_THROWS_AS(verify_field(-5, SigmaSet({5})), std::invalid_argument);
  CHECK_THROWS_AS(verify_field(4, SigmaSet({2})), std::invalid_argument);
  CHECK_THROWS_AS(verify_field(-503, minimal_sigma(-7)), EnvelopeError);
  CHECK(minimal_sigma(-5).to_string() == "{inf,2,5}");
  CHECK(minimal_sigma(5).to_string() == "{inf,5}");
}

TEST_CASE("report serialization") {
  VerificationReport r = verify_field(-14, SigmaSet({2, 7}));
  r.ms_elapsed = 1.5;
  CHECK(r.sigma_string() == "inf;2;7");
  const auto j = nlohmann::ordered_json::parse(r.to_json());
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"d", "sigma", "rho", "e", "order_c_sigma", "order_c_fixed", "order_h_minus1",
                                         "order_w_over_n", "coker_lambda", "brauer_order", "pass_n1", "pass_n2",
                                         "pass_n3", "pass_n4", "pass_n5", "pass_n6", "ms_elapsed"});
  CHECK(j["d"] == -14);
  CHECK(j["order_w_over_n"] == 2);
  CHECK(j["pass_n6"] == true);
  CHECK(r.to_json().find('\n') == std::string::npos);
  CHECK(VerificationReport::csv_header().rfind("d,sigma,rho,e,", 0) == 0);
  CHECK(r.to_csv() == "-14,inf;2;7,2,1,2,2,2,2,2,4,true,true,true,true,true,true,1.500");
}
