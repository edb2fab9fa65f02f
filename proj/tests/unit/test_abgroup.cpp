#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "quadnorm/abgroup.hpp"
#include "quadnorm/f2.hpp"
#include "support/oracles.hpp"

using namespace quadnorm;

namespace {

FinAbGroup grp(std::initializer_list<long> factors) {
  std::vector<Int> f;
  for (long x : factors) f.emplace_back(x);
  return FinAbGroup(f);
}

bool unimodular(const IntMatrix& m) { return abs(m.determinant()) == 1; }

void check_snf(const IntMatrix& m) {
  const SmithForm f = snf(m);
  CHECK(f.u * m * f.v == f.s);
  CHECK(unimodular(f.u));
  CHECK(unimodular(f.v));
  CHECK(f.v * f.v_inverse == IntMatrix::identity(m.cols()));
  CHECK(f.s.is_diagonal());
  for (std::size_t i = 0; i + 1 < f.rank(); ++i) CHECK(f.diagonal(i + 1) % f.diagonal(i) == 0);
}

}  // namespace

TEST_CASE("snf of small matrices") {
  const SmithForm id = snf(IntMatrix::identity(2));
  CHECK(id.s == IntMatrix::identity(2));
  CHECK(id.u * IntMatrix::identity(2) * id.v == id.s);

  const SmithForm d = snf(IntMatrix{{2, 0}, {0, 3}});
  CHECK(d.s == (IntMatrix{{1, 0}, {0, 6}}));
  check_snf(IntMatrix{{2, 0}, {0, 3}});

  const SmithForm z = snf(IntMatrix(2, 3));
  CHECK(z.s.is_zero());
  CHECK(z.rank() == 0);
}

TEST_CASE("snf on random integer matrices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> entry(-9, 9), dim(1, 5);
  for (int t = 0; t < 200; ++t) {
    IntMatrix m(dim(rng), dim(rng));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = entry(rng);
    check_snf(m);
  }
}

TEST_CASE("group from presentation") {
  CHECK(group_from_presentation(IntMatrix{{2, 0}, {0, 3}}).invariant_factors() == std::vector<Int>{6});
  CHECK(present(IntMatrix(0, 1), 1).group.invariant_factors() == std::vector<Int>{0});
  CHECK(group_from_presentation(IntMatrix{{2}}).invariant_factors() == std::vector<Int>{2});
  CHECK(group_from_presentation(IntMatrix{{2, 0}, {0, 4}}) == grp({2, 4}));
  CHECK(present(IntMatrix(0, 0), 0).group.is_trivial());
  // to_group and from_group are mutually inverse on the group.
  const Presentation p = present(IntMatrix{{4, 6}, {6, 4}}, 2);
  CHECK(p.group == grp({2, 10}));
  for (const Element& x : oracle::elements(p.group)) CHECK(p.group.reduce(p.to_group * (p.from_group * x)) == p.group.reduce(x));
}

TEST_CASE("FinAbGroup basics") {
  const FinAbGroup g = FinAbGroup::from_orders({Int(2), Int(3), Int(4)});
  CHECK(g == grp({2, 12}));
  CHECK(g.order() == 24);
  CHECK(g.exponent() == 12);
  CHECK(g.to_string() == "Z/2 + Z/12");
  CHECK(FinAbGroup::free(2).to_string() == "Z + Z");
  CHECK_THROWS_AS(FinAbGroup::free(1).order(), std::domain_error);
  CHECK_THROWS_AS(FinAbGroup({Int(4), Int(2)}), std::invalid_argument);
  CHECK(g.add(Element{1, 11}, Element{1, 2}) == Element{0, 1});
  CHECK(g.is_zero(g.scale(Element{1, 5}, 12)));
}

TEST_CASE("hom_decompose") {
  SUBCASE("times 2 on Z/4") {
    const HomDecomposition h = hom_decompose(AbHom::multiplication(grp({4}), 2));
    CHECK(h.kernel.group() == grp({2}));
    CHECK(h.image.group() == grp({2}));
    CHECK(h.cokernel.group() == grp({2}));
  }
  SUBCASE("identity on Z/6") {
    const HomDecomposition h = hom_decompose(AbHom::identity(grp({6})));
    CHECK(h.kernel.group().is_trivial());
    CHECK(h.image.group() == grp({6}));
    CHECK(h.cokernel.group().is_trivial());
  }
  SUBCASE("zero Z/2 -> Z/3") {
    const HomDecomposition h = hom_decompose(AbHom::zero(grp({2}), grp({3})));
    CHECK(h.kernel.group() == grp({2}));
    CHECK(h.image.group().is_trivial());
    CHECK(h.cokernel.group() == grp({3}));
  }
  SUBCASE("orders agree with enumeration on random homs") {
    std::mt19937 rng(11);
    for (int t = 0; t < 60; ++t) {
      const FinAbGroup a = oracle::random_group(rng, 64), b = oracle::random_group(rng, 64);
      const AbHom f = oracle::random_hom(rng, a, b);
      const HomDecomposition h = hom_decompose(f);
      CHECK(h.kernel.group().order() == oracle::count_kernel(f));
      CHECK(h.image.group().order() == oracle::count_image(f));
      CHECK(h.kernel.group().order() * h.image.group().order() == a.order());
      CHECK(h.image.group().order() * h.cokernel.group().order() == b.order());
      for (const Element& k : h.kernel.generators()) CHECK(b.is_zero(f(k)));
    }
  }
}

TEST_CASE("AbHom rejects maps that ignore relations") {
  CHECK_THROWS_AS(AbHom(grp({2}), grp({3}), IntMatrix{{1}}), std::invalid_argument);
  CHECK_NOTHROW(AbHom(grp({2}), grp({4}), IntMatrix{{2}}));
  CHECK_THROWS_AS(compose(AbHom::identity(grp({2})), AbHom::identity(grp({3}))), std::invalid_argument);
}

TEST_CASE("subgroups and quotients") {
  const FinAbGroup g = grp({2, 4});
  const Subgroup s(g, {Element{0, 2}, Element{1, 0}});
  CHECK(s.group() == grp({2, 2}));
  CHECK(s.contains(Element{1, 2}));
  CHECK_FALSE(s.contains(Element{0, 1}));
  const Quotient q(g, {Element{0, 2}, Element{1, 0}});
  CHECK(q.group() == grp({2}));
  CHECK(q.project(q.lift(Element{1})) == Element{1});
  const Subgroup big(g, {Element{0, 1}, Element{1, 0}});
  CHECK(s.is_subset_of(big));
  CHECK_FALSE(big.is_subset_of(s));
  CHECK(subquotient(big, s).group() == grp({2}));
}

TEST_CASE("kercok sequence") {
  SUBCASE("identity maps on Z/2") {
    const AbHom id = AbHom::identity(grp({2}));
    const ExactSequence seq = kercok_sequence(id, id);
    for (const FinAbGroup& t : seq.terms) CHECK(t.is_trivial());
    CHECK(verify_exact(seq));
  }
  SUBCASE("times 2 then times 3 on Z") {
    const FinAbGroup z = FinAbGroup::free(1);
    const ExactSequence seq = kercok_sequence(AbHom::multiplication(z, 2), AbHom::multiplication(z, 3));
    CHECK(seq.terms[1].is_trivial());
    CHECK(seq.terms[2].is_trivial());
    CHECK(seq.terms[3].is_trivial());
    CHECK(seq.terms[4] == grp({2}));
    CHECK(seq.terms[5] == grp({6}));
    CHECK(seq.terms[6] == grp({3}));
    CHECK(verify_exact(seq));
  }
  SUBCASE("times 2 twice on Z/4") {
    const AbHom two = AbHom::multiplication(grp({4}), 2);
    const ExactSequence seq = kercok_sequence(two, two);
    CHECK(seq.terms[1] == grp({2}));
    CHECK(seq.terms[2] == grp({4}));
    CHECK(seq.terms[3] == grp({2}));
    CHECK(verify_exact(seq));
    CHECK(oracle::exact_by_enumeration(seq));
    CHECK(satisfies_cardinality_law(seq));
  }
  SUBCASE("non-composable maps") {
    CHECK_THROWS_AS(kercok_sequence(AbHom::identity(grp({2})), AbHom::identity(grp({3}))), std::invalid_argument);
  }
}

TEST_CASE("verify_exact on short sequences") {
  const FinAbGroup z2 = grp({2});
  const FinAbGroup zero;
  ExactSequence good{{zero, z2, z2, zero},
                     {AbHom::zero(zero, z2), AbHom::identity(z2), AbHom::zero(z2, zero)}};
  CHECK(verify_exact(good));
  ExactSequence bad{{zero, z2, z2, zero}, {AbHom::zero(zero, z2), AbHom::zero(z2, z2), AbHom::zero(z2, zero)}};
  CHECK_FALSE(verify_exact(bad));
}

TEST_CASE("Tate cohomology of involutions") {
  const FinAbGroup z2 = grp({2}), z4 = grp({4});
  CHECK(tate_h(InvolutionModule(z2, AbHom::identity(z2)), -1) == z2);
  CHECK(tate_h(InvolutionModule(z4, AbHom::multiplication(z4, -1)), -1) == z2);
  const FinAbGroup z = FinAbGroup::free(1);
  CHECK(tate_h(InvolutionModule(z, AbHom::identity(z)), 0) == z2);
  CHECK_THROWS_AS(InvolutionModule(z4, AbHom::multiplication(z4, 2)), std::invalid_argument);
  // Swap on Z/2 + Z/2 is induced: both groups vanish.
  const FinAbGroup v = grp({2, 2});
  const InvolutionModule swap(v, AbHom(v, v, IntMatrix{{0, 1}, {1, 0}}));
  CHECK(tate_h(swap, 0).is_trivial());
  CHECK(tate_h(swap, -1).is_trivial());
  SUBCASE("restricted numerator") {
    const InvolutionModule m(z4, AbHom::multiplication(z4, -1));
    const Subgroup r(z4, {Element{2}});  // im(1 - tau) = 2 Z/4
    CHECK(tate_h(m, -1, r).is_trivial());
    CHECK_THROWS_AS(tate_h(InvolutionModule(z4, AbHom::identity(z4)), -1, Subgroup(z4, {Element{1}})), std::invalid_argument);
  }
}

TEST_CASE("two_rank") {
  CHECK(two_rank(grp({2, 4})) == 2);
  CHECK(two_rank(grp({3})) == 0);
  CHECK(two_rank(FinAbGroup::from_orders({Int(6), Int(2)})) == 2);
  CHECK_THROWS_AS(two_rank(FinAbGroup::free(1)), std::domain_error);
}

TEST_CASE("hnf and integer kernels") {
  const IntMatrix h = hnf(IntMatrix{{2, 4}, {3, 5}, {1, 1}});
  CHECK(h == (IntMatrix{{1, 1}, {0, 2}}));
  const IntMatrix m{{1, 2, 3}, {2, 4, 6}};
  const IntMatrix k = integer_kernel(m);
  CHECK(k.cols() == 2);
  CHECK((m * k).is_zero());
  CHECK(solve_integer(IntMatrix{{2, 0}, {0, 3}}, Element{4, 9}) == Element{2, 3});
  CHECK_FALSE(solve_integer(IntMatrix{{2, 0}, {0, 3}}, Element{1, 0}).has_value());
}

TEST_CASE("F2 linear algebra") {
  BitMatrix m(2, 3);
  m.set(0, 0, true);
  m.set(1, 0, true);
  m.set(1, 2, true);
  const std::vector<BitVec> k = f2_kernel(m);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == BitVec{0, 1, 0});
  CHECK(f2_rank({BitVec{1, 1}, BitVec{0, 1}, BitVec{1, 0}}) == 2);
  CHECK(f2_in_span({BitVec{1, 1, 0}, BitVec{0, 1, 1}}, BitVec{1, 0, 1}));
  CHECK_FALSE(f2_in_span({BitVec{1, 1, 0}}, BitVec{1, 0, 0}));
}
