#include <gtest/gtest.h>

#include "hcd/complexify.hpp"
#include "hcd/errors.hpp"
#include "hcd/parser.hpp"
#include "support/generators.hpp"

namespace hcd {
namespace {

using testing::random_polynomial;
using testing::random_rational;
using testing::Rng;

System sys(const char* text) { return to_system(parse(text)); }

std::vector<Polynomial> polys(const ContextPtr& ctx, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(parse_polynomial(t, ctx));
  return out;
}

TEST(RealToZeta, ImaginaryPart) {
  const auto z = real_to_zeta(sys("realvars x1 y1 x2 y2\neq y2"));
  ASSERT_EQ(z.generators.size(), 1u);
  EXPECT_EQ(z.generators[0], parse_polynomial("-1/2*i*z2+1/2*i*conj(z2)", z.context));
}

TEST(RealToZeta, ModulusSquared) {
  const auto z = real_to_zeta(sys("realvars x1 y1\neq x1^2+y1^2"));
  EXPECT_EQ(z.generators[0], parse_polynomial("z1*conj(z1)", z.context));
}

TEST(RealToZeta, UmbrellaAgreesPointwise) {
  const auto real = sys("realvars x1 y1 x2 y2\neq x2*(x1^2+y1^2)-x1^3\neq y2");
  const auto zeta = real_to_zeta(real);
  EXPECT_EQ(zeta.generators[0],
            parse_polynomial("1/2*(z2+conj(z2))*z1*conj(z1)-(1/2*(z1+conj(z1)))^3", zeta.context));
  Rng rng(41);
  for (int k = 0; k < 20; ++k) {
    std::vector<GaussianRational> xy, zz(4);
    for (int j = 0; j < 4; ++j) xy.emplace_back(random_rational(rng));
    for (int j = 0; j < 2; ++j) {
      zz[j] = GaussianRational(xy[2 * j].re(), xy[2 * j + 1].re());
      zz[j + 2] = zz[j].conj();
    }
    for (std::size_t g = 0; g < 2; ++g) EXPECT_EQ(real.generators[g].evaluate(xy), zeta.generators[g].evaluate(zz));
  }
}

TEST(ZetaToReal, SplitsRealAndImaginaryParts) {
  const auto r = zeta_to_real(sys("vars z1\neq z1"));
  EXPECT_EQ(r.generators, polys(r.context, {"x1", "y1"}));
}

TEST(ConjugationClosure, AddsMissingConjugate) {
  const auto s = sys("vars z1 z2\neq z2-z1*conj(z1)");
  const auto closed = conjugation_closure(s);
  ASSERT_EQ(closed.generators.size(), 2u);
  EXPECT_EQ(closed.generators[1], parse_polynomial("conj(z2)-conj(z1)*z1", s.context));
  EXPECT_TRUE(closed.conjugation_closed);
}

TEST(ConjugationClosure, SelfConjugateUnchanged) {
  for (const char* text : {"vars z1\neq z1*conj(z1)-1", "vars z1 z2\neq z2\neq conj(z2)"}) {
    const auto s = sys(text);
    EXPECT_EQ(conjugation_closure(s).generators, s.generators) << text;
  }
}

TEST(ComplexifyIdeal, LiteralSubstitution) {
  const auto zw2 = complexified_context(2);
  EXPECT_EQ(complexify_ideal(sys("vars z1 z2\neq z1*conj(z1)+z2*conj(z2)-1")).ideal.generators(),
            polys(zw2, {"z1*w1+z2*w2-1"}));
  EXPECT_EQ(complexify_ideal(sys("vars z1 z2\neq z2-z1*conj(z1)\neq conj(z2)-conj(z1)*z1")).ideal.generators(),
            polys(zw2, {"-z1*w1+z2", "-z1*w1+w2"}));
  EXPECT_EQ(complexify_ideal(sys("vars z1 z2\neq z1-conj(z1)\neq z2-conj(z2)")).ideal.generators(),
            polys(zw2, {"z1-w1", "z2-w2"}));
}

TEST(ComplexifyComplexSet, Examples) {
  const auto zeta = zeta_context({"z1", "z2"});
  const auto line = complexify_complex_set(polys(zeta, {"z2"}));
  EXPECT_TRUE(same_ideal(line, Ideal(line.context(), polys(line.context(), {"z2", "w2"}))));
  EXPECT_EQ(ideal_dimension(line), 2);
  EXPECT_EQ(ideal_dimension(complexify_complex_set(polys(zeta, {"z2-z1^2"}))), 2);
  const auto iz = complexify_complex_set(polys(zeta_context({"z1"}), {"i*z1"}));
  EXPECT_TRUE(same_ideal(iz, Ideal(iz.context(), polys(iz.context(), {"z1", "w1"}))));
}

TEST(ComplexifyComplexSet, RejectsConjugateVariables) {
  const auto zeta = zeta_context({"z1"});
  EXPECT_THROW(complexify_complex_set(polys(zeta, {"conj(z1)"})), InvalidInput);
}

TEST(RealDimension, Examples) {
  EXPECT_EQ(real_dimension(sys("vars z1 z2\neq z1*conj(z1)+z2*conj(z2)-1")), 3);
  EXPECT_EQ(real_dimension(sys("vars z1 z2 z3\neq z1-conj(z1)\neq z2-conj(z2)\neq z3-conj(z3)")), 3);
  EXPECT_EQ(real_dimension(sys("vars z1 z2\neq z2\neq conj(z2)")), 2);
}

TEST(RealDimension, EmptySet) {
  EXPECT_THROW(real_dimension(sys("vars z1\neq i")), EmptySet);
  EXPECT_THROW(real_dimension(sys("realvars x1 y1\neq x1\neq x1-1")), EmptySet);
  // Emptiness is decided over C: a real-empty set with complex points is not detected.
  EXPECT_EQ(real_dimension(sys("realvars x1 y1\neq x1^2+y1^2+1")), 1);
}

TEST(System, ValidateRejectsComplexRealForm) {
  const auto ctx = real_context({"x1", "y1"});
  EXPECT_THROW(make_system(SystemForm::Real, ctx, {Polynomial::constant(ctx, GaussianRational::i())}), InvalidInput);
  EXPECT_THROW(real_context({"x1"}), InvalidInput);
}

TEST(ComplexifyProperty, SwapSymmetry) {
  Rng rng(42);
  const auto zeta = zeta_context({"z1", "z2"});
  for (int k = 0; k < 40; ++k) {
    std::vector<Polynomial> gens = {random_polynomial(rng, zeta, {.max_terms = 3, .max_degree = 2, .coeff_bound = 4})};
    const auto ci = complexify_ideal(make_system(SystemForm::Zeta, zeta, gens));
    for (const auto& g : ci.ideal.generators()) EXPECT_TRUE(ideal_membership(poly_conjugate(g), ci.ideal));
  }
}

TEST(ComplexifyProperty, ComplexSetDoublesDimension) {
  Rng rng(43);
  const auto z = make_context({{"z1", Block::Z}, {"z2", Block::Z}, {"z3", Block::Z}});
  int checked = 0;
  while (checked < 10) {
    const auto h = random_polynomial(rng, z, {.max_terms = 3, .max_degree = 3, .coeff_bound = 5});
    if (h.is_constant()) continue;
    const std::vector<Polynomial> one = {h};
    const auto own = ideal_dimension(Ideal(z, one));
    ASSERT_EQ(own, 2);
    EXPECT_EQ(ideal_dimension(complexify_complex_set(one)), 2 * *own);
    ++checked;
  }
}

}  // namespace
}  // namespace hcd
