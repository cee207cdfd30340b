#include <gtest/gtest.h>

#include "hcd/complexify.hpp"
#include "hcd/errors.hpp"
#include "hcd/parser.hpp"
#include "support/generators.hpp"

namespace hcd {
namespace {

using testing::param_context;
using testing::random_monomial;
using testing::random_polynomial;
using testing::Rng;

Monomial mono(std::vector<std::uint32_t> e) { return Monomial(std::move(e)); }

TEST(MonomialOrder, GrevlexTieBreak) {
  EXPECT_TRUE(monomial_compare(MonomialOrder::grevlex(), mono({2, 1}), mono({1, 2})) > 0);
}

TEST(MonomialOrder, LexFirstVariableDominates) {
  EXPECT_TRUE(monomial_compare(MonomialOrder::lex(), mono({1, 0}), mono({0, 5})) > 0);
}

TEST(MonomialOrder, EliminationBlockDominates) {
  const auto order = MonomialOrder::elimination({false, true});  // (z, w), w eliminated
  EXPECT_TRUE(monomial_compare(order, mono({0, 1}), mono({100, 0})) > 0);
}

TEST(MonomialOrder, SizeMismatchRejected) {
  EXPECT_THROW(monomial_compare(MonomialOrder::grevlex(), mono({1}), mono({1, 0})), InvalidInput);
}

TEST(MonomialOrderProperty, MultiplicativeAndWellOrdered) {
  Rng rng(21);
  const std::vector<MonomialOrder> orders = {MonomialOrder::lex(), MonomialOrder::grevlex(),
                                             MonomialOrder::elimination({true, false, true, false})};
  const Monomial one(4);
  for (const auto& order : orders)
    for (int k = 0; k < 400; ++k) {
      const auto a = random_monomial(rng, 4, 5), b = random_monomial(rng, 4, 5), c = random_monomial(rng, 4, 5);
      const auto ab = order.compare(a, b);
      EXPECT_EQ(order.compare(a * c, b * c), ab);
      EXPECT_TRUE(order.compare(b, a) == (0 <=> ab));
      EXPECT_TRUE(order.compare(a, one) >= 0);
      if (ab < 0 && order.compare(b, c) < 0) EXPECT_TRUE(order.compare(a, c) < 0);
    }
}

class PolyFixture : public ::testing::Test {
 protected:
  ContextPtr zw = complexified_context(2);
  Polynomial z1 = Polynomial::variable(zw, "z1");
  Polynomial w1 = Polynomial::variable(zw, "w1");
};

TEST_F(PolyFixture, DifferenceOfSquares) {
  EXPECT_EQ(poly_arith(z1 + w1, z1 - w1, PolyOp::Mul), z1 * z1 - w1 * w1);
}

TEST_F(PolyFixture, AddZero) {
  const Polynomial f = z1 * w1 + z1;
  EXPECT_EQ(f + Polynomial(zw), f);
}

TEST_F(PolyFixture, BinomialCube) {
  const Polynomial half = Polynomial::constant(zw, GaussianRational(Rational(1, 2)));
  const Polynomial cube = (half * (z1 + w1)).pow(3);
  ASSERT_EQ(cube.size(), 4u);
  std::vector<Rational> coeffs;
  for (const auto& t : cube.terms()) coeffs.push_back(t.coeff.re());
  EXPECT_EQ(coeffs, (std::vector<Rational>{Rational(1, 8), Rational(3, 8), Rational(3, 8), Rational(1, 8)}));
}

TEST_F(PolyFixture, SelfAliasing) {
  Polynomial f = z1 + w1;
  f += f;
  EXPECT_EQ(f, Polynomial::constant(zw, GaussianRational(2)) * (z1 + w1));
  f -= f;
  EXPECT_TRUE(f.is_zero());
}

TEST_F(PolyFixture, ContextMismatchRejected) {
  const auto other = complexified_context(1);
  EXPECT_THROW(z1 + Polynomial::variable(other, "z1") * Polynomial::variable(other, "w1"), InvalidInput);
}

TEST(PolySubstitute, ComplexifyProduct) {
  const auto zeta = zeta_context({"z1", "z2"});
  const auto f = parse_polynomial("z1*conj(z1)", zeta);
  const auto zw = complexified_context(2);
  const std::map<std::string, Polynomial> images = {{"z1", Polynomial::variable(zw, "z1")},
                                                    {"conj(z1)", Polynomial::variable(zw, "w1")}};
  EXPECT_EQ(poly_substitute(f, zw, images), parse_polynomial("z1*w1", zw));
}

TEST(PolySubstitute, RealPartImage) {
  const auto real = real_context({"x1", "y1"});
  const auto zeta = zeta_context({"z1"});
  const auto image = parse_polynomial("1/2*z1+1/2*conj(z1)", zeta);
  const auto out = poly_substitute(Polynomial::variable(real, "x1"), zeta, {{"x1", image}});
  EXPECT_EQ(out, image);
}

TEST(PolySubstitute, MissingImageRejected) {
  const auto ctx = param_context({"a", "b"});
  const auto f = parse_polynomial("a*b", ctx);
  EXPECT_THROW(poly_substitute(f, ctx, std::map<std::string, Polynomial>{{"a", f}}), InvalidInput);
}

TEST(PolySubstituteProperty, HomomorphismAndIdentity) {
  Rng rng(22);
  const auto src = param_context({"a", "b", "c"});
  const auto dst = param_context({"s", "t"});
  for (int k = 0; k < 60; ++k) {
    std::vector<std::optional<Polynomial>> images;
    for (int v = 0; v < 3; ++v) images.emplace_back(random_polynomial(rng, dst, {.max_terms = 3, .max_degree = 1}));
    const auto f = random_polynomial(rng, src), g = random_polynomial(rng, src);
    EXPECT_EQ(poly_substitute(f * g, dst, images), poly_substitute(f, dst, images) * poly_substitute(g, dst, images));
    EXPECT_EQ(poly_substitute(f + g, dst, images), poly_substitute(f, dst, images) + poly_substitute(g, dst, images));
    std::vector<std::optional<Polynomial>> identity;
    for (std::size_t v = 0; v < 3; ++v) identity.emplace_back(Polynomial::variable(src, v));
    EXPECT_EQ(poly_substitute(f, src, identity), f);
  }
}

TEST(PolyConjugate, SwapsZetaAndConjugates) {
  const auto zeta = zeta_context({"z1", "z2"});
  EXPECT_EQ(poly_conjugate(parse_polynomial("z2-z1*conj(z1)", zeta)), parse_polynomial("conj(z2)-conj(z1)*z1", zeta));
  const auto zw = complexified_context(1);
  EXPECT_EQ(poly_conjugate(parse_polynomial("i*z1", zw)), parse_polynomial("-i*w1", zw));
}

TEST(PolyConjugateProperty, InvolutionAndRealityCriterion) {
  Rng rng(23);
  const auto zeta = zeta_context({"z1", "z2"});
  for (int k = 0; k < 200; ++k) {
    const auto f = random_polynomial(rng, zeta);
    EXPECT_EQ(poly_conjugate(poly_conjugate(f)), f);
    const auto sym = f + poly_conjugate(f);
    EXPECT_EQ(poly_conjugate(sym), sym);
    const auto anti = f - poly_conjugate(f);
    if (!anti.is_zero()) EXPECT_NE(poly_conjugate(anti), anti);
  }
}

TEST(PolyDerivative, PowerRule) {
  const auto ctx = param_context({"x", "y"});
  EXPECT_EQ(poly_derivative(parse_polynomial("x^3*y+2*y", ctx), 0), parse_polynomial("3*x^2*y", ctx));
  EXPECT_EQ(poly_derivative(parse_polynomial("x^3*y+2*y", ctx), 1), parse_polynomial("x^3+2", ctx));
}

TEST(PolyPrint, CanonicalForms) {
  const auto ctx = param_context({"x", "y"});
  EXPECT_EQ(to_string(Polynomial(ctx)), "0");
  EXPECT_EQ(to_string(parse_polynomial("-x + 1/2*i*y^2 + (1+i)", ctx)), "1/2*i*y^2-x+(1+i)");
}

TEST(PolyEvaluate, MatchesHandValue) {
  const auto ctx = param_context({"x", "y"});
  const auto f = parse_polynomial("x^2*y-i*y+3", ctx);
  const std::vector<GaussianRational> p = {GaussianRational(2), GaussianRational::i()};
  EXPECT_EQ(f.evaluate(p), GaussianRational(Rational(4)) + GaussianRational(0, 4));
}

}  // namespace
}  // namespace hcd
