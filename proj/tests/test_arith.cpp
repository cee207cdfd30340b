#include <gtest/gtest.h>

#include "hcd/errors.hpp"
#include "hcd/rational.hpp"
#include "support/generators.hpp"

namespace hcd {
namespace {

using testing::random_gaussian;
using testing::Rng;

GaussianRational gq(const char* text) { return GaussianRational::parse(text); }

TEST(Rational, NormalizesSignAndGcd) {
  const Rational r(6, -4);
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational::parse("-10/15"), Rational(-2, 3));
}

TEST(Rational, ZeroDenominatorRejected) {
  EXPECT_THROW(Rational(1, 0), InvalidInput);
  EXPECT_THROW(Rational::parse("3/0"), InvalidInput);
  EXPECT_THROW(Rational(0).inverse(), InvalidInput);
  EXPECT_THROW(Rational::parse("1/2/3"), InvalidInput);
}

TEST(Gaussian, ConjugatePairProduct) {
  EXPECT_EQ(gq_arith(gq("1/2+i"), gq("1/2-i"), ArithOp::Mul), GaussianRational(Rational(5, 4)));
}

TEST(Gaussian, AdditiveIdentity) {
  EXPECT_EQ(gq_arith(GaussianRational(0), GaussianRational(Rational(3, 7)), ArithOp::Add), GaussianRational(Rational(3, 7)));
}

TEST(Gaussian, QuotientByConjugate) {
  const auto q = gq_arith(gq("1+i"), gq("1-i"), ArithOp::Div);
  EXPECT_EQ(q, GaussianRational::i());
  EXPECT_EQ(q * gq("1-i"), gq("1+i"));
}

TEST(Gaussian, DivisionByZero) {
  EXPECT_THROW(gq_arith(gq("1"), gq("0"), ArithOp::Div), InvalidInput);
}

TEST(Gaussian, Conjugation) {
  EXPECT_EQ(gq_conjugate(gq("2/3+1/5*i")), gq("2/3-1/5*i"));
  EXPECT_EQ(gq_conjugate(GaussianRational::i()), -GaussianRational::i());
}

TEST(Gaussian, PrintParseRoundTrip) {
  for (const char* s : {"0", "1/2", "-3*i", "i", "-i", "1/2+3/4*i", "1/2-i", "-7/3-2/9*i"})
    EXPECT_EQ(gq(s).to_string(), s);
}

TEST(GaussianProperty, FieldLaws) {
  Rng rng(11);
  for (int k = 0; k < 300; ++k) {
    const auto a = random_gaussian(rng), b = random_gaussian(rng), c = random_gaussian(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a - a, GaussianRational(0));
    if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
  }
}

TEST(GaussianProperty, ConjugationIsRingInvolution) {
  Rng rng(12);
  for (int k = 0; k < 300; ++k) {
    const auto a = random_gaussian(rng), b = random_gaussian(rng);
    EXPECT_EQ(gq_conjugate(gq_conjugate(a)), a);
    EXPECT_EQ(gq_conjugate(a * b), gq_conjugate(a) * gq_conjugate(b));
    EXPECT_EQ(gq_conjugate(a + b), gq_conjugate(a) + gq_conjugate(b));
  }
}

TEST(GaussianProperty, CanonicalRepresentation) {
  Rng rng(13);
  for (int k = 0; k < 200; ++k) {
    const auto a = random_gaussian(rng), b = random_gaussian(rng);
    const auto x = (a * b) / b;  // b may be zero; skip then
    if (b.is_zero()) continue;
    EXPECT_EQ(x.to_string(), a.to_string());
    EXPECT_EQ(GaussianRational::parse(a.to_string()), a);
  }
}

}  // namespace
}  // namespace hcd
