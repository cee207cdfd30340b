#include <gtest/gtest.h>

#include "hcd/errors.hpp"
#include "hcd/holoclosure.hpp"
#include "hcd/parser.hpp"
#include "support/generators.hpp"

namespace hcd {
namespace {

using testing::param_context;
using testing::random_polynomial;
using testing::Rng;

System sys(const char* text) { return to_system(parse(text)); }

std::vector<Polynomial> polys(const ContextPtr& ctx, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(parse_polynomial(t, ctx));
  return out;
}

TEST(HolomorphicClosure, TotallyReal) {
  const auto r = holomorphic_closure(sys("vars z1 z2 z3\neq z1-conj(z1)\neq z2-conj(z2)\neq z3-conj(z3)"));
  EXPECT_TRUE(r.hc_ideal.is_zero());
  EXPECT_EQ(r.hc_dimension, 3);
}

TEST(HolomorphicClosure, ComplexLine) {
  const auto r = holomorphic_closure(sys("vars z1 z2\neq z2\neq conj(z2)"));
  EXPECT_EQ(r.hc_ideal.generators(), polys(r.hc_ideal.context(), {"z2"}));
  EXPECT_EQ(r.hc_dimension, 1);
  EXPECT_EQ(r.real_dimension, 2);
}

TEST(HolomorphicClosure, CartanUmbrella) {
  EXPECT_EQ(holomorphic_closure(sys("realvars x1 y1 x2 y2\neq x2*(x1^2+y1^2)-x1^3\neq y2")).hc_dimension, 2);
  const auto stick = holomorphic_closure(sys("realvars x1 y1 x2 y2\neq x1\neq y1\neq y2"));
  EXPECT_EQ(stick.hc_dimension, 1);
  EXPECT_EQ(stick.hc_ideal.generators(), polys(stick.hc_ideal.context(), {"z1"}));
}

TEST(HolomorphicClosure, Sphere) {
  const auto r = holomorphic_closure(sys("vars z1 z2\neq z1*conj(z1)+z2*conj(z2)-1"));
  EXPECT_TRUE(r.hc_ideal.is_zero());
  EXPECT_EQ(r.hc_dimension, 2);
  EXPECT_EQ(r.real_dimension, 3);
}

TEST(HolomorphicClosure, EmptySetRejected) {
  EXPECT_THROW(holomorphic_closure(sys("vars z1\neq z1\neq z1-1")), EmptySet);
}

TEST(Parametrized, Examples) {
  const auto t12 = param_context({"t1", "t2"});
  const auto plane = hc_dimension_parametrized(polys(t12, {"t1+i*t2", "0"}));
  EXPECT_EQ(plane.hc_dimension, 1);
  EXPECT_EQ(plane.real_dimension, 2);
  const auto t = param_context({"t"});
  const auto parabola = hc_dimension_parametrized(polys(t, {"t", "t^2"}));
  EXPECT_EQ(parabola.hc_ideal.generators(), polys(parabola.hc_ideal.context(), {"z1^2-z2"}));
  EXPECT_EQ(parabola.hc_dimension, 1);
  const auto saddle = hc_dimension_parametrized(polys(t12, {"t1", "t2", "t1*t2"}));
  EXPECT_EQ(saddle.hc_ideal.generators(), polys(saddle.hc_ideal.context(), {"z1*z2-z3"}));
  EXPECT_EQ(saddle.hc_dimension, 2);
}

TEST(Ranks, R3Examples) {
  const auto vt = param_context({"v", "t"});
  const Ideal zero(vt);
  EXPECT_EQ(gabrielov_r3(make_map(polys(vt, {"v", "v*t", "v*t^2"})), zero), 2);
  EXPECT_EQ(gabrielov_r3(make_map(polys(vt, {"v", "t"})), zero), 2);
  EXPECT_EQ(gabrielov_r3(make_map(polys(vt, {"v", "v", "v"})), zero), 1);
}

TEST(Ranks, R1Examples) {
  const auto vt = param_context({"v", "t"});
  const auto whitney = gabrielov_r1(make_map(polys(vt, {"v", "v*t", "v*t^2"})), Ideal(vt), 7);
  EXPECT_EQ(whitney.r1, 2);
  EXPECT_EQ(whitney.lambda, 0);
  EXPECT_TRUE(whitney.regular);
  EXPECT_EQ(whitney.kernel.generators(), polys(whitney.kernel.context(), {"z2^2-z1*z3"}));

  const auto constant = gabrielov_r1(make_map(polys(vt, {"3", "1/2"})), Ideal(vt), 7);
  EXPECT_EQ(constant.r1, 0);
  EXPECT_EQ(constant.lambda, 2);

  const auto zw = param_context({"z", "w"});
  const auto proj = gabrielov_r1(make_map(polys(zw, {"z"})), Ideal(zw, polys(zw, {"z-w"})), 7);
  EXPECT_EQ(proj.r1, 1);
  EXPECT_EQ(proj.lambda, 0);
}

TEST(Ranks, WitnessMustLieOnSourceSet) {
  const auto zw = param_context({"z", "w"});
  RankOptions opts;
  opts.witness = Point{GaussianRational(1), GaussianRational(2)};
  EXPECT_THROW(gabrielov_r1(make_map(polys(zw, {"z"})), Ideal(zw, polys(zw, {"z-w"})), 1, opts), PreconditionFailed);
  opts.witness = Point{GaussianRational(2), GaussianRational(2)};
  EXPECT_EQ(gabrielov_r1(make_map(polys(zw, {"z"})), Ideal(zw, polys(zw, {"z-w"})), 1, opts).lambda, 0);
}

TEST(Ranks, NonRegularAtSpecialWitness) {
  // Blow-up chart (v, t) -> (v, v*t): the fibre over the origin is the whole t-line.
  const auto vt = param_context({"v", "t"});
  RankOptions opts;
  opts.witness = Point{GaussianRational(0), GaussianRational(5)};
  const auto r = gabrielov_r1(make_map(polys(vt, {"v", "v*t"})), Ideal(vt), 1, opts);
  EXPECT_EQ(r.lambda, 1);
  EXPECT_EQ(r.r1, 1);
  EXPECT_EQ(r.r3, 2);
  EXPECT_FALSE(r.regular);
}

TEST(Ranks, DeterministicForSeed) {
  const auto vt = param_context({"v", "t"});
  const auto map = make_map(polys(vt, {"v^2-t", "v*t"}));
  const auto a = gabrielov_r1(map, Ideal(vt, polys(vt, {"v^2+t^2-2"})), 99);
  const auto b = gabrielov_r1(map, Ideal(vt, polys(vt, {"v^2+t^2-2"})), 99);
  EXPECT_EQ(a.fibre_witness, b.fibre_witness);
  EXPECT_EQ(a.r1, b.r1);
}

TEST(SamplePoint, LiesOnVariety) {
  const auto xy = param_context({"x", "y"});
  const Ideal I(xy, polys(xy, {"x^2-y"}));
  const auto p = sample_rational_point(I, 5, 10);
  ASSERT_TRUE(p.has_value());
  EXPECT_TRUE(I.generators()[0].evaluate(*p).is_zero());
}

TEST(HolomorphicClosureProperty, FixtureBounds) {
  for (const char* text : {"vars z1 z2\neq z1*conj(z1)+z2*conj(z2)-1", "realvars x1 y1 x2 y2\neq y2",
                           "vars z1 z2\neq z2-z1*conj(z1)\neq conj(z2)-z1*conj(z1)",
                           "realvars x1 y1 x2 y2\neq x2*(x1^2+y1^2)-x1^3\neq y2"}) {
    const auto s = sys(text);
    const auto r = holomorphic_closure(s);
    EXPECT_LE((r.real_dimension + 1) / 2, r.hc_dimension) << text;
    EXPECT_LE(r.hc_dimension, s.n) << text;
    EXPECT_EQ(ideal_dimension(r.hc_ideal), r.hc_dimension) << text;
  }
}

TEST(HolomorphicClosureProperty, ComplexSetIsItsOwnClosure) {
  Rng rng(51);
  const auto zeta = zeta_context({"z1", "z2"});
  const auto z = make_context({{"z1", Block::Z}, {"z2", Block::Z}});
  for (int k = 0; k < 8; ++k) {
    const auto h = random_polynomial(rng, z, {.max_terms = 3, .max_degree = 2, .coeff_bound = 4});
    if (h.is_constant()) continue;
    const Polynomial g = change_context(h, zeta);
    const auto r = holomorphic_closure(make_system(SystemForm::Zeta, zeta, {g, poly_conjugate(g)}));
    EXPECT_EQ(r.hc_dimension, 1);
    EXPECT_TRUE(same_ideal(r.hc_ideal, Ideal(r.hc_ideal.context(), {change_context(h, r.hc_ideal.context())})));
  }
}

TEST(RanksProperty, R1NeverExceedsR3) {
  Rng rng(52);
  const auto vt = param_context({"v", "t"});
  for (int k = 0; k < 10; ++k) {
    std::vector<Polynomial> comps;
    for (int c = 0; c < 3; ++c) comps.push_back(random_polynomial(rng, vt, {.max_terms = 2, .max_degree = 2, .integer = true}));
    const Ideal A(vt, {random_polynomial(rng, vt, {.max_terms = 2, .max_degree = 2, .integer = true})});
    try {
      const auto r = gabrielov_r1(make_map(comps), A, 3);
      EXPECT_LE(r.r1, r.r3);
      EXPECT_EQ(r.regular, r.r1 == r.r3);
    } catch (const PreconditionFailed&) {
      // no rational point found or empty source set
    }
  }
}

}  // namespace
}  // namespace hcd
