#pragma once

// Seeded generators shared by the property tests and the acceptance runner.

#include <random>
#include <string>
#include <vector>

#include "hcd/polynomial.hpp"

namespace hcd::testing {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, long bound = 9) {
  std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
  return Rational(num(rng), den(rng));
}

inline GaussianRational random_gaussian(Rng& rng, long bound = 9) {
  return {random_rational(rng, bound), random_rational(rng, bound)};
}

inline ContextPtr param_context(const std::vector<std::string>& names) {
  std::vector<VariableContext::Variable> vars;
  for (const auto& n : names) vars.push_back({n, Block::Param});
  return make_context(std::move(vars));
}

inline Monomial random_monomial(Rng& rng, std::size_t nvars, unsigned max_degree) {
  std::vector<std::uint32_t> e(nvars, 0);
  std::uniform_int_distribution<std::size_t> pick(0, nvars - 1);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  const unsigned d = deg(rng);
  for (unsigned k = 0; k < d; ++k) ++e[pick(rng)];
  return Monomial(std::move(e));
}

struct PolySpec {
  std::size_t max_terms = 4;
  unsigned max_degree = 3;
  long coeff_bound = 9;
  bool real = false;
  bool integer = false;
};

inline Polynomial random_polynomial(Rng& rng, const ContextPtr& ctx, const PolySpec& shape = {}) {
  std::uniform_int_distribution<std::size_t> count(1, shape.max_terms);
  std::uniform_int_distribution<long> small(-shape.coeff_bound, shape.coeff_bound);
  std::vector<Term> terms;
  const std::size_t n = count(rng);
  for (std::size_t k = 0; k < n; ++k) {
    GaussianRational c;
    if (shape.integer) c = GaussianRational(Rational(small(rng)));
    else if (shape.real) c = GaussianRational(random_rational(rng, shape.coeff_bound));
    else c = random_gaussian(rng, shape.coeff_bound);
    terms.push_back({random_monomial(rng, ctx->size(), shape.max_degree), c});
  }
  return Polynomial(ctx, std::move(terms));
}

}  // namespace hcd::testing
