#include "hcd/holoclosure.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "hcd/errors.hpp"

namespace hcd {

namespace {

// Target coordinate names z1..zn, suffixed with '_' while they clash with a source name.
std::vector<std::string> target_names(const VariableContext& source, std::size_t n) {
  std::string prefix = "z";
  auto clashes = [&](const std::string& p) {
    for (std::size_t j = 1; j <= n; ++j)
      if (source.index_of(p + std::to_string(j))) return true;
    return false;
  };
  while (clashes(prefix)) prefix += "_";
  std::vector<std::string> names;
  for (std::size_t j = 1; j <= n; ++j) names.push_back(prefix + std::to_string(j));
  return names;
}

// Context (source variables | z-block) and the graph ideal A + (z_j - f_j).
struct Graph {
  ContextPtr context;
  Ideal ideal;
  std::vector<bool> source_mask;
};

Graph graph_of(const PolynomialMap& map, const Ideal* source_ideal) {
  const auto& src = *map.source;
  std::vector<VariableContext::Variable> vars = src.variables();
  for (const auto& name : target_names(src, map.components.size())) vars.push_back({name, Block::Z});
  const ContextPtr ctx = make_context(std::move(vars));
  std::vector<Polynomial> gens;
  if (source_ideal)
    for (const auto& g : source_ideal->generators()) gens.push_back(change_context(g, ctx));
  for (std::size_t j = 0; j < map.components.size(); ++j)
    gens.push_back(Polynomial::variable(ctx, src.size() + j) - change_context(map.components[j], ctx));
  std::vector<bool> mask(ctx->size(), false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(src.size()), true);
  return {ctx, Ideal(ctx, std::move(gens)), std::move(mask)};
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-100, 100);
  std::uniform_int_distribution<long> den(1, 100);
  const long n = num(rng);
  return Rational(n, den(rng));
}

mpz_class integer_abs(const mpz_class& v) { return v < 0 ? mpz_class(-v) : v; }

std::vector<mpz_class> positive_divisors(const mpz_class& value) {
  std::vector<mpz_class> out;
  const mpz_class v = integer_abs(value);
  if (v == 0 || v > mpz_class("1000000000000")) return out;
  for (mpz_class d = 1; d * d <= v; ++d)
    if (v % d == 0) {
      out.push_back(d);
      if (d * d != v) out.push_back(v / d);
    }
  return out;
}

GaussianRational eval_univariate(const std::vector<GaussianRational>& coeffs, const GaussianRational& x) {
  GaussianRational acc;
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
  return acc;
}

// Roots in Q(i) reachable by the rational root test (all rational roots; Gaussian ones only when linear).
std::vector<GaussianRational> rational_roots(std::vector<GaussianRational> coeffs) {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  std::vector<GaussianRational> roots;
  if (coeffs.size() <= 1) return roots;
  if (coeffs.front().is_zero()) {
    roots.emplace_back(0);
    std::size_t shift = 0;
    while (coeffs[shift].is_zero()) ++shift;
    coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(shift));
  }
  if (coeffs.size() == 2) {
    roots.push_back(-coeffs[0] / coeffs[1]);
    return roots;
  }
  if (coeffs.size() < 2) return roots;
  // Real-coefficient companion: p * conj(p) has every rational root of p.
  std::vector<Rational> real(coeffs.size() * 2 - 1, Rational(0));
  const bool is_real = std::all_of(coeffs.begin(), coeffs.end(), [](const auto& c) { return c.is_real(); });
  if (is_real) {
    real.resize(coeffs.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k) real[k] = coeffs[k].re();
  } else {
    for (std::size_t a = 0; a < coeffs.size(); ++a)
      for (std::size_t b = 0; b < coeffs.size(); ++b) real[a + b] += (coeffs[a] * coeffs[b].conj()).re();
  }
  mpz_class lcm_den = 1;
  for (const auto& c : real) lcm_den = lcm(lcm_den, c.denominator());
  const mpz_class a0 = mpq_class(real.front().value() * lcm_den).get_num();
  const mpz_class an = mpq_class(real.back().value() * lcm_den).get_num();
  for (const auto& p : positive_divisors(a0))
    for (const auto& q : positive_divisors(an))
      for (int sign : {1, -1}) {
        const GaussianRational cand(Rational(mpq_class(mpz_class(sign * p), q)));
        if (!eval_univariate(coeffs, cand).is_zero()) continue;
        if (std::find(roots.begin(), roots.end(), cand) == roots.end()) roots.push_back(cand);
      }
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    return a.re() != b.re() ? a.re() < b.re() : a.im() < b.im();
  });
  return roots;
}

std::optional<Point> solve_triangular(const GroebnerBasis& lex, std::size_t n, std::mt19937_64& rng) {
  std::vector<std::optional<GaussianRational>> value(n);
  for (std::size_t k = n; k-- > 0;) {
    std::vector<std::vector<GaussianRational>> univariates;
    for (const auto& g : lex.basis) {
      const auto sup = g.support();
      bool inside = true;
      for (std::size_t i = 0; i < k; ++i)
        if (sup[i]) inside = false;
      if (!inside) continue;
      std::vector<GaussianRational> coeffs(static_cast<std::size_t>(g.total_degree() + 1));
      for (const auto& t : g.terms()) {
        GaussianRational c = t.coeff;
        for (std::size_t i = k + 1; i < n; ++i)
          for (std::uint32_t e = 0; e < t.monomial[i]; ++e) c *= *value[i];
        coeffs[t.monomial[k]] += c;
      }
      while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
      if (coeffs.empty()) continue;
      if (coeffs.size() == 1) return std::nullopt;  // nonzero constant: inconsistent
      univariates.push_back(std::move(coeffs));
    }
    if (univariates.empty()) {
      value[k] = GaussianRational(random_rational(rng));
      continue;
    }
    for (const auto& root : rational_roots(univariates.front())) {
      if (std::all_of(univariates.begin(), univariates.end(),
                      [&](const auto& u) { return eval_univariate(u, root).is_zero(); })) {
        value[k] = root;
        break;
      }
    }
    if (!value[k]) return std::nullopt;
  }
  Point p;
  for (auto& v : value) p.push_back(*v);
  return p;
}

bool on_variety(const Ideal& ideal, const Point& p) {
  return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                     [&](const Polynomial& g) { return g.evaluate(p).is_zero(); });
}

}  // namespace

HCReport holomorphic_closure(const System& system, const GroebnerLimits& limits) {
  const auto c = complexify_ideal(system, limits);
  const auto real_dim = ideal_dimension(c.ideal, limits);
  if (!real_dim) throw EmptySet();
  Ideal hc = eliminate(c.ideal, Block::W, limits);
  const auto hc_dim = ideal_dimension(hc, limits);
  if (!hc_dim) throw EmptySet();
  return {std::move(hc), *hc_dim, *real_dim};
}

HCReport hc_dimension_parametrized(std::span<const Polynomial> phi, const GroebnerLimits& limits) {
  const PolynomialMap map = make_map({phi.begin(), phi.end()});
  const Graph graph = graph_of(map, nullptr);
  Ideal hc = eliminate(graph.ideal, graph.source_mask, limits);
  const auto hc_dim = ideal_dimension(hc, limits);
  if (!hc_dim) throw EmptySet();

  // Real dimension of the image of real parameters: image closure of t -> (phi(t), conj(phi)(t)).
  std::vector<Polynomial> doubled(phi.begin(), phi.end());
  for (const auto& f : phi) doubled.push_back(poly_conjugate(f));
  const Graph real_graph = graph_of(make_map(std::move(doubled)), nullptr);
  const auto real_dim = ideal_dimension(eliminate(real_graph.ideal, real_graph.source_mask, limits), limits);
  if (!real_dim) throw EmptySet();
  return {std::move(hc), *hc_dim, *real_dim};
}

PolynomialMap make_map(std::vector<Polynomial> components) {
  if (components.empty()) throw InvalidInput("a map needs at least one component");
  const ContextPtr source = components.front().context();
  for (const auto& c : components)
    if (!same_context(c.context(), source)) throw InvalidInput("map components over different contexts");
  return {source, std::move(components)};
}

Ideal pullback_kernel(const PolynomialMap& map, const Ideal& source_ideal, const GroebnerLimits& limits) {
  if (!same_context(source_ideal.context(), map.source)) throw InvalidInput("source ideal over a different context");
  const Graph graph = graph_of(map, &source_ideal);
  return eliminate(graph.ideal, graph.source_mask, limits);
}

int gabrielov_r3(const PolynomialMap& map, const Ideal& source_ideal, const GroebnerLimits& limits) {
  const auto d = ideal_dimension(pullback_kernel(map, source_ideal, limits), limits);
  if (!d) throw EmptySet();
  return *d;
}

std::optional<Point> sample_rational_point(const Ideal& ideal, std::uint64_t seed, int attempts,
                                           const GroebnerLimits& limits) {
  const ContextPtr ctx = ideal.context();
  const std::size_t n = ctx->size();
  std::mt19937_64 rng(seed);
  if (ideal.is_zero()) {
    Point p;
    for (std::size_t i = 0; i < n; ++i) p.emplace_back(random_rational(rng));
    return p;
  }
  const auto gb = buchberger(ideal, MonomialOrder::grevlex(), limits);
  if (gb.is_unit()) return std::nullopt;
  std::vector<Monomial> leading;
  for (const auto& g : gb.basis) leading.push_back(g.leading_monomial());
  const auto first = maximal_independent_set(leading, n);
  // Further candidate sets S (with I meeting C[S] only in 0) are found lazily.
  std::vector<std::vector<std::size_t>> sets = {first};
  bool enumerated = false;
  std::uniform_int_distribution<long> small(-4, 4);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    if (attempt == 1 && !enumerated && n <= 12) {
      enumerated = true;
      const std::size_t d = first.size();
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != d) continue;
        std::vector<std::size_t> cand;
        std::vector<bool> other(n, true);
        for (std::size_t v = 0; v < n; ++v)
          if (mask & (1u << v)) {
            cand.push_back(v);
            other[v] = false;
          }
        if (cand == first) continue;
        if (eliminate(ideal, other, limits).is_zero()) sets.push_back(std::move(cand));
      }
    }
    const auto& free_vars = sets[static_cast<std::size_t>(attempt) % sets.size()];
    const bool integers = attempt >= attempts / 2;
    std::vector<Polynomial> gens = ideal.generators();
    for (auto v : free_vars) {
      const Rational value = integers ? Rational(small(rng)) : random_rational(rng);
      gens.push_back(Polynomial::variable(ctx, v) - Polynomial::constant(ctx, GaussianRational(value)));
    }
    const auto lex = buchberger(Ideal(ctx, std::move(gens)), MonomialOrder::lex(), limits);
    if (lex.is_unit()) continue;
    auto point = solve_triangular(lex, n, rng);
    if (point && on_variety(ideal, *point)) return point;
  }
  return std::nullopt;
}

RankReport gabrielov_r1(const PolynomialMap& map, const Ideal& source_ideal, std::uint64_t seed,
                        const RankOptions& options, const GroebnerLimits& limits) {
  if (!same_context(source_ideal.context(), map.source)) throw InvalidInput("source ideal over a different context");
  const auto dim_a = ideal_dimension(source_ideal, limits);
  if (!dim_a) throw EmptySet();

  std::vector<Point> points;
  if (options.witness) {
    if (options.witness->size() != map.source->size()) throw InvalidInput("witness point has the wrong dimension");
    if (!on_variety(source_ideal, *options.witness))
      throw PreconditionFailed("witness point does not lie on the source variety");
    points.push_back(*options.witness);
  } else {
    std::mt19937_64 rng(seed);
    for (int s = 0; s < options.samples; ++s) {
      auto p = sample_rational_point(source_ideal, rng(), options.attempts_per_sample, limits);
      if (!p)
        throw PreconditionFailed("no rational point found on the source variety; supply a witness point");
      points.push_back(std::move(*p));
    }
  }

  RankReport report{.fibre_witness = {}, .kernel = pullback_kernel(map, source_ideal, limits)};
  std::optional<int> best;
  for (const auto& a : points) {
    std::vector<Polynomial> gens = source_ideal.generators();
    for (const auto& f : map.components) gens.push_back(f - Polynomial::constant(map.source, f.evaluate(a)));
    const auto lambda = ideal_dimension(Ideal(map.source, std::move(gens)), limits);
    if (!lambda) throw PreconditionFailed("sampled point is not on the source variety");
    if (!best || *lambda < *best) {
      best = lambda;
      report.fibre_witness = a;
    }
  }
  report.lambda = *best;
  report.r1 = *dim_a - report.lambda;
  const auto r3 = ideal_dimension(report.kernel, limits);
  if (!r3) throw EmptySet();
  report.r3 = *r3;
  report.regular = report.r1 == report.r3;
  return report;
}

}  // namespace hcd
