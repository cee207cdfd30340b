#include "hcd/complexify.hpp"

#include <algorithm>
#include <optional>

#include "hcd/errors.hpp"

namespace hcd {

ContextPtr zeta_context(const std::vector<std::string>& names) {
  std::vector<VariableContext::Variable> vars;
  for (const auto& n : names) vars.push_back({n, Block::Zeta});
  for (const auto& n : names) vars.push_back({"conj(" + n + ")", Block::ZetaBar});
  return make_context(std::move(vars));
}

ContextPtr real_context(const std::vector<std::string>& names) {
  if (names.size() % 2 != 0) throw InvalidInput("real coordinates come in (x, y) pairs");
  std::vector<VariableContext::Variable> vars;
  for (const auto& n : names) vars.push_back({n, Block::Real});
  return make_context(std::move(vars));
}

ContextPtr complexified_context(int n) {
  std::vector<VariableContext::Variable> vars;
  for (int j = 1; j <= n; ++j) vars.push_back({"z" + std::to_string(j), Block::Z});
  for (int j = 1; j <= n; ++j) vars.push_back({"w" + std::to_string(j), Block::W});
  return make_context(std::move(vars));
}

void validate(const System& s) {
  if (!s.context) throw InvalidInput("system without a context");
  const auto& ctx = *s.context;
  for (const auto& g : s.generators)
    if (!same_context(g.context(), s.context)) throw InvalidInput("system generator over a different context");
  if (s.form == SystemForm::Zeta) {
    const auto zeta = ctx.indices(Block::Zeta);
    if (static_cast<int>(zeta.size()) != s.n || ctx.indices(Block::ZetaBar).size() != zeta.size() ||
        ctx.size() != 2 * zeta.size())
      throw InvalidInput("zeta-form system needs n zeta variables and their n conjugates");
  } else {
    if (static_cast<int>(ctx.size()) != 2 * s.n || ctx.indices(Block::Real).size() != ctx.size())
      throw InvalidInput("real-form system needs 2n real variables");
    for (const auto& g : s.generators)
      if (!g.is_real()) throw InvalidInput("real-form generators must have real coefficients");
  }
}

System make_system(SystemForm form, ContextPtr context, std::vector<Polynomial> generators) {
  System s;
  s.form = form;
  s.n = static_cast<int>(form == SystemForm::Zeta ? context->indices(Block::Zeta).size() : context->size() / 2);
  s.context = std::move(context);
  s.generators = std::move(generators);
  s.conjugation_closed = form == SystemForm::Real;
  validate(s);
  return s;
}

System real_to_zeta(const System& s) {
  validate(s);
  if (s.form != SystemForm::Real) throw InvalidInput("real_to_zeta expects a real-form system");
  std::vector<std::string> names;
  for (int j = 1; j <= s.n; ++j) names.push_back("z" + std::to_string(j));
  const ContextPtr target = zeta_context(names);
  std::vector<std::optional<Polynomial>> images(s.context->size());
  const GaussianRational half(Rational(1, 2));
  const GaussianRational inv_two_i = GaussianRational(Rational(0), Rational(2)).inverse();
  for (int j = 0; j < s.n; ++j) {
    const auto zeta = Polynomial::variable(target, static_cast<std::size_t>(j));
    const auto zeta_bar = Polynomial::variable(target, static_cast<std::size_t>(s.n + j));
    images[2 * j] = (zeta + zeta_bar) * half;
    images[2 * j + 1] = (zeta - zeta_bar) * inv_two_i;
  }
  std::vector<Polynomial> gens;
  for (const auto& g : s.generators) gens.push_back(poly_substitute(g, target, images));
  System out = make_system(SystemForm::Zeta, target, std::move(gens));
  out.conjugation_closed = true;
  return out;
}

System zeta_to_real(const System& s) {
  validate(s);
  if (s.form == SystemForm::Real) return s;
  std::vector<std::string> names;
  for (int j = 1; j <= s.n; ++j) {
    names.push_back("x" + std::to_string(j));
    names.push_back("y" + std::to_string(j));
  }
  const ContextPtr target = real_context(names);
  std::vector<std::optional<Polynomial>> images(s.context->size());
  const auto zeta = s.context->indices(Block::Zeta);
  const auto zeta_bar = s.context->indices(Block::ZetaBar);
  for (int j = 0; j < s.n; ++j) {
    const auto x = Polynomial::variable(target, static_cast<std::size_t>(2 * j));
    const auto y = Polynomial::variable(target, static_cast<std::size_t>(2 * j + 1));
    images[zeta[j]] = x + y * GaussianRational::i();
    images[zeta_bar[j]] = x - y * GaussianRational::i();
  }
  std::vector<Polynomial> gens;
  auto push_unique = [&gens](Polynomial p) {
    if (p.is_zero()) return;
    for (const auto& q : gens)
      if (q == p || q == -p) return;
    gens.push_back(std::move(p));
  };
  for (const auto& g : s.generators) {
    const Polynomial h = poly_substitute(g, target, images);
    std::vector<Term> re, im;
    for (const auto& t : h.terms()) {
      if (!t.coeff.re().is_zero()) re.push_back({t.monomial, GaussianRational(t.coeff.re())});
      if (!t.coeff.im().is_zero()) im.push_back({t.monomial, GaussianRational(t.coeff.im())});
    }
    push_unique(Polynomial(target, std::move(re)));
    push_unique(Polynomial(target, std::move(im)));
  }
  return make_system(SystemForm::Real, target, std::move(gens));
}

System conjugation_closure(const System& s, const GroebnerLimits& limits) {
  validate(s);
  if (s.form == SystemForm::Real) {
    System out = s;
    out.conjugation_closed = true;
    return out;
  }
  System out = s;
  for (const auto& g : s.generators) {
    Polynomial c = poly_conjugate(g);
    if (!ideal_membership(c, Ideal(s.context, out.generators), limits)) out.generators.push_back(std::move(c));
  }
  out.conjugation_closed = true;
  return out;
}

ComplexifiedIdeal complexify_ideal(const System& system, const GroebnerLimits& limits) {
  System s = system.form == SystemForm::Real ? real_to_zeta(system) : system;
  if (!s.conjugation_closed) s = conjugation_closure(s, limits);
  const ContextPtr target = complexified_context(s.n);
  const auto zeta = s.context->indices(Block::Zeta);
  const auto zeta_bar = s.context->indices(Block::ZetaBar);
  std::vector<std::optional<Polynomial>> images(s.context->size());
  for (int j = 0; j < s.n; ++j) {
    images[zeta[j]] = Polynomial::variable(target, static_cast<std::size_t>(j));
    images[zeta_bar[j]] = Polynomial::variable(target, static_cast<std::size_t>(s.n + j));
  }
  std::vector<Polynomial> gens;
  for (const auto& g : s.generators) gens.push_back(poly_substitute(g, target, images));
  return {s.n, Ideal(target, std::move(gens))};
}

Ideal complexify_complex_set(std::span<const Polynomial> generators) {
  if (generators.empty()) throw InvalidInput("complexify_complex_set needs a context: pass at least one generator");
  const ContextPtr source = generators.front().context();
  const bool zeta_like = source->has_block(Block::Zeta);
  const auto holo = source->indices(zeta_like ? Block::Zeta : Block::Z);
  if (holo.empty()) throw InvalidInput("complex-set generators must be in zeta or z variables");
  const int n = static_cast<int>(holo.size());
  const ContextPtr target = complexified_context(n);
  std::vector<std::optional<Polynomial>> images(source->size());
  for (int j = 0; j < n; ++j) images[holo[j]] = Polynomial::variable(target, static_cast<std::size_t>(j));
  std::vector<Polynomial> gens;
  for (const auto& g : generators) {
    if (!same_context(g.context(), source)) throw InvalidInput("complex-set generators over different contexts");
    const auto sup = g.support();
    for (std::size_t i = 0; i < sup.size(); ++i)
      if (sup[i] && !images[i]) throw InvalidInput("complex-set generator involves a non-holomorphic variable");
    gens.push_back(poly_substitute(g, target, images));
  }
  const std::size_t count = gens.size();
  for (std::size_t k = 0; k < count; ++k) gens.push_back(poly_conjugate(gens[k]));
  return Ideal(target, std::move(gens));
}

int real_dimension(const System& system, const GroebnerLimits& limits) {
  const auto c = complexify_ideal(system, limits);
  const auto d = ideal_dimension(c.ideal, limits);
  if (!d) throw EmptySet();
  return *d;
}

}  // namespace hcd
