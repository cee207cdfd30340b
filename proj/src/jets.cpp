#include "hcd/jets.hpp"

#include <algorithm>

#include "hcd/errors.hpp"
#include "hcd/matrix.hpp"

namespace hcd {

Jet::Jet(ContextPtr variables, int order) : vars_(std::move(variables)), order_(order) {
  if (!vars_) throw InvalidInput("jet without variables");
  if (order_ < 0) throw InvalidInput("jet order must be non-negative");
}

Jet Jet::constant(ContextPtr variables, int order, const Rational& c) {
  Jet j(std::move(variables), order);
  j.add(Monomial(j.vars_->size()), c);
  return j;
}

Jet Jet::variable(ContextPtr variables, int order, std::size_t index) {
  Jet j(std::move(variables), order);
  if (index >= j.vars_->size()) throw InvalidInput("jet variable index out of range");
  if (order >= 1) j.add(Monomial::variable(j.vars_->size(), index), Rational(1));
  return j;
}

Jet Jet::from_polynomial(const Polynomial& p, int order) {
  Jet j(p.context(), order);
  for (const auto& t : p.terms()) {
    if (!t.coeff.is_real()) throw InvalidInput("jets have rational coefficients; got " + t.coeff.to_string());
    if (static_cast<int>(t.monomial.degree()) <= order) j.add(t.monomial, t.coeff.re());
  }
  return j;
}

Rational Jet::coefficient(const Monomial& m) const {
  const auto it = coeffs_.find(m);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void Jet::add(const Monomial& m, const Rational& c) {
  if (c.is_zero() || static_cast<int>(m.degree()) > order_) return;
  auto [it, inserted] = coeffs_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

void Jet::check_compatible(const Jet& other) const {
  if (!same_context(vars_, other.vars_)) throw InvalidInput("jets over different variables");
}

Jet Jet::truncated(int order) const {
  Jet out(vars_, std::min(order, order_));
  for (const auto& [m, c] : coeffs_) out.add(m, c);
  return out;
}

Jet& Jet::operator+=(const Jet& rhs) {
  check_compatible(rhs);
  order_ = std::min(order_, rhs.order_);
  *this = truncated(order_);
  for (const auto& [m, c] : rhs.coeffs_) add(m, c);
  return *this;
}

Jet& Jet::operator-=(const Jet& rhs) {
  check_compatible(rhs);
  order_ = std::min(order_, rhs.order_);
  *this = truncated(order_);
  for (const auto& [m, c] : rhs.coeffs_) add(m, -c);
  return *this;
}

Jet& Jet::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [m, v] : coeffs_) v *= c;
  return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
  a.check_compatible(b);
  Jet out(a.vars_, std::min(a.order_, b.order_));
  for (const auto& [ma, ca] : a.coeffs_)
    for (const auto& [mb, cb] : b.coeffs_)
      if (static_cast<int>(ma.degree() + mb.degree()) <= out.order_) out.add(ma * mb, ca * cb);
  return out;
}

bool operator==(const Jet& a, const Jet& b) {
  return same_context(a.vars_, b.vars_) && a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

Jet jet_exp(const ContextPtr& variables, std::size_t index, int order) {
  if (index >= variables->size()) throw InvalidInput("jet variable index out of range");
  std::vector<Term> terms;
  Rational factorial(1);
  for (int j = 0; j <= order; ++j) {
    if (j > 0) factorial *= Rational(j);
    terms.push_back({Monomial::variable(variables->size(), index, static_cast<std::uint32_t>(j)),
                     GaussianRational(factorial.inverse())});
  }
  return Jet::from_polynomial(Polynomial(variables, std::move(terms)), order);
}

Jet jet_compose(const Polynomial& F, std::span<const Jet> components, int order) {
  const std::size_t r = F.context()->size();
  if (components.size() != r)
    throw InvalidInput("composition needs " + std::to_string(r) + " components, got " +
                       std::to_string(components.size()));
  if (r == 0) throw InvalidInput("composition needs at least one component");
  if (!F.is_real()) throw InvalidInput("composition: relation polynomial must have rational coefficients");
  const ContextPtr vars = components.front().variables();
  for (const auto& c : components) {
    if (!same_context(c.variables(), vars)) throw InvalidInput("components over different variables");
    if (c.order() < order)
      throw InvalidInput("component order " + std::to_string(c.order()) + " is below the requested order " +
                         std::to_string(order));
  }
  std::vector<std::vector<Jet>> powers(r);
  auto power = [&](std::size_t i, std::uint32_t k) -> const Jet& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Jet::constant(vars, order, Rational(1)));
    while (cache.size() <= k) cache.push_back((cache.back() * components[i]).truncated(order));
    return cache[k];
  };
  Jet out(vars, order);
  for (const auto& t : F.terms()) {
    Jet term = Jet::constant(vars, order, t.coeff.re());
    for (std::size_t i = 0; i < r && !term.is_zero(); ++i)
      if (t.monomial[i]) term = term * power(i, t.monomial[i]);
    out += term;
  }
  return out;
}

Jet evaluate_jet(const Polynomial& expression, int order) {
  const auto& ctx = *expression.context();
  std::vector<VariableContext::Variable> params;
  for (const auto& v : ctx.variables())
    if (v.block == Block::Param) params.push_back(v);
  const ContextPtr vars = make_context(params);
  std::vector<Jet> images;
  for (const auto& v : ctx.variables()) {
    if (v.block == Block::Param) {
      images.push_back(Jet::variable(vars, order, *vars->index_of(v.name)));
    } else if (v.block == Block::Exp) {
      // Exp symbols are named "exp(<param>)".
      const std::string inner = v.name.substr(4, v.name.size() - 5);
      const auto idx = vars->index_of(inner);
      if (!idx) throw InvalidInput("'" + v.name + "' refers to an unknown parameter");
      images.push_back(jet_exp(vars, *idx, order));
    } else {
      throw InvalidInput("jet expressions may only use parameters and exp(parameter)");
    }
  }
  return jet_compose(expression, images, order);
}

ContextPtr relation_context(std::size_t r) {
  std::vector<VariableContext::Variable> vars;
  for (std::size_t j = 1; j <= r; ++j) vars.push_back({"z" + std::to_string(j), Block::Z});
  return make_context(std::move(vars));
}

namespace {

// Monomials in r variables of degree <= D, in descending grevlex order.
std::vector<Monomial> monomials_up_to(std::size_t r, int D) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> e(r, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == r) {
      out.emplace_back(e);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[i] = static_cast<std::uint32_t>(k);
      self(self, i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(rec, 0, D);
  const auto order = MonomialOrder::grevlex();
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
  return out;
}

}  // namespace

ProbeResult relation_probe(std::span<const Jet> components, int order, int max_degree, const ProbeLimits& limits) {
  if (order < 1 || max_degree < 1) throw InvalidInput("relation probe needs order >= 1 and degree >= 1");
  if (components.empty()) throw InvalidInput("relation probe needs at least one component");
  const std::size_t r = components.size();
  const ContextPtr zctx = relation_context(r);
  ProbeResult result{order, max_degree, std::nullopt, std::nullopt};

  std::map<Monomial, Jet> images;
  for (int D = 1; D <= max_degree; ++D) {
    const auto columns = monomials_up_to(r, D);
    std::map<Monomial, std::size_t> row_index;
    for (const auto& m : columns) {
      auto it = images.find(m);
      if (it == images.end())
        it = images.emplace(m, jet_compose(Polynomial(zctx, {Term{m, GaussianRational(1)}}), components, order)).first;
      for (const auto& [pm, c] : it->second.coefficients()) row_index.emplace(pm, 0);
    }
    std::size_t next = 0;
    for (auto& [pm, idx] : row_index) idx = next++;
    if (row_index.size() * columns.size() > limits.max_entries)
      throw ResourceLimit("relation probe linear system exceeds the configured size");
    Matrix<Rational> system(row_index.size(), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
      for (const auto& [pm, v] : images.at(columns[c]).coefficients()) system(row_index.at(pm), c) = v;
    const auto kernel = nullspace(system);
    if (kernel.empty()) continue;
    std::vector<Rational> v = kernel.front();
    const auto lead = std::find_if(v.begin(), v.end(), [](const Rational& q) { return !q.is_zero(); });
    const Rational scale = lead->inverse();
    std::vector<Term> terms;
    for (std::size_t c = 0; c < columns.size(); ++c)
      if (!v[c].is_zero()) terms.push_back({columns[c], GaussianRational(v[c] * scale)});
    result.min_relation_degree = D;
    result.witness = Polynomial(zctx, std::move(terms));
    return result;
  }
  return result;
}

std::vector<Jet> osgood_components(int order) {
  const ContextPtr vars = make_context({{"v", Block::Param}, {"w", Block::Param}});
  const Jet v = Jet::variable(vars, order, 0);
  const Jet w = Jet::variable(vars, order, 1);
  const Jet vw = v * w;
  return {v, vw, vw * jet_exp(vars, 1, order)};
}

std::vector<ProbeResult> osgood_probe(std::span<const int> orders, int max_degree, const ProbeLimits& limits) {
  std::vector<ProbeResult> out;
  for (int K : orders) {
    const auto comps = osgood_components(K);
    out.push_back(relation_probe(comps, K, max_degree, limits));
  }
  return out;
}

}  // namespace hcd
