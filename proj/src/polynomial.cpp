#include "hcd/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <set>

#include "hcd/errors.hpp"

namespace hcd {

std::string_view block_name(Block b) {
  switch (b) {
    case Block::Zeta: return "zeta";
    case Block::ZetaBar: return "zetabar";
    case Block::Z: return "z";
    case Block::W: return "w";
    case Block::Real: return "real";
    case Block::Param: return "param";
    case Block::Exp: return "exp";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// VariableContext

VariableContext::VariableContext(std::vector<Variable> vars) : vars_(std::move(vars)) {
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.name.empty()) throw InvalidInput("empty variable name");
    if (!seen.insert(v.name).second) throw InvalidInput("duplicate variable name '" + v.name + "'");
  }
}

std::optional<std::size_t> VariableContext::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return i;
  return std::nullopt;
}

std::vector<std::size_t> VariableContext::indices(Block b) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].block == b) out.push_back(i);
  return out;
}

std::vector<bool> VariableContext::mask(Block b) const {
  std::vector<bool> out(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) out[i] = vars_[i].block == b;
  return out;
}

bool VariableContext::has_block(Block b) const {
  return std::any_of(vars_.begin(), vars_.end(), [b](const Variable& v) { return v.block == b; });
}

bool operator==(const VariableContext& a, const VariableContext& b) {
  if (a.vars_.size() != b.vars_.size()) return false;
  for (std::size_t i = 0; i < a.vars_.size(); ++i)
    if (a.vars_[i].name != b.vars_[i].name || a.vars_[i].block != b.vars_[i].block) return false;
  return true;
}

ContextPtr make_context(std::vector<VariableContext::Variable> vars) {
  return std::make_shared<const VariableContext>(std::move(vars));
}

bool same_context(const ContextPtr& a, const ContextPtr& b) { return a == b || (a && b && *a == *b); }

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
  for (auto e : exps_) degree_ += e;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t power) {
  std::vector<std::uint32_t> e(nvars, 0);
  e.at(index) = power;
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  std::vector<std::uint32_t> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(exps_[i], other.exps_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  std::vector<std::uint32_t> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = other.exps_[i] - exps_[i];
  return Monomial(std::move(e));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  std::vector<std::uint32_t> e(a.exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.exps_[i] + b.exps_[i];
  return Monomial(std::move(e));
}

// ---------------------------------------------------------------------------
// MonomialOrder

namespace {

template <class Pred>
std::strong_ordering grevlex_on(const Monomial& a, const Monomial& b, Pred in_block) {
  std::uint32_t da = 0, db = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (in_block(i)) {
      da += a[i];
      db += b[i];
    }
  if (da != db) return da <=> db;
  for (std::size_t i = a.size(); i-- > 0;)
    if (in_block(i) && a[i] != b[i]) return b[i] <=> a[i];
  return std::strong_ordering::equal;
}

}  // namespace

MonomialOrder MonomialOrder::elimination(std::vector<bool> eliminated) {
  return MonomialOrder(Kind::Elimination, std::move(eliminated));
}

MonomialOrder MonomialOrder::eliminating(const VariableContext& ctx, Block block) {
  if (!ctx.has_block(block)) throw InvalidInput("context has no '" + std::string(block_name(block)) + "' block");
  return elimination(ctx.mask(block));
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != b.size()) throw InvalidInput("monomial comparison: context mismatch");
  switch (kind_) {
    case Kind::Lex:
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
      return std::strong_ordering::equal;
    case Kind::Grevlex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return b[i] <=> a[i];
      return std::strong_ordering::equal;
    case Kind::Elimination: {
      if (eliminated_.size() != a.size()) throw InvalidInput("elimination order: context mismatch");
      const auto first = grevlex_on(a, b, [this](std::size_t i) { return eliminated_[i]; });
      if (first != 0) return first;
      return grevlex_on(a, b, [this](std::size_t i) { return !eliminated_[i]; });
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::Lex: return "lex";
    case Kind::Grevlex: return "grevlex";
    case Kind::Elimination: return "elimination";
  }
  return "?";
}

std::strong_ordering monomial_compare(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
  return order.compare(a, b);
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(ContextPtr ctx, MonomialOrder order) : ctx_(std::move(ctx)), order_(std::move(order)) {
  if (!ctx_) throw InvalidInput("polynomial without a context");
}

Polynomial::Polynomial(ContextPtr ctx, std::vector<Term> terms, MonomialOrder order)
    : ctx_(std::move(ctx)), order_(std::move(order)), terms_(std::move(terms)) {
  if (!ctx_) throw InvalidInput("polynomial without a context");
  for (const auto& t : terms_)
    if (t.monomial.size() != ctx_->size()) throw InvalidInput("monomial length does not match context");
  normalize();
}

Polynomial Polynomial::constant(ContextPtr ctx, const GaussianRational& c) {
  const std::size_t n = ctx->size();
  return Polynomial(std::move(ctx), {Term{Monomial(n), c}});
}

Polynomial Polynomial::variable(ContextPtr ctx, std::size_t index) {
  const std::size_t n = ctx->size();
  if (index >= n) throw InvalidInput("variable index out of range");
  return Polynomial(std::move(ctx), {Term{Monomial::variable(n, index), GaussianRational(1)}});
}

Polynomial Polynomial::variable(ContextPtr ctx, std::string_view name) {
  const auto idx = ctx->index_of(name);
  if (!idx) throw InvalidInput("unknown variable '" + std::string(name) + "'");
  return variable(std::move(ctx), *idx);
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [this](const Term& a, const Term& b) { return order_.greater(a.monomial, b.monomial); });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().monomial == t.monomial)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff.is_zero(); });
  terms_ = std::move(merged);
}

void Polynomial::check_context(const Polynomial& other) const {
  if (!same_context(ctx_, other.ctx_)) throw InvalidInput("polynomial context mismatch");
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.monomial.degree()));
  return d;
}

Polynomial Polynomial::with_order(const MonomialOrder& order) const {
  if (order == order_) return *this;
  return Polynomial(ctx_, terms_, order);
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coeff().is_one()) return *this;
  Polynomial out = *this;
  const GaussianRational inv = leading_coeff().inverse();
  for (auto& t : out.terms_) t.coeff *= inv;
  return out;
}

bool Polynomial::is_real() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff.is_real(); });
}

bool Polynomial::uses_variable(std::size_t index) const {
  return std::any_of(terms_.begin(), terms_.end(), [index](const Term& t) { return t.monomial[index] != 0; });
}

std::vector<bool> Polynomial::support() const {
  std::vector<bool> s(ctx_->size(), false);
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < s.size(); ++i)
      if (t.monomial[i] != 0) s[i] = true;
  return s;
}

GaussianRational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.monomial == m) return t.coeff;
  return GaussianRational(0);
}

GaussianRational Polynomial::evaluate(std::span<const GaussianRational> point) const {
  if (point.size() != ctx_->size()) throw InvalidInput("evaluation point has the wrong dimension");
  GaussianRational sum;
  for (const auto& t : terms_) {
    GaussianRational v = t.coeff;
    for (std::size_t i = 0; i < point.size() && !v.is_zero(); ++i)
      for (std::uint32_t k = 0; k < t.monomial[i]; ++k) v *= point[i];
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(ctx_, GaussianRational(1)).with_order(order_);
  Polynomial base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent) base *= base;
  }
  return result;
}

void Polynomial::add_scaled(const GaussianRational& c, const Monomial& m, const Polynomial& g) {
  check_context(g);
  if (c.is_zero() || g.is_zero()) return;
  if (&g == this) {
    const Polynomial copy = g;
    add_scaled(c, m, copy);
    return;
  }
  const Polynomial& src = g.order_ == order_ ? g : g.with_order(order_);
  std::vector<Term> out;
  out.reserve(terms_.size() + src.terms_.size());
  auto a = terms_.begin();
  auto b = src.terms_.begin();
  while (a != terms_.end() || b != src.terms_.end()) {
    if (b == src.terms_.end()) {
      out.push_back(std::move(*a++));
      continue;
    }
    Term scaled{m * b->monomial, c * b->coeff};
    if (a == terms_.end()) {
      out.push_back(std::move(scaled));
      ++b;
      continue;
    }
    const auto cmp = order_.compare(a->monomial, scaled.monomial);
    if (cmp > 0) {
      out.push_back(std::move(*a++));
    } else if (cmp < 0) {
      out.push_back(std::move(scaled));
      ++b;
    } else {
      a->coeff += scaled.coeff;
      if (!a->coeff.is_zero()) out.push_back(std::move(*a));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  add_scaled(GaussianRational(1), Monomial(ctx_->size()), rhs);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  add_scaled(GaussianRational(-1), Monomial(ctx_->size()), rhs);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_context(b);
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back(Term{s.monomial * t.monomial, s.coeff * t.coeff});
  return Polynomial(a.ctx_, std::move(prod), a.order_);
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_context(a.ctx_, b.ctx_)) return false;
  if (a.order_ == b.order_) return a.terms_ == b.terms_;
  return a.terms_ == b.with_order(a.order_).terms_;
}

Polynomial poly_arith(const Polynomial& f, const Polynomial& g, PolyOp op) {
  switch (op) {
    case PolyOp::Add: return f + g;
    case PolyOp::Sub: return f - g;
    case PolyOp::Mul: return f * g;
  }
  throw InvalidInput("unknown polynomial operation");
}

// ---------------------------------------------------------------------------
// Substitution and conjugation

Polynomial poly_substitute(const Polynomial& f, const ContextPtr& target,
                           const std::vector<std::optional<Polynomial>>& images) {
  const auto& ctx = *f.context();
  if (images.size() != ctx.size()) throw InvalidInput("substitution: one image slot per variable expected");
  const auto used = f.support();
  for (std::size_t i = 0; i < used.size(); ++i) {
    if (!used[i]) continue;
    if (!images[i]) throw InvalidInput("substitution: missing image for variable '" + ctx.name(i) + "'");
    if (!same_context(images[i]->context(), target))
      throw InvalidInput("substitution: image of '" + ctx.name(i) + "' is not over the target context");
  }
  // Cache of powers per variable.
  std::vector<std::vector<Polynomial>> powers(ctx.size());
  auto power = [&](std::size_t var, std::uint32_t k) -> const Polynomial& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, GaussianRational(1)));
    while (cache.size() <= k) cache.push_back(cache.back() * *images[var]);
    return cache[k];
  };
  Polynomial result(target);
  for (const auto& t : f.terms()) {
    Polynomial term = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < ctx.size(); ++i)
      if (t.monomial[i] != 0) term *= power(i, t.monomial[i]);
    result += term;
  }
  return result;
}

Polynomial poly_substitute(const Polynomial& f, const ContextPtr& target,
                           const std::map<std::string, Polynomial>& images) {
  const auto& ctx = *f.context();
  std::vector<std::optional<Polynomial>> slots(ctx.size());
  for (const auto& [name, image] : images) {
    const auto idx = ctx.index_of(name);
    if (!idx) throw InvalidInput("substitution: '" + name + "' is not a variable of the source context");
    slots[*idx] = image;
  }
  return poly_substitute(f, target, slots);
}

Polynomial poly_conjugate(const Polynomial& f) {
  const auto& ctx = *f.context();
  std::vector<std::size_t> perm(ctx.size());
  for (std::size_t i = 0; i < ctx.size(); ++i) perm[i] = i;
  auto pair_blocks = [&](Block a, Block b) {
    const auto ia = ctx.indices(a);
    const auto ib = ctx.indices(b);
    if (ia.size() != ib.size())
      throw InvalidInput("conjugation: blocks '" + std::string(block_name(a)) + "' and '" +
                         std::string(block_name(b)) + "' have different sizes");
    for (std::size_t k = 0; k < ia.size(); ++k) {
      perm[ia[k]] = ib[k];
      perm[ib[k]] = ia[k];
    }
  };
  pair_blocks(Block::Zeta, Block::ZetaBar);
  pair_blocks(Block::Z, Block::W);
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::vector<std::uint32_t> e(ctx.size());
    for (std::size_t i = 0; i < ctx.size(); ++i) e[perm[i]] = t.monomial[i];
    terms.push_back(Term{Monomial(std::move(e)), t.coeff.conj()});
  }
  return Polynomial(f.context(), std::move(terms), f.order());
}

Polynomial poly_derivative(const Polynomial& f, std::size_t index) {
  if (index >= f.context()->size()) throw InvalidInput("derivative: variable index out of range");
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    const std::uint32_t e = t.monomial[index];
    if (e == 0) continue;
    std::vector<std::uint32_t> exps = t.monomial.exponents();
    exps[index] = e - 1;
    terms.push_back(Term{Monomial(std::move(exps)), t.coeff * GaussianRational(static_cast<long>(e))});
  }
  return Polynomial(f.context(), std::move(terms), f.order());
}

Polynomial change_context(const Polynomial& f, const ContextPtr& target) {
  const auto& ctx = *f.context();
  std::vector<std::optional<std::size_t>> map(ctx.size());
  for (std::size_t i = 0; i < ctx.size(); ++i) map[i] = target->index_of(ctx.name(i));
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::vector<std::uint32_t> e(target->size(), 0);
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (!map[i]) throw InvalidInput("change of context: variable '" + ctx.name(i) + "' has no counterpart");
      e[*map[i]] = t.monomial[i];
    }
    terms.push_back(Term{Monomial(std::move(e)), t.coeff});
  }
  return Polynomial(target, std::move(terms));
}

// ---------------------------------------------------------------------------
// Printing

namespace {

std::string monomial_text(const VariableContext& ctx, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += ctx.name(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

}  // namespace

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    const std::string mono = monomial_text(*f.context(), t.monomial);
    const auto& c = t.coeff;
    bool negative = false;
    std::string body;
    if (c.is_real()) {
      negative = c.re().sign() < 0;
      const Rational a = c.re().abs();
      if (a.is_one() && !mono.empty())
        body = mono;
      else
        body = a.to_string() + (mono.empty() ? "" : "*" + mono);
    } else if (c.re().is_zero()) {
      negative = c.im().sign() < 0;
      const Rational b = c.im().abs();
      body = (b.is_one() ? std::string("i") : b.to_string() + "*i") + (mono.empty() ? "" : "*" + mono);
    } else {
      body = "(" + c.to_string() + ")" + (mono.empty() ? "" : "*" + mono);
    }
    if (first)
      out += negative ? "-" + body : body;
    else
      out += (negative ? "-" : "+") + body;
    first = false;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << to_string(f); }

}  // namespace hcd
