#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hcd/rational.hpp"

namespace hcd {

/// Labels for groups of variables. Zeta/ZetaBar and Z/W are conjugate pairs:
/// the k-th variable of one block is paired with the k-th of the other.
enum class Block : std::uint8_t {
  Zeta,     // ambient holomorphic coordinates
  ZetaBar,  // their conjugates, printed as conj(name)
  Z,        // first factor of the complexified space
  W,        // second factor of the complexified space
  Real,     // real coordinates x1 y1 x2 y2 ...
  Param,    // parameters and map source variables
  Exp,      // exp(param) symbols used by jet components
};

std::string_view block_name(Block b);

class VariableContext {
 public:
  struct Variable {
    std::string name;
    Block block;
  };

  explicit VariableContext(std::vector<Variable> vars);

  std::size_t size() const { return vars_.size(); }
  const std::string& name(std::size_t i) const { return vars_[i].name; }
  Block block(std::size_t i) const { return vars_[i].block; }
  const std::vector<Variable>& variables() const { return vars_; }

  std::optional<std::size_t> index_of(std::string_view name) const;
  std::vector<std::size_t> indices(Block b) const;
  std::vector<bool> mask(Block b) const;
  bool has_block(Block b) const;

  friend bool operator==(const VariableContext& a, const VariableContext& b);

 private:
  std::vector<Variable> vars_;
};

using ContextPtr = std::shared_ptr<const VariableContext>;

ContextPtr make_context(std::vector<VariableContext::Variable> vars);
bool same_context(const ContextPtr& a, const ContextPtr& b);

/// Dense exponent vector, one entry per context variable.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps);

  static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  /// other / *this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  /// Structural (not monomial-order) comparison, for use as a map key.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps_ < b.exps_; }

 private:
  std::vector<std::uint32_t> exps_;
  std::uint32_t degree_ = 0;
};

class MonomialOrder {
 public:
  enum class Kind { Lex, Grevlex, Elimination };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, {}); }
  /// Block order: grevlex on the flagged variables first, ties broken by grevlex on the rest.
  /// Any monomial containing a flagged variable is larger than every monomial free of them.
  static MonomialOrder elimination(std::vector<bool> eliminated);
  static MonomialOrder eliminating(const VariableContext& ctx, Block block);

  Kind kind() const { return kind_; }
  const std::vector<bool>& eliminated() const { return eliminated_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string name() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::vector<bool> eliminated) : kind_(kind), eliminated_(std::move(eliminated)) {}

  Kind kind_;
  std::vector<bool> eliminated_;
};

std::strong_ordering monomial_compare(const MonomialOrder& order, const Monomial& a, const Monomial& b);

struct Term {
  Monomial monomial;
  GaussianRational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Multivariate polynomial over Q(i). Terms are kept sorted in descending order
/// under the polynomial's active monomial order, with no zero coefficients.
class Polynomial {
 public:
  explicit Polynomial(ContextPtr ctx, MonomialOrder order = MonomialOrder::grevlex());
  Polynomial(ContextPtr ctx, std::vector<Term> terms, MonomialOrder order = MonomialOrder::grevlex());

  static Polynomial constant(ContextPtr ctx, const GaussianRational& c);
  static Polynomial variable(ContextPtr ctx, std::size_t index);
  static Polynomial variable(ContextPtr ctx, std::string_view name);

  const ContextPtr& context() const { return ctx_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  std::size_t size() const { return terms_.size(); }

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const GaussianRational& leading_coeff() const { return terms_.front().coeff; }
  /// -1 for the zero polynomial.
  int total_degree() const;

  Polynomial with_order(const MonomialOrder& order) const;
  Polynomial monic() const;
  bool is_real() const;
  bool uses_variable(std::size_t index) const;
  std::vector<bool> support() const;
  /// Coefficient of the given monomial (0 if absent).
  GaussianRational coefficient(const Monomial& m) const;

  GaussianRational evaluate(std::span<const GaussianRational> point) const;
  Polynomial pow(unsigned exponent) const;

  /// *this += c * m * g.
  void add_scaled(const GaussianRational& c, const Monomial& m, const Polynomial& g);

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const GaussianRational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const GaussianRational& c) { return a *= c; }
  friend Polynomial operator*(const GaussianRational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void normalize();
  void check_context(const Polynomial& other) const;

  ContextPtr ctx_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

enum class PolyOp { Add, Sub, Mul };
Polynomial poly_arith(const Polynomial& f, const Polynomial& g, PolyOp op);

/// Ring homomorphism sending variable k of f's context to images[k] (over target).
/// Variables that f does not use may have no image.
Polynomial poly_substitute(const Polynomial& f, const ContextPtr& target,
                           const std::vector<std::optional<Polynomial>>& images);
Polynomial poly_substitute(const Polynomial& f, const ContextPtr& target,
                           const std::map<std::string, Polynomial>& images);

/// Conjugates coefficients and swaps paired blocks (Zeta<->ZetaBar, Z<->W).
/// Real, Param and Exp variables are fixed.
Polynomial poly_conjugate(const Polynomial& f);

/// Partial derivative with respect to variable `index`.
Polynomial poly_derivative(const Polynomial& f, std::size_t index);

/// Re-expresses f over another context, matching variables by name.
Polynomial change_context(const Polynomial& f, const ContextPtr& target);

/// Canonical text: terms in descending active order, e.g. "z1^3*w2-1/2*i*z1+(1+i)".
std::string to_string(const Polynomial& f);
std::ostream& operator<<(std::ostream& os, const Polynomial& f);

}  // namespace hcd
