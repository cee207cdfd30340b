#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "hcd/polynomial.hpp"

namespace hcd {

/// Power series over Q truncated at total degree `order`.
class Jet {
 public:
  Jet(ContextPtr variables, int order);

  static Jet constant(ContextPtr variables, int order, const Rational& c);
  static Jet variable(ContextPtr variables, int order, std::size_t index);
  /// Truncation of a real-coefficient polynomial over `variables`.
  static Jet from_polynomial(const Polynomial& p, int order);

  const ContextPtr& variables() const { return vars_; }
  int order() const { return order_; }
  const std::map<Monomial, Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(const Monomial& m) const;
  bool is_zero() const { return coeffs_.empty(); }

  Jet truncated(int order) const;

  Jet& operator+=(const Jet& rhs);
  Jet& operator-=(const Jet& rhs);
  Jet& operator*=(const Rational& c);
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, const Rational& c) { return a *= c; }
  /// Product truncated at the smaller of the two orders.
  friend Jet operator*(const Jet& a, const Jet& b);

  friend bool operator==(const Jet& a, const Jet& b);

 private:
  void check_compatible(const Jet& other) const;
  void add(const Monomial& m, const Rational& c);

  ContextPtr vars_;
  int order_;
  std::map<Monomial, Rational> coeffs_;
};

/// sum_{j <= K} v^j / j! for variable `index`.
Jet jet_exp(const ContextPtr& variables, std::size_t index, int order);

/// F(components) truncated at `order`; F must have real coefficients and one
/// component per variable of its context, each of order >= `order`.
Jet jet_compose(const Polynomial& F, std::span<const Jet> components, int order);

/// Evaluates an expression over Param variables and exp(param) symbols as a jet.
/// The result lives over the Param variables only.
Jet evaluate_jet(const Polynomial& expression, int order);

struct ProbeLimits {
  std::size_t max_entries = 4'000'000;  // rows * columns of the linear system
};

struct ProbeResult {
  int jet_order = 0;
  int max_degree = 0;
  std::optional<int> min_relation_degree;  // nullopt: no relation of degree <= max_degree
  std::optional<Polynomial> witness;       // over z1..zr
};

/// Context z1..zr used for relation witnesses.
ContextPtr relation_context(std::size_t r);

/// Least D' <= D admitting a nonzero F, deg F <= D', with F(components) = 0 mod degree > K.
ProbeResult relation_probe(std::span<const Jet> components, int order, int max_degree,
                           const ProbeLimits& limits = {});

/// (v, v*w, v*w*exp(w)) truncated at `order`.
std::vector<Jet> osgood_components(int order);

std::vector<ProbeResult> osgood_probe(std::span<const int> orders, int max_degree, const ProbeLimits& limits = {});

}  // namespace hcd
