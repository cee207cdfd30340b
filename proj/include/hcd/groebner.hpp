#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hcd/polynomial.hpp"

namespace hcd {

/// Budget for Buchberger runs. Exceeding either bound raises ResourceLimit.
struct GroebnerLimits {
  std::size_t max_pairs = 50000;
  unsigned max_degree = 60;
};

/// The ideal generated by `generators` (zero generators are dropped).
class Ideal {
 public:
  explicit Ideal(ContextPtr ctx, std::vector<Polynomial> generators = {});

  const ContextPtr& context() const { return ctx_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

 private:
  ContextPtr ctx_;
  std::vector<Polynomial> gens_;
};

struct GroebnerBasis {
  MonomialOrder order;
  std::vector<Polynomial> basis;  // sorted by increasing leading monomial
  bool reduced = false;

  bool is_unit() const { return basis.size() == 1 && basis.front().is_constant(); }
};

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Remainder of multivariate division of f by G under `order`.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G, const MonomialOrder& order);

/// Reduced Groebner basis (normal selection strategy, Gebauer-Moeller criteria).
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, const GroebnerLimits& limits = {});

/// I intersected with the ring of the variables not flagged in `eliminated`;
/// the result lives in the context with those variables dropped.
Ideal eliminate(const Ideal& ideal, const std::vector<bool>& eliminated, const GroebnerLimits& limits = {});
Ideal eliminate(const Ideal& ideal, Block block, const GroebnerLimits& limits = {});

/// Krull dimension of k[vars]/I; std::nullopt when 1 is in I (empty variety).
std::optional<int> ideal_dimension(const Ideal& ideal, const GroebnerLimits& limits = {});
/// Dimension of the closure of the projection of V(I) onto the variables of `ambient`.
std::optional<int> ideal_dimension(const Ideal& ideal, Block ambient, const GroebnerLimits& limits = {});

/// Largest |S| such that no monomial in `leading` is supported inside S.
int independent_set_dimension(std::span<const Monomial> leading, std::size_t nvars);
/// A maximal-size independent set realising independent_set_dimension (first in subset order).
std::vector<std::size_t> maximal_independent_set(std::span<const Monomial> leading, std::size_t nvars);

bool ideal_membership(const Polynomial& f, const Ideal& ideal, const GroebnerLimits& limits = {});

/// Equality of ideals via their reduced grevlex bases.
bool same_ideal(const Ideal& a, const Ideal& b, const GroebnerLimits& limits = {});

}  // namespace hcd
