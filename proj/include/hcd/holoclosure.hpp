#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hcd/complexify.hpp"
#include "hcd/groebner.hpp"

namespace hcd {

using Point = std::vector<GaussianRational>;

/// Holomorphic closure data of a real set. hc_ideal lives over the z-block.
struct HCReport {
  Ideal hc_ideal;
  int hc_dimension = 0;
  int real_dimension = 0;
};

/// Zariski closure of pi_z applied to the complexification: eliminate the w-block.
/// Throws EmptySet for an empty set.
HCReport holomorphic_closure(const System& system, const GroebnerLimits& limits = {});

/// Image closure of the complexified parametrization t -> phi(t).
/// All components share one context whose variables are the parameters (Param block).
HCReport hc_dimension_parametrized(std::span<const Polynomial> phi, const GroebnerLimits& limits = {});

/// A polynomial map from the variables of `source` (Param block) to C^n.
struct PolynomialMap {
  ContextPtr source;
  std::vector<Polynomial> components;
};

PolynomialMap make_map(std::vector<Polynomial> components);

/// Kernel of the pullback C[z] -> C[source]/A, i.e. the elimination ideal of the graph.
Ideal pullback_kernel(const PolynomialMap& map, const Ideal& source_ideal, const GroebnerLimits& limits = {});

/// Krull dimension of C[z]/ker(pullback).
int gabrielov_r3(const PolynomialMap& map, const Ideal& source_ideal, const GroebnerLimits& limits = {});

struct RankReport {
  int r1 = 0;
  int r3 = 0;
  int lambda = 0;
  bool regular = false;
  Point fibre_witness;
  Ideal kernel;
};

struct RankOptions {
  int samples = 5;
  int attempts_per_sample = 60;
  /// Used as the only fibre point when present (must lie on V(A)).
  std::optional<Point> witness;
};

/// r1 = dim A - lambda, lambda the minimum fibre dimension over seeded random points of V(A).
RankReport gabrielov_r1(const PolynomialMap& map, const Ideal& source_ideal, std::uint64_t seed,
                        const RankOptions& options = {}, const GroebnerLimits& limits = {});

/// Attempts to find a rational point of V(A) by fixing a maximal independent set of
/// variables at random values and solving the resulting triangular system.
std::optional<Point> sample_rational_point(const Ideal& ideal, std::uint64_t seed, int attempts,
                                           const GroebnerLimits& limits = {});

}  // namespace hcd
