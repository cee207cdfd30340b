#pragma once

#include <span>
#include <string>
#include <vector>

#include "hcd/complexify.hpp"
#include "hcd/holoclosure.hpp"
#include "hcd/matrix.hpp"

namespace hcd {

// Real coordinates are ordered (x1, y1, ..., xn, yn) and the complex structure is
// J(e_xj) = e_yj, J(e_yj) = -e_xj.

/// Interleaved real coordinates (Re p1, Im p1, ...).
std::vector<Rational> real_coordinates(const Point& p);

struct TangentSpace {
  std::vector<std::vector<Rational>> basis;  // kernel of the real Jacobian
  int d = 0;                                 // real dimension of the set
  int rank_df = 0;
  bool smooth = false;
};

struct CRReport {
  int d = 0;
  int m = 0;
  bool smooth = false;
  int rank_df = 0;
  int rank_stacked = 0;
};

/// Real Jacobian of the (real-form) generators at p, rows = generators.
Matrix<Rational> real_jacobian(const System& real_system, const Point& p);
/// Df composed with J: column x_j takes Df's y_j column, column y_j takes -Df's x_j column.
Matrix<Rational> compose_with_j(const Matrix<Rational>& df);

/// Accepts zeta- or real-form systems. Throws PreconditionFailed when p is off the set.
TangentSpace tangent_space(const System& system, const Point& p, const GroebnerLimits& limits = {});

/// m = (2n - rank [Df; Df J]) / 2. Throws PreconditionFailed at non-smooth points.
CRReport cr_dimension_at(const System& system, const Point& p, const GroebnerLimits& limits = {});

/// Generators plus every (2n-2k+1)-minor of the symbolic stacked matrix [Df; Df J], over the real context.
Ideal cr_strata_ideal(const System& system, int k, const GroebnerLimits& limits = {});

struct DmCheck {
  Point point;
  int d = 0;
  int m = 0;
  bool smooth = false;
  bool agrees = false;
  std::string note;
};

struct DmReport {
  int h = 0;  // global holomorphic closure dimension
  std::vector<DmCheck> checks;
  bool all_agree = true;
};

/// Compares h with d - m at each point. Never throws for bad points; they are flagged.
DmReport verify_d_minus_m(const System& system, std::span<const Point> points, const GroebnerLimits& limits = {});

}  // namespace hcd
