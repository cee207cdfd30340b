#include "hcd/crgeom.hpp"

#include <map>

#include "hcd/errors.hpp"

namespace hcd {

namespace {

constexpr std::size_t kMaxMinors = 200000;

System as_real(const System& system) {
  return system.form == SystemForm::Real ? system : zeta_to_real(system);
}

std::vector<GaussianRational> real_point(const System& real, const Point& p) {
  if (static_cast<int>(p.size()) != real.n)
    throw InvalidInput("point has " + std::to_string(p.size()) + " coordinates, expected " + std::to_string(real.n));
  std::vector<GaussianRational> out;
  for (const auto& c : real_coordinates(p)) out.emplace_back(c);
  return out;
}

void require_on_set(const System& real, const std::vector<GaussianRational>& x) {
  for (const auto& g : real.generators)
    if (!g.evaluate(x).is_zero()) throw PreconditionFailed("point does not lie on the set (" + to_string(g) + " != 0)");
}

// Determinant of the s x s submatrix (rows, cols) of a polynomial matrix, by
// expansion along rows with memoisation on the set of remaining columns.
Polynomial minor(const std::vector<std::vector<Polynomial>>& a, const std::vector<std::size_t>& rows,
                 const std::vector<std::size_t>& cols, const ContextPtr& ctx) {
  const std::size_t s = rows.size();
  std::map<std::uint32_t, Polynomial> memo;
  auto rec = [&](auto&& self, std::uint32_t mask) -> Polynomial {
    const std::size_t used = s - static_cast<std::size_t>(__builtin_popcount(mask));
    if (used == s) return Polynomial::constant(ctx, GaussianRational(1));
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    Polynomial acc(ctx);
    int position = 0;
    for (std::size_t c = 0; c < s; ++c) {
      if (!(mask & (1u << c))) continue;
      const Polynomial& entry = a[rows[used]][cols[c]];
      if (!entry.is_zero()) {
        Polynomial term = entry * self(self, mask & ~(1u << c));
        if (position % 2) acc -= term;
        else acc += term;
      }
      ++position;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return rec(rec, (1u << s) - 1);
}

template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<Rational> real_coordinates(const Point& p) {
  std::vector<Rational> out;
  for (const auto& c : p) {
    out.push_back(c.re());
    out.push_back(c.im());
  }
  return out;
}

Matrix<Rational> real_jacobian(const System& real_system, const Point& p) {
  const System real = as_real(real_system);
  const auto x = real_point(real, p);
  const std::size_t cols = 2 * static_cast<std::size_t>(real.n);
  Matrix<Rational> df(real.generators.size(), cols);
  for (std::size_t r = 0; r < real.generators.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) df(r, c) = poly_derivative(real.generators[r], c).evaluate(x).re();
  return df;
}

Matrix<Rational> compose_with_j(const Matrix<Rational>& df) {
  Matrix<Rational> out(df.rows(), df.cols());
  for (std::size_t r = 0; r < df.rows(); ++r)
    for (std::size_t j = 0; j + 1 < df.cols(); j += 2) {
      out(r, j) = df(r, j + 1);
      out(r, j + 1) = -df(r, j);
    }
  return out;
}

TangentSpace tangent_space(const System& system, const Point& p, const GroebnerLimits& limits) {
  const System real = as_real(system);
  require_on_set(real, real_point(real, p));
  const auto df = real_jacobian(real, p);
  TangentSpace ts;
  ts.d = real_dimension(real, limits);
  ts.rank_df = static_cast<int>(rank(df));
  ts.smooth = ts.rank_df == 2 * real.n - ts.d;
  ts.basis = nullspace(df);
  return ts;
}

CRReport cr_dimension_at(const System& system, const Point& p, const GroebnerLimits& limits) {
  const System real = as_real(system);
  const TangentSpace ts = tangent_space(real, p, limits);
  if (!ts.smooth)
    throw PreconditionFailed("point is not a smooth point of the set (Jacobian rank " + std::to_string(ts.rank_df) +
                             ", expected " + std::to_string(2 * real.n - ts.d) + ")");
  const auto df = real_jacobian(real, p);
  const int rank_stacked = static_cast<int>(rank(df.vstack(compose_with_j(df))));
  const int complex_tangent = 2 * real.n - rank_stacked;
  if (complex_tangent % 2 != 0) throw std::logic_error("T cap JT has odd real dimension");
  CRReport report{ts.d, complex_tangent / 2, true, ts.rank_df, rank_stacked};
  if (report.m < 0 || report.m > report.d / 2) throw std::logic_error("CR dimension out of range");
  return report;
}

Ideal cr_strata_ideal(const System& system, int k, const GroebnerLimits& limits) {
  const System real = as_real(system);
  const int d = real_dimension(real, limits);
  if (k < 0 || k > d / 2)
    throw InvalidInput("stratum index k=" + std::to_string(k) + " outside [0, " + std::to_string(d / 2) + "]");
  const ContextPtr ctx = real.context;
  const std::size_t cols = 2 * static_cast<std::size_t>(real.n);
  const std::size_t g = real.generators.size();
  std::vector<std::vector<Polynomial>> stacked(2 * g, std::vector<Polynomial>(cols, Polynomial(ctx)));
  for (std::size_t r = 0; r < g; ++r)
    for (std::size_t j = 0; j < cols; j += 2) {
      const Polynomial dx = poly_derivative(real.generators[r], j);
      const Polynomial dy = poly_derivative(real.generators[r], j + 1);
      stacked[r][j] = dx;
      stacked[r][j + 1] = dy;
      stacked[g + r][j] = dy;
      stacked[g + r][j + 1] = -dx;
    }
  std::vector<Polynomial> gens = real.generators;
  const std::size_t s = cols - 2 * static_cast<std::size_t>(k) + 1;
  std::size_t count = 0;
  for_each_subset(2 * g, s, [&](const std::vector<std::size_t>& rows) {
    for_each_subset(cols, s, [&](const std::vector<std::size_t>& cs) {
      if (++count > kMaxMinors) throw ResourceLimit("too many minors for the stratum ideal");
      Polynomial m = minor(stacked, rows, cs, ctx);
      if (m.is_zero()) return;
      m = m.monic();
      for (const auto& q : gens)
        if (q == m) return;
      gens.push_back(std::move(m));
    });
  });
  return Ideal(ctx, std::move(gens));
}

DmReport verify_d_minus_m(const System& system, std::span<const Point> points, const GroebnerLimits& limits) {
  DmReport report;
  report.h = holomorphic_closure(system, limits).hc_dimension;
  for (const auto& p : points) {
    DmCheck check;
    check.point = p;
    try {
      const CRReport cr = cr_dimension_at(system, p, limits);
      check.d = cr.d;
      check.m = cr.m;
      check.smooth = true;
      check.agrees = report.h == cr.d - cr.m;
      if (!check.agrees)
        check.note = "h != d - m: the point may be CR-singular or in the exceptional set, or germ and global data differ";
    } catch (const PreconditionFailed& e) {
      check.note = e.what();
    } catch (const InvalidInput& e) {
      check.note = e.what();
    }
    report.all_agree = report.all_agree && check.agrees;
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace hcd
