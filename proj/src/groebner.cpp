#include "hcd/groebner.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "hcd/errors.hpp"

namespace hcd {

Ideal::Ideal(ContextPtr ctx, std::vector<Polynomial> generators) : ctx_(std::move(ctx)) {
  for (auto& g : generators) {
    if (!same_context(g.context(), ctx_)) throw InvalidInput("ideal generator over a different context");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  Polynomial s(f.context(), f.order());
  s.add_scaled(f.leading_coeff().inverse(), f.leading_monomial().quotient_of(l), f);
  s.add_scaled(-g.leading_coeff().inverse(), g.leading_monomial().quotient_of(l), g);
  return s;
}

namespace {

// Full reduction; f and every element of G already use the same order.
Polynomial reduce(Polynomial p, const std::vector<const Polynomial*>& G) {
  Polynomial remainder(p.context(), p.order());
  std::vector<Term> rem_terms;
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    const Polynomial* divisor = nullptr;
    for (const auto* g : G)
      if (g->leading_monomial().divides(lt.monomial)) {
        divisor = g;
        break;
      }
    if (divisor) {
      const GaussianRational c = -(lt.coeff / divisor->leading_coeff());
      const Monomial m = divisor->leading_monomial().quotient_of(lt.monomial);
      p.add_scaled(c, m, *divisor);
    } else {
      rem_terms.push_back(lt);
      Polynomial lead(p.context(), {lt}, p.order());
      p -= lead;
    }
  }
  return Polynomial(p.context(), std::move(rem_terms), p.order());
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class Buchberger {
 public:
  Buchberger(const MonomialOrder& order, const GroebnerLimits& limits) : order_(order), limits_(limits) {}

  GroebnerBasis run(const Ideal& ideal) {
    for (const auto& g : ideal.generators()) {
      if (g.total_degree() > static_cast<int>(limits_.max_degree))
        throw ResourceLimit("generator degree exceeds the Groebner degree budget");
      Polynomial h = reduce(g.with_order(order_), active_polys()).monic();
      if (h.is_zero()) continue;
      if (h.is_constant()) return unit(ideal.context());
      update(std::move(h));
    }
    std::size_t processed = 0;
    while (!pairs_.empty()) {
      const auto pick = select();
      const Pair pair = pairs_[pick];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(pick));
      if (++processed > limits_.max_pairs) throw ResourceLimit("S-pair budget exhausted");
      if (pair.lcm.degree() > limits_.max_degree) throw ResourceLimit("S-pair degree exceeds the degree budget");
      Polynomial h = reduce(s_polynomial(polys_[pair.i], polys_[pair.j]), active_polys()).monic();
      if (h.is_zero()) continue;
      if (h.is_constant()) return unit(ideal.context());
      if (h.total_degree() > static_cast<int>(limits_.max_degree))
        throw ResourceLimit("basis element degree exceeds the degree budget");
      update(std::move(h));
    }
    return finish();
  }

 private:
  std::vector<const Polynomial*> active_polys() const {
    std::vector<const Polynomial*> out;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) out.push_back(&polys_[k]);
    return out;
  }

  GroebnerBasis unit(const ContextPtr& ctx) const {
    return {order_, {Polynomial::constant(ctx, GaussianRational(1)).with_order(order_)}, true};
  }

  // Normal strategy: smallest lcm degree, then smallest lcm in the order, then oldest pair.
  std::size_t select() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const auto& a = pairs_[k].lcm;
      const auto& b = pairs_[best].lcm;
      if (a.degree() != b.degree()) {
        if (a.degree() < b.degree()) best = k;
        continue;
      }
      if (order_.compare(a, b) < 0) best = k;
    }
    return best;
  }

  // Gebauer-Moeller installation of a new basis element.
  void update(Polynomial h) {
    const std::size_t hi = polys_.size();
    const Monomial lh = h.leading_monomial();
    polys_.push_back(std::move(h));
    active_.push_back(true);

    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g]) candidates.push_back({g, hi, polys_[g].leading_monomial().lcm(lh)});

    std::vector<Pair> kept;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      const Pair& p = candidates[k];
      const bool coprime = polys_[p.i].leading_monomial().coprime(lh);
      bool dominated = false;
      if (!coprime) {
        for (std::size_t q = k + 1; q < candidates.size() && !dominated; ++q)
          dominated = candidates[q].lcm.divides(p.lcm);
        for (std::size_t q = 0; q < kept.size() && !dominated; ++q) dominated = kept[q].lcm.divides(p.lcm);
      }
      if (!dominated) kept.push_back(p);
    }
    std::erase_if(kept, [&](const Pair& p) { return polys_[p.i].leading_monomial().coprime(lh); });

    std::erase_if(pairs_, [&](const Pair& p) {
      if (!lh.divides(p.lcm)) return false;
      const Monomial li = polys_[p.i].leading_monomial().lcm(lh);
      const Monomial lj = polys_[p.j].leading_monomial().lcm(lh);
      return !(li == p.lcm) && !(lj == p.lcm);
    });
    pairs_.insert(pairs_.end(), kept.begin(), kept.end());

    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g] && lh.divides(polys_[g].leading_monomial())) active_[g] = false;
  }

  GroebnerBasis finish() const {
    std::vector<Polynomial> minimal;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) minimal.push_back(polys_[k]);
    std::vector<Polynomial> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<const Polynomial*> others;
      for (std::size_t q = 0; q < minimal.size(); ++q)
        if (q != k) others.push_back(&minimal[q]);
      // The leading term is irreducible by a minimal basis; only the tail changes.
      reduced.push_back(reduce(minimal[k], others).monic());
    }
    std::sort(reduced.begin(), reduced.end(), [this](const Polynomial& a, const Polynomial& b) {
      return order_.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    return {order_, std::move(reduced), true};
  }

  MonomialOrder order_;
  GroebnerLimits limits_;
  std::vector<Polynomial> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

std::uint32_t support_mask(const Monomial& m) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0) mask |= (1u << i);
  return mask;
}

std::uint32_t best_independent_mask(std::span<const Monomial> leading, std::size_t nvars) {
  if (nvars > 24) throw ResourceLimit("independent-set search limited to 24 variables");
  std::vector<std::uint32_t> supports;
  for (const auto& m : leading) supports.push_back(support_mask(m));
  std::uint32_t best = 0;
  int best_size = -1;
  const std::uint32_t limit = 1u << nvars;
  for (std::uint32_t s = 0; s < limit; ++s) {
    const int size = std::popcount(s);
    if (size <= best_size) continue;
    const bool independent =
        std::none_of(supports.begin(), supports.end(), [s](std::uint32_t sup) { return (sup & ~s) == 0; });
    if (independent) {
      best = s;
      best_size = size;
    }
  }
  return best_size < 0 ? 0 : best;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G, const MonomialOrder& order) {
  std::vector<Polynomial> converted;
  converted.reserve(G.size());
  for (const auto& g : G) {
    if (!same_context(g.context(), f.context())) throw InvalidInput("normal form: context mismatch");
    if (!g.is_zero()) converted.push_back(g.with_order(order));
  }
  std::vector<const Polynomial*> ptrs;
  for (const auto& g : converted) ptrs.push_back(&g);
  return reduce(f.with_order(order), ptrs);
}

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, const GroebnerLimits& limits) {
  if (ideal.is_zero()) return {order, {}, true};
  return Buchberger(order, limits).run(ideal);
}

Ideal eliminate(const Ideal& ideal, const std::vector<bool>& eliminated, const GroebnerLimits& limits) {
  const auto& ctx = *ideal.context();
  if (eliminated.size() != ctx.size()) throw InvalidInput("elimination mask does not match the context");
  std::vector<VariableContext::Variable> kept;
  for (std::size_t i = 0; i < ctx.size(); ++i)
    if (!eliminated[i]) kept.push_back(ctx.variables()[i]);
  const ContextPtr target = make_context(std::move(kept));
  const auto gb = buchberger(ideal, MonomialOrder::elimination(eliminated), limits);
  std::vector<Polynomial> out;
  for (const auto& g : gb.basis) {
    const auto sup = g.support();
    bool free = true;
    for (std::size_t i = 0; i < sup.size(); ++i)
      if (sup[i] && eliminated[i]) free = false;
    if (free) out.push_back(change_context(g, target));
  }
  return Ideal(target, std::move(out));
}

Ideal eliminate(const Ideal& ideal, Block block, const GroebnerLimits& limits) {
  if (!ideal.context()->has_block(block))
    throw InvalidInput("context has no '" + std::string(block_name(block)) + "' block");
  return eliminate(ideal, ideal.context()->mask(block), limits);
}

int independent_set_dimension(std::span<const Monomial> leading, std::size_t nvars) {
  return std::popcount(best_independent_mask(leading, nvars));
}

std::vector<std::size_t> maximal_independent_set(std::span<const Monomial> leading, std::size_t nvars) {
  const std::uint32_t mask = best_independent_mask(leading, nvars);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nvars; ++i)
    if (mask & (1u << i)) out.push_back(i);
  return out;
}

std::optional<int> ideal_dimension(const Ideal& ideal, const GroebnerLimits& limits) {
  const std::size_t n = ideal.context()->size();
  const auto gb = buchberger(ideal, MonomialOrder::grevlex(), limits);
  if (gb.is_unit()) return std::nullopt;
  std::vector<Monomial> leading;
  for (const auto& g : gb.basis) leading.push_back(g.leading_monomial());
  return independent_set_dimension(leading, n);
}

std::optional<int> ideal_dimension(const Ideal& ideal, Block ambient, const GroebnerLimits& limits) {
  const auto& ctx = *ideal.context();
  if (!ctx.has_block(ambient)) throw InvalidInput("context has no '" + std::string(block_name(ambient)) + "' block");
  std::vector<bool> others(ctx.size());
  for (std::size_t i = 0; i < ctx.size(); ++i) others[i] = ctx.block(i) != ambient;
  if (std::none_of(others.begin(), others.end(), [](bool b) { return b; })) return ideal_dimension(ideal, limits);
  return ideal_dimension(eliminate(ideal, others, limits), limits);
}

bool ideal_membership(const Polynomial& f, const Ideal& ideal, const GroebnerLimits& limits) {
  if (!same_context(f.context(), ideal.context())) throw InvalidInput("membership: context mismatch");
  if (f.is_zero()) return true;
  const auto gb = buchberger(ideal, MonomialOrder::grevlex(), limits);
  return normal_form(f, gb.basis, gb.order).is_zero();
}

bool same_ideal(const Ideal& a, const Ideal& b, const GroebnerLimits& limits) {
  if (!same_context(a.context(), b.context())) return false;
  const auto ga = buchberger(a, MonomialOrder::grevlex(), limits);
  const auto gb = buchberger(b, MonomialOrder::grevlex(), limits);
  return ga.basis == gb.basis;
}

}  // namespace hcd
