#pragma once

#include <span>
#include <string>
#include <vector>

#include "hcd/groebner.hpp"
#include "hcd/polynomial.hpp"

namespace hcd {

enum class SystemForm { Zeta, Real };

/// Equations describing a real algebraic subset of C^n.
///
/// Zeta form: polynomials in zeta_1..zeta_n and their conjugates (context blocks
/// Zeta and ZetaBar). Real form: polynomials with real coefficients in
/// x_1, y_1, ..., x_n, y_n (Real block, alternating).
struct System {
  int n = 0;
  SystemForm form = SystemForm::Zeta;
  ContextPtr context;
  std::vector<Polynomial> generators;
  bool conjugation_closed = false;
};

/// zeta_j named by `names`, conjugates named "conj(<name>)".
ContextPtr zeta_context(const std::vector<std::string>& names);
/// Alternating x/y names; size must be even.
ContextPtr real_context(const std::vector<std::string>& names);
/// z1..zn (Z block) followed by w1..wn (W block).
ContextPtr complexified_context(int n);

System make_system(SystemForm form, ContextPtr context, std::vector<Polynomial> generators);
/// Throws InvalidInput when a System's fields violate its form.
void validate(const System& system);

struct ComplexifiedIdeal {
  int n = 0;
  Ideal ideal;  // over complexified_context(n)
};

/// x_j -> (zeta_j + conj(zeta_j))/2, y_j -> (zeta_j - conj(zeta_j))/(2i).
System real_to_zeta(const System& system);
/// zeta_j -> x_j + i*y_j; each generator splits into its real and imaginary parts.
System zeta_to_real(const System& system);

/// Appends conj(g) for every generator whose conjugate is not already in the ideal.
System conjugation_closure(const System& system, const GroebnerLimits& limits = {});

/// The ideal in C[z, w] obtained through zeta -> (z, w), after conjugation closure.
ComplexifiedIdeal complexify_ideal(const System& system, const GroebnerLimits& limits = {});

/// For a complex set X = {g_k(z) = 0}: the ideal of X_z and X_w, i.e. (g_k(z), conj(g_k)(w)).
/// Generators may live in any context whose used variables all belong to the Zeta or Z block.
Ideal complexify_complex_set(std::span<const Polynomial> generators);

/// Real dimension of the set: the dimension of its complexification. Throws EmptySet.
int real_dimension(const System& system, const GroebnerLimits& limits = {});

}  // namespace hcd
