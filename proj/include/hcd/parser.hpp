#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hcd/complexify.hpp"
#include "hcd/holoclosure.hpp"
#include "hcd/jets.hpp"
#include "hcd/polynomial.hpp"

namespace hcd {

// Input format (line oriented, '#' starts a comment):
//
//   vars z1 z2              zeta-form system; conj(<expr>) available
//   realvars x1 y1 x2 y2    real-form system in alternating (x, y) pairs
//   mapvars v w             polynomial map; `map` components, optional `eq` source ideal
//   params t1 t2            parametrization (`map`) or jet components (`jet`, exp(<param>))
//
//   eq <expr> | map <expr> | jet <expr>
//
// Expressions: rationals p/q, the literal i, identifiers, + - * and ^ with a
// non-negative integer exponent. Precedence: ^ > unary minus > * > binary + -.

enum class DocumentKind { SystemZeta, SystemReal, Map, Parametrization, JetComponents };

std::string_view document_kind_name(DocumentKind kind);

struct InputDocument {
  DocumentKind kind = DocumentKind::SystemZeta;
  std::vector<std::string> declared;
  ContextPtr context;
  std::vector<Polynomial> equations;
  std::vector<Polynomial> maps;
  std::vector<Polynomial> jets;

  friend bool operator==(const InputDocument& a, const InputDocument& b);
};

/// Throws ParseError with 1-based line and column.
InputDocument parse(std::string_view text);

/// Parses one expression over an existing context. conj() needs Zeta/ZetaBar or Z/W
/// blocks, exp() needs Exp symbols, and `i` is rejected over Real-block contexts.
Polynomial parse_polynomial(std::string_view text, const ContextPtr& context);

/// Comma-separated Gaussian rationals, e.g. "1/2+1/3*i, 0".
Point parse_point(std::string_view text);

std::string print(const InputDocument& doc);
std::string print(const Polynomial& f);

System to_system(const InputDocument& doc);
PolynomialMap to_map(const InputDocument& doc);
/// The `eq` ideal of a map document, over the map's source variables.
Ideal source_ideal(const InputDocument& doc);
std::vector<Jet> to_jets(const InputDocument& doc, int order);

}  // namespace hcd
