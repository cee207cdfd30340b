#include "hcd/parser.hpp"

#include <cctype>
#include <optional>
#include <sstream>

#include "hcd/errors.hpp"

namespace hcd {

std::string_view document_kind_name(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::SystemZeta: return "system-zeta";
    case DocumentKind::SystemReal: return "system-real";
    case DocumentKind::Map: return "map";
    case DocumentKind::Parametrization: return "parametrization";
    case DocumentKind::JetComponents: return "jet-components";
  }
  return "?";
}

bool operator==(const InputDocument& a, const InputDocument& b) {
  return a.kind == b.kind && a.declared == b.declared && same_context(a.context, b.context) &&
         a.equations == b.equations && a.maps == b.maps && a.jets == b.jets;
}

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, Comma, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;  // 1-based within the line
};

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> lex(std::string_view text, std::size_t line, std::size_t column0) {
  std::vector<Token> out;
  std::size_t k = 0;
  while (k < text.size()) {
    const char c = text[k];
    const std::size_t col = column0 + k;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++k;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t e = k;
      while (e < text.size() && std::isdigit(static_cast<unsigned char>(text[e]))) ++e;
      std::size_t after = e;
      while (after < text.size() && text[after] == ' ') ++after;
      if (after < text.size() && text[after] == '/') {
        std::size_t d = after + 1;
        while (d < text.size() && text[d] == ' ') ++d;
        const std::size_t ds = d;
        while (d < text.size() && std::isdigit(static_cast<unsigned char>(text[d]))) ++d;
        if (d == ds) throw ParseError(line, column0 + after, "expected a denominator after '/'");
        out.push_back({Tok::Number, std::string(text.substr(k, e - k)) + "/" + std::string(text.substr(ds, d - ds)), col});
        k = d;
      } else {
        out.push_back({Tok::Number, std::string(text.substr(k, e - k)), col});
        k = e;
      }
      continue;
    }
    if (is_ident_start(c)) {
      std::size_t e = k;
      while (e < text.size() && is_ident_char(text[e])) ++e;
      out.push_back({Tok::Ident, std::string(text.substr(k, e - k)), col});
      k = e;
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ',': kind = Tok::Comma; break;
      case '/': throw ParseError(line, col, "division is only allowed inside a rational literal p/q");
      default: throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(1, c), col});
    ++k;
  }
  out.push_back({Tok::End, "", column0 + text.size()});
  return out;
}

struct Rules {
  bool allow_conj = false;
  bool allow_exp = false;
  bool allow_i = true;
};

class ExpressionParser {
 public:
  ExpressionParser(std::vector<Token> tokens, const ContextPtr& ctx, Rules rules, std::size_t line)
      : toks_(std::move(tokens)), ctx_(ctx), rules_(rules), line_(line) {}

  Polynomial parse_all() {
    Polynomial p = sum();
    if (peek().kind != Tok::End) fail(peek(), "unexpected '" + peek().text + "'");
    return p;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  [[noreturn]] void fail(const Token& t, const std::string& msg) const { throw ParseError(line_, t.column, msg); }
  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(peek(), std::string("expected ") + what);
    ++pos_;
  }

  Polynomial sum() {
    Polynomial acc = product();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool minus = next().kind == Tok::Minus;
      Polynomial rhs = product();
      if (minus) acc -= rhs;
      else acc += rhs;
    }
    return acc;
  }

  Polynomial product() {
    Polynomial acc = unary();
    while (peek().kind == Tok::Star) {
      ++pos_;
      acc *= unary();
    }
    return acc;
  }

  Polynomial unary() {
    if (peek().kind == Tok::Minus) {
      ++pos_;
      return -unary();
    }
    if (peek().kind == Tok::Plus) {
      ++pos_;
      return unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (peek().kind != Tok::Caret) return base;
    ++pos_;
    const Token& e = peek();
    if (e.kind != Tok::Number || e.text.find('/') != std::string::npos || e.text.size() > 4)
      fail(e, "malformed exponent: expected a non-negative integer literal");
    ++pos_;
    const unsigned exponent = static_cast<unsigned>(std::stoul(e.text));
    if (peek().kind == Tok::Caret) fail(peek(), "malformed exponent: chained '^' needs parentheses");
    return base.pow(exponent);
  }

  Polynomial atom() {
    const Token t = next();
    switch (t.kind) {
      case Tok::Number:
        try {
          return Polynomial::constant(ctx_, GaussianRational(Rational::parse(t.text)));
        } catch (const InvalidInput& e) {
          fail(t, e.what());
        }
      case Tok::LParen: {
        Polynomial inner = sum();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::Ident:
        return identifier(t);
      case Tok::End:
        fail(t, "unexpected end of expression");
      default:
        fail(t, "unexpected '" + t.text + "'");
    }
  }

  Polynomial identifier(const Token& t) {
    if (t.text == "i") {
      if (!rules_.allow_i) fail(t, "the imaginary unit 'i' is not allowed in a real-form system");
      return Polynomial::constant(ctx_, GaussianRational::i());
    }
    if (t.text == "conj") {
      if (!rules_.allow_conj) fail(t, "conj() is only available in zeta-form systems");
      expect(Tok::LParen, "'(' after conj");
      Polynomial inner = sum();
      expect(Tok::RParen, "')'");
      return poly_conjugate(inner);
    }
    if (t.text == "exp") {
      if (!rules_.allow_exp) fail(t, "exp() is only available in jet components");
      expect(Tok::LParen, "'(' after exp");
      const Token v = next();
      if (v.kind != Tok::Ident) fail(v, "exp() takes a parameter name");
      const auto idx = ctx_->index_of("exp(" + v.text + ")");
      if (!idx) fail(v, "unknown parameter '" + v.text + "' in exp()");
      expect(Tok::RParen, "')'");
      return Polynomial::variable(ctx_, *idx);
    }
    const auto idx = ctx_->index_of(t.text);
    if (!idx || ctx_->block(*idx) == Block::Exp) fail(t, "unknown identifier '" + t.text + "'");
    return Polynomial::variable(ctx_, *idx);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const ContextPtr& ctx_;
  Rules rules_;
  std::size_t line_;
};

Rules rules_for(const VariableContext& ctx) {
  Rules r;
  r.allow_conj = ctx.has_block(Block::Zeta) || ctx.has_block(Block::Z);
  r.allow_exp = ctx.has_block(Block::Exp);
  r.allow_i = !ctx.has_block(Block::Real);
  return r;
}

Polynomial parse_expression(std::string_view text, const ContextPtr& ctx, std::size_t line, std::size_t column0) {
  return ExpressionParser(lex(text, line, column0), ctx, rules_for(*ctx), line).parse_all();
}

struct Line {
  std::size_t number;
  std::string keyword;
  std::size_t keyword_column;
  std::string_view rest;
  std::size_t rest_column;
};

bool reserved(const std::string& name) { return name == "i" || name == "conj" || name == "exp"; }

}  // namespace

InputDocument parse(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    std::size_t k = 0;
    while (k < raw.size() && std::isspace(static_cast<unsigned char>(raw[k]))) ++k;
    if (k < raw.size()) {
      std::size_t e = k;
      while (e < raw.size() && !std::isspace(static_cast<unsigned char>(raw[e]))) ++e;
      lines.push_back({number, std::string(raw.substr(k, e - k)), k + 1, raw.substr(e), e + 1});
    }
    if (end == text.size()) break;
    start = end + 1;
  }

  InputDocument doc;
  std::optional<std::string> decl_keyword;
  std::size_t first_statement = lines.size();
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const Line& l = lines[k];
    if (l.keyword == "vars" || l.keyword == "realvars" || l.keyword == "mapvars" || l.keyword == "params") {
      if (decl_keyword && *decl_keyword != l.keyword)
        throw ParseError(l.number, l.keyword_column, "cannot mix '" + *decl_keyword + "' and '" + l.keyword + "'");
      decl_keyword = l.keyword;
      const auto toks = lex(l.rest, l.number, l.rest_column);
      for (const auto& t : toks) {
        if (t.kind == Tok::End) break;
        if (t.kind != Tok::Ident) throw ParseError(l.number, t.column, "expected a variable name");
        if (reserved(t.text)) throw ParseError(l.number, t.column, "'" + t.text + "' is reserved");
        for (const auto& d : doc.declared)
          if (d == t.text) throw ParseError(l.number, t.column, "variable '" + t.text + "' declared twice");
        doc.declared.push_back(t.text);
      }
      continue;
    }
    if (l.keyword == "eq" || l.keyword == "map" || l.keyword == "jet") {
      first_statement = k;
      break;
    }
    throw ParseError(l.number, l.keyword_column, "unknown keyword '" + l.keyword + "'");
  }
  if (!decl_keyword) {
    const std::size_t line = lines.empty() ? 1 : lines.front().number;
    throw ParseError(line, 1, "missing declaration (vars, realvars, mapvars or params)");
  }
  if (doc.declared.empty()) throw ParseError(lines.front().number, 1, "no variables declared");

  // Kind follows the declaration and, for params, the statement keyword.
  bool any_jet = false, any_map = false;
  for (std::size_t k = first_statement; k < lines.size(); ++k) {
    any_jet = any_jet || lines[k].keyword == "jet";
    any_map = any_map || lines[k].keyword == "map";
  }
  std::vector<VariableContext::Variable> vars;
  if (*decl_keyword == "vars") {
    doc.kind = DocumentKind::SystemZeta;
    doc.context = zeta_context(doc.declared);
  } else if (*decl_keyword == "realvars") {
    doc.kind = DocumentKind::SystemReal;
    if (doc.declared.size() % 2 != 0)
      throw ParseError(lines.front().number, 1, "realvars needs an even number of names (x1 y1 x2 y2 ...)");
    doc.context = real_context(doc.declared);
  } else {
    doc.kind = *decl_keyword == "mapvars" ? DocumentKind::Map
               : any_jet                  ? DocumentKind::JetComponents
                                          : DocumentKind::Parametrization;
    for (const auto& n : doc.declared) vars.push_back({n, Block::Param});
    if (doc.kind == DocumentKind::JetComponents)
      for (const auto& n : doc.declared) vars.push_back({"exp(" + n + ")", Block::Exp});
    doc.context = make_context(std::move(vars));
  }

  for (std::size_t k = first_statement; k < lines.size(); ++k) {
    const Line& l = lines[k];
    auto bad = [&](const std::string& msg) { throw ParseError(l.number, l.keyword_column, msg); };
    std::vector<Polynomial>* target = nullptr;
    if (l.keyword == "eq") {
      if (doc.kind == DocumentKind::Parametrization || doc.kind == DocumentKind::JetComponents)
        bad("'eq' is not allowed with 'params'");
      target = &doc.equations;
    } else if (l.keyword == "map") {
      if (doc.kind != DocumentKind::Map && doc.kind != DocumentKind::Parametrization)
        bad("'map' needs a 'mapvars' or 'params' declaration");
      target = &doc.maps;
    } else if (l.keyword == "jet") {
      if (doc.kind != DocumentKind::JetComponents) bad("'jet' needs a 'params' declaration");
      if (any_map) bad("cannot mix 'jet' and 'map' statements");
      target = &doc.jets;
    } else if (l.keyword == "vars" || l.keyword == "realvars" || l.keyword == "mapvars" || l.keyword == "params") {
      bad("declarations must precede statements");
    } else {
      bad("unknown keyword '" + l.keyword + "'");
    }
    if (l.rest.find_first_not_of(" \t") == std::string_view::npos) bad("statement without an expression");
    target->push_back(parse_expression(l.rest, doc.context, l.number, l.rest_column));
  }
  return doc;
}

Polynomial parse_polynomial(std::string_view text, const ContextPtr& context) {
  return parse_expression(text, context, 1, 1);
}

Point parse_point(std::string_view text) {
  static const ContextPtr empty = make_context({});
  Point p;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view part = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (part.find_first_not_of(" \t") == std::string_view::npos)
      throw ParseError(1, start + 1, "empty coordinate");
    const Polynomial c = parse_expression(part, empty, 1, start + 1);
    p.push_back(c.is_zero() ? GaussianRational(0) : c.leading_coeff());
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return p;
}

std::string print(const Polynomial& f) { return to_string(f); }

std::string print(const InputDocument& doc) {
  std::ostringstream os;
  switch (doc.kind) {
    case DocumentKind::SystemZeta: os << "vars"; break;
    case DocumentKind::SystemReal: os << "realvars"; break;
    case DocumentKind::Map: os << "mapvars"; break;
    case DocumentKind::Parametrization:
    case DocumentKind::JetComponents: os << "params"; break;
  }
  for (const auto& n : doc.declared) os << ' ' << n;
  os << '\n';
  for (const auto& m : doc.maps) os << "map " << to_string(m) << '\n';
  for (const auto& j : doc.jets) os << "jet " << to_string(j) << '\n';
  for (const auto& e : doc.equations) os << "eq " << to_string(e) << '\n';
  return os.str();
}

System to_system(const InputDocument& doc) {
  if (doc.kind == DocumentKind::SystemZeta) return make_system(SystemForm::Zeta, doc.context, doc.equations);
  if (doc.kind == DocumentKind::SystemReal) return make_system(SystemForm::Real, doc.context, doc.equations);
  throw InvalidInput("expected a system document (vars or realvars), got " + std::string(document_kind_name(doc.kind)));
}

PolynomialMap to_map(const InputDocument& doc) {
  if (doc.kind != DocumentKind::Map && doc.kind != DocumentKind::Parametrization)
    throw InvalidInput("expected a map document (mapvars or params), got " + std::string(document_kind_name(doc.kind)));
  if (doc.maps.empty()) throw InvalidInput("the document has no 'map' components");
  return make_map(doc.maps);
}

Ideal source_ideal(const InputDocument& doc) { return Ideal(doc.context, doc.equations); }

std::vector<Jet> to_jets(const InputDocument& doc, int order) {
  if (doc.kind != DocumentKind::JetComponents)
    throw InvalidInput("expected jet components (params + jet), got " + std::string(document_kind_name(doc.kind)));
  std::vector<Jet> out;
  for (const auto& j : doc.jets) out.push_back(evaluate_jet(j, order));
  return out;
}

}  // namespace hcd
