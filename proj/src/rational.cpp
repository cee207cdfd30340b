#include "hcd/rational.hpp"

#include <cctype>
#include <ostream>

#include "hcd/errors.hpp"

namespace hcd {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

// Parses an optionally signed "p", "p/q", "p*i", "p/q*i" or "i"; returns (value, is_imaginary).
std::pair<Rational, bool> parse_signed_part(std::string_view part) {
  bool negative = false;
  if (!part.empty() && (part.front() == '+' || part.front() == '-')) {
    negative = part.front() == '-';
    part.remove_prefix(1);
  }
  bool imaginary = false;
  Rational value(1);
  if (part == "i") {
    imaginary = true;
  } else {
    if (part.size() > 2 && part.substr(part.size() - 2) == "*i") {
      imaginary = true;
      part.remove_suffix(2);
    }
    value = Rational::parse(part);
    if (value.sign() < 0) throw InvalidInput("malformed Gaussian rational: doubled sign");
  }
  return {negative ? -value : value, imaginary};
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw InvalidInput("division by zero");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw InvalidInput("division by zero");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  text = trim(text);
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw InvalidInput("malformed rational: '" + std::string(text) + "'");
  mpz_class n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw InvalidInput("division by zero in rational literal");
  if (!text.empty() && text.front() == '-') n = -n;
  return Rational(mpq_class(n, d));
}

Rational Rational::inverse() const {
  if (is_zero()) throw InvalidInput("division by zero");
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw InvalidInput("division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

GaussianRational GaussianRational::parse(std::string_view text) {
  std::string s = strip_spaces(text);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (s.empty()) throw InvalidInput("malformed Gaussian rational: empty");
  // Split at a sign that is not the leading one.
  std::size_t split = std::string::npos;
  for (std::size_t k = 1; k < s.size(); ++k)
    if (s[k] == '+' || s[k] == '-') {
      if (split != std::string::npos) throw InvalidInput("malformed Gaussian rational: '" + s + "'");
      split = k;
    }
  if (split == std::string::npos) {
    auto [v, imag] = parse_signed_part(s);
    return imag ? GaussianRational(Rational(0), v) : GaussianRational(v);
  }
  auto [a, a_imag] = parse_signed_part(std::string_view(s).substr(0, split));
  auto [b, b_imag] = parse_signed_part(std::string_view(s).substr(split));
  if (a_imag || !b_imag) throw InvalidInput("malformed Gaussian rational: expected 'a+b*i' in '" + s + "'");
  return {a, b};
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw InvalidInput("division by zero");
  const Rational n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& rhs) {
  re_ += rhs.re_;
  if (!rhs.im_.is_zero()) im_ += rhs.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& rhs) {
  re_ -= rhs.re_;
  if (!rhs.im_.is_zero()) im_ -= rhs.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs) {
  if (im_.is_zero() && rhs.im_.is_zero()) {
    re_ *= rhs.re_;
    return *this;
  }
  Rational re = re_ * rhs.re_ - im_ * rhs.im_;
  Rational im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& rhs) {
  if (rhs.is_zero()) throw InvalidInput("division by zero");
  if (rhs.im_.is_zero()) {
    re_ /= rhs.re_;
    if (!im_.is_zero()) im_ /= rhs.re_;
    return *this;
  }
  return *this *= rhs.inverse();
}

std::string GaussianRational::to_string() const {
  auto imag = [](const Rational& b) {
    if (b.is_one()) return std::string("i");
    if (b == Rational(-1)) return std::string("-i");
    return b.to_string() + "*i";
  };
  if (im_.is_zero()) return re_.to_string();
  if (re_.is_zero()) return imag(im_);
  std::string out = re_.to_string();
  if (im_.sign() > 0) out += "+";
  return out + imag(im_);
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& a) { return os << a.to_string(); }

GaussianRational gq_arith(const GaussianRational& a, const GaussianRational& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw InvalidInput("unknown arithmetic operation");
}

}  // namespace hcd
