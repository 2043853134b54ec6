#include "wpoisson/textio.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace wpoisson::textio {

namespace {

constexpr unsigned long kMaxExponent = 1000000;

template <class K>
class Parser {
 public:
  Parser(std::string_view text, const Weights& w, ExtensionFieldPtr field, bool allow_xyz = true)
      : text_(text), w_(w), field_(std::move(field)), allow_xyz_(allow_xyz) {}

  Polynomial<K> parse_all() {
    Polynomial<K> r = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char ch) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial<K> expr() {
    Polynomial<K> r = term();
    while (true) {
      if (accept('+')) r += term();
      else if (accept('-')) r -= term();
      else return r;
    }
  }

  Polynomial<K> term() {
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Polynomial<K> r = factor();
    while (accept('*')) r = r * factor();
    return negate ? -r : r;
  }

  Polynomial<K> factor() {
    Polynomial<K> b = base();
    if (accept('^')) {
      skip();
      const unsigned long e = uint_literal();
      if (e > kMaxExponent) fail("exponent too large");
      b = pow(b, static_cast<unsigned>(e));
    }
    return b;
  }

  unsigned long uint_literal() {
    skip();
    const std::size_t start = pos_;
    unsigned long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned long>(text_[pos_] - '0');
      if (v > kMaxExponent * 10) {
        pos_ = start;
        fail("integer literal too large");
      }
      ++pos_;
    }
    if (pos_ == start) fail("expected unsigned integer");
    return v;
  }

  Polynomial<K> base() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char ch = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) return Polynomial<K>(w_, K(rational()));
    if (ch == '(') {
      ++pos_;
      Polynomial<K> r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (ch == 'x' || ch == 'y' || ch == 'z') {
      if (!allow_xyz_) fail("unexpected variable");
      ++pos_;
      return Polynomial<K>::variable(w_, ch == 'x' ? Var::x : ch == 'y' ? Var::y : Var::z);
    }
    if (ch == 's') {
      if constexpr (std::is_same_v<K, ExtElement>) {
        if (!field_) fail("'s' needs an extension field");
        ++pos_;
        return Polynomial<K>(w_, ExtElement::generator(field_));
      } else {
        fail("'s' needs an extension field");
      }
    }
    fail("unexpected character '" + std::string(1, ch) + "'");
  }

  Rational rational() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    Integer num(std::string(text_.substr(start, pos_ - start)));
    Integer den = 1;
    skip();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      skip();
      const std::size_t ds = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == ds) fail("expected denominator");
      den = Integer(std::string(text_.substr(ds, pos_ - ds)));
      if (sgn(den) == 0) {
        pos_ = ds;
        fail("zero denominator");
      }
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  std::string_view text_;
  Weights w_;
  ExtensionFieldPtr field_;
  bool allow_xyz_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const Monomial& m) {
  std::string s;
  static constexpr char kNames[3] = {'x', 'y', 'z'};
  for (int v = 0; v < 3; ++v) {
    if (m.e[v] == 0) continue;
    if (!s.empty()) s += "*";
    s += kNames[v];
    if (m.e[v] > 1) s += "^" + std::to_string(m.e[v]);
  }
  return s;
}

template <class K>
PolyVector<K> parse_map_impl(std::string_view text, const Weights& w,
                             const ExtensionFieldPtr& field) {
  std::array<std::optional<Polynomial<K>>, 3> images;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view part = text.substr(start, end - start);
    std::size_t lead = 0;
    while (lead < part.size() && std::isspace(static_cast<unsigned char>(part[lead]))) ++lead;
    if (lead < part.size()) {
      const std::size_t arrow = part.find("->");
      if (arrow == std::string_view::npos) throw ParseError("expected '->'", start + lead);
      std::string_view name = part.substr(0, arrow);
      while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) {
        name.remove_suffix(1);
      }
      name.remove_prefix(lead);
      if (name != "x" && name != "y" && name != "z") {
        throw ParseError("expected generator name x, y or z", start + lead);
      }
      const int v = name[0] - 'x';
      if (images[v]) throw ParseError("duplicate generator '" + std::string(name) + "'", start + lead);
      const std::string_view rhs = part.substr(arrow + 2);
      try {
        images[v] = Parser<K>(rhs, w, field).parse_all();
      } catch (const ParseError& e) {
        throw ParseError(std::string("in image of ") + std::string(name) + ": " + e.what(),
                         start + arrow + 2 + e.offset());
      }
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  for (int v = 0; v < 3; ++v) {
    if (!images[v]) {
      throw ParseError(std::string("missing generator '") + static_cast<char>('x' + v) + "'",
                       text.size());
    }
  }
  return {*images[0], *images[1], *images[2]};
}

}  // namespace

Poly parse_poly(std::string_view text, const Weights& w) {
  return Parser<Rational>(text, w, nullptr).parse_all();
}

Polynomial<ExtElement> parse_poly(std::string_view text, const Weights& w,
                                  const ExtensionFieldPtr& field) {
  return Parser<ExtElement>(text, w, field).parse_all();
}

template <class K>
std::string format_poly(const Polynomial<K>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    const std::string mono = monomial_text(m);
    std::string coef;
    bool negative = false;
    if (is_compound(c)) {
      coef = "(" + to_string(c) + ")";
    } else {
      negative = is_negative_rational(c);
      const K mag = negative ? K(-c) : c;
      if (!(is_one(mag) && !mono.empty())) coef = to_string(mag);
    }
    if (negative) out += "-";
    else if (!first) out += "+";
    first = false;
    out += coef;
    if (!coef.empty() && !mono.empty()) out += "*";
    out += mono;
  }
  return out;
}

template std::string format_poly(const Polynomial<Rational>&);
template std::string format_poly(const Polynomial<ExtElement>&);

PolyVec parse_map(std::string_view text, const Weights& w) {
  return parse_map_impl<Rational>(text, w, nullptr);
}

PolyVector<ExtElement> parse_map(std::string_view text, const Weights& w,
                                 const ExtensionFieldPtr& field) {
  return parse_map_impl<ExtElement>(text, w, field);
}

ExtensionFieldPtr parse_extension(std::string_view modulus) {
  // Parse with a throwaway field of the right shape: read s as x.
  std::string rewritten(modulus);
  for (char& ch : rewritten) {
    if (ch == 'x' || ch == 'y' || ch == 'z') throw ParseError("modulus may only use 's'", 0);
    if (ch == 's') ch = 'x';
  }
  const Weights w(1, 1, 1);
  const Poly p = Parser<Rational>(rewritten, w, nullptr).parse_all();
  UniPoly coeffs;
  for (const auto& [m, c] : p.terms()) {
    const auto e = static_cast<std::size_t>(m.e[0]);
    if (coeffs.size() <= e) coeffs.resize(e + 1);
    coeffs[e] = c;
  }
  return std::make_shared<const ExtensionField>(std::move(coeffs));
}

ExtElement parse_element(std::string_view text, const ExtensionFieldPtr& field) {
  const Weights w(1, 1, 1);
  const auto p = Parser<ExtElement>(text, w, field, false).parse_all();
  if (p.is_zero()) return ExtElement(field, {});
  return ExtElement(field, p.leading_coefficient().coeffs());
}

Rational parse_rational(std::string_view text) {
  const Weights w(1, 1, 1);
  const Poly p = Parser<Rational>(text, w, nullptr, false).parse_all();
  return p.is_zero() ? Rational(0) : p.leading_coefficient();
}

Weights parse_weights(std::string_view text) {
  std::array<int, 3> v{};
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    const std::size_t start = pos;
    long acc = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      acc = acc * 10 + (text[pos] - '0');
      if (acc > 1000000) throw ParseError("weight too large", start);
      ++pos;
    }
    if (pos == start) throw ParseError("expected a positive integer weight", pos);
    v[static_cast<std::size_t>(i)] = static_cast<int>(acc);
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (i < 2) {
      if (pos >= text.size() || text[pos] != ',') throw ParseError("expected ','", pos);
      ++pos;
    }
  }
  if (pos != text.size()) throw ParseError("trailing characters after weights", pos);
  return Weights(v[0], v[1], v[2]);
}

}  // namespace wpoisson::textio
