#pragma once

// Text front-end.  Grammar (whitespace ignored, explicit '*' required):
//   expr     := term (("+"|"-") term)*
//   term     := ["+"|"-"] factor ("*" factor)*
//   factor   := base ("^" uint)?
//   base     := rational | "x" | "y" | "z" | "s" | "(" expr ")"
//   rational := int ("/" uint)?
// "s" is the extension generator and is rejected over the rationals.

#include "wpoisson/polynomial.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace wpoisson::textio {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

Poly parse_poly(std::string_view text, const Weights& w);
Polynomial<ExtElement> parse_poly(std::string_view text, const Weights& w,
                                  const ExtensionFieldPtr& field);

template <class K>
std::string format_poly(const Polynomial<K>& f);

/// "x->expr; y->expr; z->expr" in any order.
PolyVec parse_map(std::string_view text, const Weights& w);
PolyVector<ExtElement> parse_map(std::string_view text, const Weights& w,
                                 const ExtensionFieldPtr& field);

/// Monic integer polynomial in s, e.g. "s^2+s+1".
ExtensionFieldPtr parse_extension(std::string_view modulus);
/// Field element in s, e.g. "1/2 - s".
ExtElement parse_element(std::string_view text, const ExtensionFieldPtr& field);
Rational parse_rational(std::string_view text);
Weights parse_weights(std::string_view text);

}  // namespace wpoisson::textio
