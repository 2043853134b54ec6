#pragma once

// Exact coefficient fields: the rationals (GMP mpq) and simple algebraic
// extensions Q[s]/(m(s)) with m monic, integral and irreducible (asserted by
// the caller, never checked).

#include <gmpxx.h>

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace wpoisson {

using Rational = mpq_class;
using Integer = mpz_class;

/// Raised when values from incompatible ambient structures are combined
/// (different weights, different extension fields, mismatched shapes).
class ConfigurationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an input violates a mathematical precondition.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dense univariate polynomial over Q in the extension generator s,
/// lowest coefficient first, no trailing zeros.
using UniPoly = std::vector<Rational>;

namespace unipoly {
void trim(UniPoly& p);
UniPoly add(const UniPoly& p, const UniPoly& q);
UniPoly sub(const UniPoly& p, const UniPoly& q);
UniPoly mul(const UniPoly& p, const UniPoly& q);
/// Remainder of p modulo a monic q.
UniPoly rem(UniPoly p, const UniPoly& q);
std::string to_string(const UniPoly& p, const std::string& var = "s");
}  // namespace unipoly

/// Q[s]/(m(s)).  Shared by every element living in it.
class ExtensionField {
 public:
  /// `modulus` lowest coefficient first; must be monic with integer
  /// coefficients and degree >= 1.
  explicit ExtensionField(UniPoly modulus);

  const UniPoly& modulus() const { return modulus_; }
  std::size_t degree() const { return modulus_.size() - 1; }
  std::string to_string() const;

  bool operator==(const ExtensionField& other) const {
    return modulus_ == other.modulus_;
  }

 private:
  UniPoly modulus_;
};

using ExtensionFieldPtr = std::shared_ptr<const ExtensionField>;

/// Element of Q[s]/(m).  A default-constructed or integer-constructed value
/// carries no field and acts as the corresponding rational constant in any
/// extension; it adopts the field of the first extension element it meets.
class ExtElement {
 public:
  ExtElement() = default;
  ExtElement(long v);  // NOLINT: implicit to mirror mpq_class
  ExtElement(const Rational& v);  // NOLINT
  ExtElement(ExtensionFieldPtr field, UniPoly coeffs);

  /// The generator s of `field`.
  static ExtElement generator(ExtensionFieldPtr field);

  const ExtensionFieldPtr& field() const { return field_; }
  const UniPoly& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_rational() const { return coeffs_.size() <= 1; }

  ExtElement& operator+=(const ExtElement& o);
  ExtElement& operator-=(const ExtElement& o);
  ExtElement& operator*=(const ExtElement& o);
  ExtElement& operator/=(const ExtElement& o);
  ExtElement operator-() const;
  ExtElement inverse() const;

  friend ExtElement operator+(ExtElement a, const ExtElement& b) { return a += b; }
  friend ExtElement operator-(ExtElement a, const ExtElement& b) { return a -= b; }
  friend ExtElement operator*(ExtElement a, const ExtElement& b) { return a *= b; }
  friend ExtElement operator/(ExtElement a, const ExtElement& b) { return a /= b; }
  friend bool operator==(const ExtElement& a, const ExtElement& b);
  friend bool operator!=(const ExtElement& a, const ExtElement& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void adopt(const ExtElement& o);
  void reduce();

  ExtensionFieldPtr field_;
  UniPoly coeffs_;
};

// Uniform helpers so generic code can treat both fields alike.
inline bool is_zero(const Rational& v) { return sgn(v) == 0; }
inline bool is_zero(const ExtElement& v) { return v.is_zero(); }
inline bool is_one(const Rational& v) { return v == 1; }
inline bool is_one(const ExtElement& v) { return v == ExtElement(1); }
inline Rational inverse(const Rational& v) {
  if (sgn(v) == 0) throw DomainError("division by zero");
  return Rational(1) / v;
}
inline ExtElement inverse(const ExtElement& v) { return v.inverse(); }
std::string to_string(const Rational& v);
inline std::string to_string(const ExtElement& v) { return v.to_string(); }
/// True when the printed form needs parentheses as a product factor.
bool is_compound(const Rational& v);
bool is_compound(const ExtElement& v);
/// True when the value is a negative rational (prints with a leading '-').
bool is_negative_rational(const Rational& v);
bool is_negative_rational(const ExtElement& v);

}  // namespace wpoisson
