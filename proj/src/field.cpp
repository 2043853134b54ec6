#include "wpoisson/field.hpp"

#include <sstream>
#include <utility>

namespace wpoisson {

namespace unipoly {

void trim(UniPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

UniPoly add(const UniPoly& p, const UniPoly& q) {
  UniPoly r(std::max(p.size(), q.size()));
  for (std::size_t i = 0; i < p.size(); ++i) r[i] += p[i];
  for (std::size_t i = 0; i < q.size(); ++i) r[i] += q[i];
  trim(r);
  return r;
}

UniPoly sub(const UniPoly& p, const UniPoly& q) {
  UniPoly r(std::max(p.size(), q.size()));
  for (std::size_t i = 0; i < p.size(); ++i) r[i] += p[i];
  for (std::size_t i = 0; i < q.size(); ++i) r[i] -= q[i];
  trim(r);
  return r;
}

UniPoly mul(const UniPoly& p, const UniPoly& q) {
  if (p.empty() || q.empty()) return {};
  UniPoly r(p.size() + q.size() - 1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (sgn(p[i]) == 0) continue;
    for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  }
  trim(r);
  return r;
}

UniPoly rem(UniPoly p, const UniPoly& q) {
  const std::size_t dq = q.size() - 1;
  while (p.size() > dq) {
    const Rational lead = p.back();
    const std::size_t shift = p.size() - 1 - dq;
    for (std::size_t j = 0; j <= dq; ++j) p[shift + j] -= lead * q[j];
    p.pop_back();
    trim(p);
  }
  trim(p);
  return p;
}

// Quotient and remainder over Q for a nonzero divisor (not necessarily monic).
static std::pair<UniPoly, UniPoly> divmod(UniPoly p, const UniPoly& q) {
  UniPoly quo;
  const std::size_t dq = q.size() - 1;
  if (p.size() > dq) quo.assign(p.size() - dq, Rational(0));
  while (!p.empty() && p.size() > dq) {
    const Rational f = p.back() / q.back();
    const std::size_t shift = p.size() - 1 - dq;
    quo[shift] = f;
    for (std::size_t j = 0; j <= dq; ++j) p[shift + j] -= f * q[j];
    p.pop_back();
    trim(p);
  }
  trim(quo);
  return {quo, p};
}

std::string to_string(const UniPoly& p, const std::string& var) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t idx = p.size(); idx-- > 0;) {
    const Rational& c = p[idx];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (sgn(c) < 0) os << "-";
    else if (!first) os << "+";
    first = false;
    if (idx == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << var;
    if (idx > 1) os << "^" << idx;
  }
  return os.str();
}

}  // namespace unipoly

ExtensionField::ExtensionField(UniPoly modulus) : modulus_(std::move(modulus)) {
  unipoly::trim(modulus_);
  if (modulus_.size() < 2) throw DomainError("extension modulus must have degree >= 1");
  if (modulus_.back() != 1) throw DomainError("extension modulus must be monic");
  for (const auto& c : modulus_) {
    if (c.get_den() != 1) throw DomainError("extension modulus must have integer coefficients");
  }
}

std::string ExtensionField::to_string() const {
  return "Q[s]/(" + unipoly::to_string(modulus_) + ")";
}

ExtElement::ExtElement(long v) {
  if (v != 0) coeffs_.push_back(Rational(v));
}

ExtElement::ExtElement(const Rational& v) {
  if (sgn(v) != 0) coeffs_.push_back(v);
}

ExtElement::ExtElement(ExtensionFieldPtr field, UniPoly coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  reduce();
}

ExtElement ExtElement::generator(ExtensionFieldPtr field) {
  return ExtElement(std::move(field), UniPoly{Rational(0), Rational(1)});
}

void ExtElement::adopt(const ExtElement& o) {
  if (!o.field_) return;
  if (!field_) {
    field_ = o.field_;
    return;
  }
  if (field_ != o.field_ && !(*field_ == *o.field_)) {
    throw ConfigurationError("elements of different extension fields combined");
  }
}

void ExtElement::reduce() {
  unipoly::trim(coeffs_);
  if (field_ && coeffs_.size() > field_->degree()) {
    coeffs_ = unipoly::rem(std::move(coeffs_), field_->modulus());
  }
}

ExtElement& ExtElement::operator+=(const ExtElement& o) {
  adopt(o);
  coeffs_ = unipoly::add(coeffs_, o.coeffs_);
  return *this;
}

ExtElement& ExtElement::operator-=(const ExtElement& o) {
  adopt(o);
  coeffs_ = unipoly::sub(coeffs_, o.coeffs_);
  return *this;
}

ExtElement& ExtElement::operator*=(const ExtElement& o) {
  adopt(o);
  coeffs_ = unipoly::mul(coeffs_, o.coeffs_);
  reduce();
  return *this;
}

ExtElement& ExtElement::operator/=(const ExtElement& o) {
  adopt(o);
  return *this *= o.inverse();
}

ExtElement ExtElement::operator-() const {
  ExtElement r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

ExtElement ExtElement::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  if (coeffs_.size() == 1) {
    ExtElement r = *this;
    r.coeffs_[0] = 1 / coeffs_[0];
    return r;
  }
  // Extended Euclid: find u with u * p = 1 mod m.
  UniPoly r0 = field_->modulus(), r1 = coeffs_;
  UniPoly t0, t1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = unipoly::divmod(r0, r1);
    UniPoly t2 = unipoly::sub(t0, unipoly::mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1) throw DomainError("element is not invertible: modulus is reducible");
  const Rational inv = 1 / r0[0];
  for (auto& c : t0) c *= inv;
  return ExtElement(field_, std::move(t0));
}

bool operator==(const ExtElement& a, const ExtElement& b) {
  if (a.field_ && b.field_ && a.field_ != b.field_ && !(*a.field_ == *b.field_)) return false;
  return a.coeffs_ == b.coeffs_;
}

std::string ExtElement::to_string() const { return unipoly::to_string(coeffs_); }

std::string to_string(const Rational& v) { return v.get_str(); }

bool is_compound(const Rational&) { return false; }

bool is_compound(const ExtElement& v) {
  std::size_t nz = 0;
  for (const auto& c : v.coeffs()) nz += sgn(c) != 0;
  if (nz > 1) return true;
  // A lone s-term with a rational multiplier prints as "p/q*s^k", which
  // is a valid factor chain only without the sign; treat negative as compound.
  return nz == 1 && v.coeffs().size() > 1 && sgn(v.coeffs().back()) < 0;
}

bool is_negative_rational(const Rational& v) { return sgn(v) < 0; }

bool is_negative_rational(const ExtElement& v) {
  return v.coeffs().size() == 1 && sgn(v.coeffs()[0]) < 0;
}

}  // namespace wpoisson
