#pragma once

// Weighted monomials and sparse polynomials in x, y, z.

#include "wpoisson/field.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace wpoisson {

enum class Var : int { x = 0, y = 1, z = 2 };
inline constexpr std::array<Var, 3> kVars{Var::x, Var::y, Var::z};

class Weights {
 public:
  Weights(int a, int b, int c);

  int a() const { return w_[0]; }
  int b() const { return w_[1]; }
  int c() const { return w_[2]; }
  int of(Var v) const { return w_[static_cast<int>(v)]; }
  int sum() const { return w_[0] + w_[1] + w_[2]; }
  int max() const { return std::max({w_[0], w_[1], w_[2]}); }
  std::string to_string() const;

  bool operator==(const Weights&) const = default;

 private:
  std::array<int, 3> w_;
};

struct Monomial {
  std::array<int, 3> e{0, 0, 0};

  Monomial() = default;
  Monomial(int i, int j, int k) : e{i, j, k} {}

  int operator[](Var v) const { return e[static_cast<int>(v)]; }
  int& operator[](Var v) { return e[static_cast<int>(v)]; }
  int degree(const Weights& w) const { return w.a() * e[0] + w.b() * e[1] + w.c() * e[2]; }
  bool divides(const Monomial& o) const {
    return e[0] <= o.e[0] && e[1] <= o.e[1] && e[2] <= o.e[2];
  }
  bool is_one() const { return e[0] == 0 && e[1] == 0 && e[2] == 0; }

  friend Monomial operator*(const Monomial& p, const Monomial& q) {
    return {p.e[0] + q.e[0], p.e[1] + q.e[1], p.e[2] + q.e[2]};
  }
  /// Caller guarantees q divides p.
  friend Monomial operator/(const Monomial& p, const Monomial& q) {
    return {p.e[0] - q.e[0], p.e[1] - q.e[1], p.e[2] - q.e[2]};
  }
  friend Monomial lcm(const Monomial& p, const Monomial& q) {
    return {std::max(p.e[0], q.e[0]), std::max(p.e[1], q.e[1]), std::max(p.e[2], q.e[2])};
  }
  auto operator<=>(const Monomial&) const = default;
};

/// Weighted degree first, then reverse lexicographic.  `operator()` answers
/// "does p come strictly before q", with larger monomials first, so that an
/// ordered container lists terms from the leading one down.
class MonomialOrder {
 public:
  explicit MonomialOrder(Weights w) : w_(w) {}
  bool greater(const Monomial& p, const Monomial& q) const {
    const int dp = p.degree(w_), dq = q.degree(w_);
    if (dp != dq) return dp > dq;
    for (int v = 2; v >= 0; --v) {
      if (p.e[v] != q.e[v]) return p.e[v] < q.e[v];
    }
    return false;
  }
  bool operator()(const Monomial& p, const Monomial& q) const { return greater(p, q); }
  const Weights& weights() const { return w_; }

 private:
  Weights w_;
};

/// All monomials of weighted degree exactly d, leading first.
std::vector<Monomial> monomial_basis(const Weights& w, int d);
/// Number of monomials of weighted degree d (0 for d < 0).
std::size_t count_monomials(const Weights& w, int d);

template <class K>
class Polynomial {
 public:
  using Terms = std::map<Monomial, K, MonomialOrder>;

  explicit Polynomial(Weights w) : w_(w), terms_(MonomialOrder(w)) {}
  Polynomial(Weights w, const K& c) : Polynomial(w) {
    if (!wpoisson::is_zero(c)) terms_.emplace(Monomial{}, c);
  }
  static Polynomial variable(Weights w, Var v) {
    Monomial m;
    m[v] = 1;
    return term(w, m, K(1));
  }
  static Polynomial term(Weights w, const Monomial& m, const K& c) {
    Polynomial p(w);
    if (!wpoisson::is_zero(c)) p.terms_.emplace(m, c);
    return p;
  }

  const Weights& weights() const { return w_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Highest weighted degree of a term; empty for the zero polynomial.
  std::optional<int> degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.degree(w_);
  }
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = terms_.begin()->first.degree(w_);
    for (const auto& [m, c] : terms_) {
      if (m.degree(w_) != d) return false;
    }
    return true;
  }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
  }
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const K& leading_coefficient() const { return terms_.begin()->second; }
  K coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? K(0) : it->second;
  }

  /// Adds c*m in place.
  void add_term(const Monomial& m, const K& c) {
    if (wpoisson::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (wpoisson::is_zero(it->second)) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const K& s) {
    if (wpoisson::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(Polynomial p, const K& s) { return p *= s; }
  friend Polynomial operator*(const K& s, Polynomial p) { return p *= s; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    p.check(q);
    Polynomial r(p.w_);
    for (const auto& [mp, cp] : p.terms_) {
      for (const auto& [mq, cq] : q.terms_) r.add_term(mp * mq, cp * cq);
    }
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  /// Multiplies by c*m.
  Polynomial times_term(const Monomial& m, const K& c) const {
    Polynomial r(w_);
    if (wpoisson::is_zero(c)) return r;
    for (const auto& [mp, cp] : terms_) r.terms_.emplace_hint(r.terms_.end(), mp * m, cp * c);
    return r;
  }

  friend bool operator==(const Polynomial& p, const Polynomial& q) {
    if (!(p.w_ == q.w_) || p.terms_.size() != q.terms_.size()) return false;
    auto it = q.terms_.begin();
    for (const auto& [m, c] : p.terms_) {
      if (!(m == it->first) || !(c == it->second)) return false;
      ++it;
    }
    return true;
  }
  friend bool operator!=(const Polynomial& p, const Polynomial& q) { return !(p == q); }

  void check(const Polynomial& o) const {
    if (!(w_ == o.w_)) throw ConfigurationError("polynomials over different weights combined");
  }

 private:
  Weights w_;
  Terms terms_;
};

template <class K>
using PolyVector = std::array<Polynomial<K>, 3>;

using Poly = Polynomial<Rational>;
using PolyVec = PolyVector<Rational>;

template <class K>
Polynomial<K> partial_derivative(const Polynomial<K>& f, Var v) {
  Polynomial<K> r(f.weights());
  for (const auto& [m, c] : f.terms()) {
    const int e = m[v];
    if (e == 0) continue;
    Monomial mm = m;
    mm[v] = e - 1;
    r.add_term(mm, c * K(static_cast<long>(e)));
  }
  return r;
}

template <class K>
PolyVector<K> gradient(const Polynomial<K>& f) {
  return {partial_derivative(f, Var::x), partial_derivative(f, Var::y),
          partial_derivative(f, Var::z)};
}

template <class K>
Polynomial<K> div(const PolyVector<K>& v) {
  return partial_derivative(v[0], Var::x) + partial_derivative(v[1], Var::y) +
         partial_derivative(v[2], Var::z);
}

template <class K>
PolyVector<K> curl(const PolyVector<K>& v) {
  return {partial_derivative(v[2], Var::y) - partial_derivative(v[1], Var::z),
          partial_derivative(v[0], Var::z) - partial_derivative(v[2], Var::x),
          partial_derivative(v[1], Var::x) - partial_derivative(v[0], Var::y)};
}

template <class K>
Polynomial<K> dot(const PolyVector<K>& u, const PolyVector<K>& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

template <class K>
PolyVector<K> cross(const PolyVector<K>& u, const PolyVector<K>& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

template <class K>
PolyVector<K> scale(const Polynomial<K>& f, const PolyVector<K>& v) {
  return {f * v[0], f * v[1], f * v[2]};
}

template <class K>
PolyVector<K> operator+(const PolyVector<K>& u, const PolyVector<K>& v) {
  return {u[0] + v[0], u[1] + v[1], u[2] + v[2]};
}

template <class K>
PolyVector<K> operator-(const PolyVector<K>& u, const PolyVector<K>& v) {
  return {u[0] - v[0], u[1] - v[1], u[2] - v[2]};
}

template <class K>
PolyVector<K> zero_vector(const Weights& w) {
  return {Polynomial<K>(w), Polynomial<K>(w), Polynomial<K>(w)};
}

template <class K>
bool is_zero(const PolyVector<K>& v) {
  return v[0].is_zero() && v[1].is_zero() && v[2].is_zero();
}

template <class K>
Polynomial<K> homogeneous_component(const Polynomial<K>& f, int d) {
  Polynomial<K> r(f.weights());
  for (const auto& [m, c] : f.terms()) {
    if (m.degree(f.weights()) == d) r.add_term(m, c);
  }
  return r;
}

template <class K>
Polynomial<K> pow(const Polynomial<K>& f, unsigned e) {
  Polynomial<K> result(f.weights(), K(1));
  Polynomial<K> base = f;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

/// f(images[0], images[1], images[2]).  The images may live over different
/// weights than f (the result takes the images' weights).
template <class K>
Polynomial<K> substitute(const Polynomial<K>& f, const PolyVector<K>& images) {
  const Weights& w = images[0].weights();
  Polynomial<K> r(w);
  // Cache powers per variable.
  std::array<std::vector<Polynomial<K>>, 3> powers;
  for (int v = 0; v < 3; ++v) powers[v].push_back(Polynomial<K>(w, K(1)));
  auto power = [&](int v, int e) -> const Polynomial<K>& {
    while (static_cast<int>(powers[v].size()) <= e) {
      powers[v].push_back(powers[v].back() * images[v]);
    }
    return powers[v][e];
  };
  for (const auto& [m, c] : f.terms()) {
    Polynomial<K> t(w, c);
    for (int v = 0; v < 3; ++v) {
      if (m.e[v] > 0) t = t * power(v, m.e[v]);
    }
    r += t;
  }
  return r;
}

/// Converts coefficients between fields (used to lift rational data into an
/// extension).
template <class To, class From>
Polynomial<To> convert(const Polynomial<From>& f) {
  Polynomial<To> r(f.weights());
  for (const auto& [m, c] : f.terms()) r.add_term(m, To(c));
  return r;
}

}  // namespace wpoisson
