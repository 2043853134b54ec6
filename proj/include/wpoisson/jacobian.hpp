#pragma once

// Groebner bases under the fixed weighted reverse-lex order, normal forms,
// and invariants of the Jacobian quotient A / (dΩ/dx, dΩ/dy, dΩ/dz).

#include "wpoisson/hilbert.hpp"
#include "wpoisson/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace wpoisson::jacobian {

template <class K>
struct GroebnerBasis {
  std::vector<Polynomial<K>> generators;  // as supplied
  std::vector<Polynomial<K>> basis;       // reduced, monic, leading monomial descending

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    for (const auto& g : basis) out.push_back(g.leading_monomial());
    return out;
  }
};

/// Quotient and remainder of f by a single divisor g.
template <class K>
std::pair<Polynomial<K>, Polynomial<K>> divide(const Polynomial<K>& f, const Polynomial<K>& g) {
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  Polynomial<K> q(f.weights()), r(f.weights()), p = f;
  const Monomial& lg = g.leading_monomial();
  const K inv = inverse(g.leading_coefficient());
  while (!p.is_zero()) {
    const Monomial lm = p.leading_monomial();
    const K lc = p.leading_coefficient();
    if (lg.divides(lm)) {
      const Monomial t = lm / lg;
      const K f_c = lc * inv;
      q.add_term(t, f_c);
      p -= g.times_term(t, f_c);
    } else {
      r.add_term(lm, lc);
      p.add_term(lm, -lc);
    }
  }
  return {q, r};
}

/// Full reduction of f modulo `g` (any list of nonzero polynomials).
template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const std::vector<Polynomial<K>>& g) {
  Polynomial<K> r(f.weights()), p = f;
  while (!p.is_zero()) {
    const Monomial lm = p.leading_monomial();
    const K lc = p.leading_coefficient();
    bool reduced = false;
    for (const auto& h : g) {
      if (h.leading_monomial().divides(lm)) {
        p -= h.times_term(lm / h.leading_monomial(), lc / h.leading_coefficient());
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      r.add_term(lm, lc);
      p.add_term(lm, -lc);
    }
  }
  return r;
}

template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const GroebnerBasis<K>& g) {
  return normal_form(f, g.basis);
}

template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g) {
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  return f.times_term(l / f.leading_monomial(), inverse(f.leading_coefficient())) -
         g.times_term(l / g.leading_monomial(), inverse(g.leading_coefficient()));
}

/// Buchberger criterion: every S-polynomial reduces to zero.
template <class K>
bool is_groebner(const std::vector<Polynomial<K>>& g) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (!normal_form(s_polynomial(g[i], g[j]), g).is_zero()) return false;
    }
  }
  return true;
}

template <class K>
GroebnerBasis<K> buchberger(std::vector<Polynomial<K>> gens) {
  if (gens.empty()) throw DomainError("ideal needs at least one generator");
  GroebnerBasis<K> out;
  out.generators = gens;
  const MonomialOrder order(gens.front().weights());

  std::vector<Polynomial<K>> g;
  for (auto& p : gens) {
    if (!p.is_zero()) g.push_back(p);
  }
  if (g.empty()) return out;

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < g.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  auto pair_lcm = [&](const std::pair<std::size_t, std::size_t>& pr) {
    return lcm(g[pr.first].leading_monomial(), g[pr.second].leading_monomial());
  };
  while (!pairs.empty()) {
    // Normal strategy: the pair with the smallest lcm.
    auto best = pairs.begin();
    for (auto it = pairs.begin() + 1; it != pairs.end(); ++it) {
      if (order.greater(pair_lcm(*best), pair_lcm(*it))) best = it;
    }
    const auto [i, j] = *best;
    pairs.erase(best);
    const Monomial li = g[i].leading_monomial(), lj = g[j].leading_monomial();
    if (lcm(li, lj) == li * lj) continue;  // coprime leading monomials
    Polynomial<K> r = normal_form(s_polynomial(g[i], g[j]), g);
    if (r.is_zero()) continue;
    if (r.is_constant()) {
      out.basis = {Polynomial<K>(r.weights(), K(1))};
      return out;
    }
    g.push_back(std::move(r));
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
  }

  // Minimalize, then interreduce and make monic.
  std::vector<Polynomial<K>> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < g.size() && !drop; ++j) {
      if (i == j) continue;
      const Monomial& mi = g[i].leading_monomial();
      const Monomial& mj = g[j].leading_monomial();
      drop = mj.divides(mi) && (!(mi == mj) || j < i);
    }
    if (!drop) minimal.push_back(g[i]);
  }
  for (auto& p : minimal) p *= inverse(p.leading_coefficient());
  std::vector<Polynomial<K>> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial<K>> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    Polynomial<K> tail = minimal[i];
    const Monomial lm = tail.leading_monomial();
    tail.add_term(lm, -tail.leading_coefficient());
    Polynomial<K> p = normal_form(tail, others);
    p.add_term(lm, K(1));
    reduced.push_back(std::move(p));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const auto& p, const auto& q) {
    return order.greater(p.leading_monomial(), q.leading_monomial());
  });
  out.basis = std::move(reduced);
  return out;
}

struct ASingData {
  GroebnerBasis<Rational> basis;
  std::vector<std::size_t> dims;  // dims[d] for 0 <= d <= D
  hilbert::HilbertSeries series;
};

/// Jacobian ideal of Ω.
GroebnerBasis<Rational> jacobian_basis(const Poly& omega);
ASingData a_sing_hilbert(const Poly& omega, int max_degree);
int gkdim(const Poly& omega);
bool has_isolated_singularity(const Poly& omega);
/// gcd of the three partials, normalized to leading coefficient 1.
Poly gcd_partials(const Poly& omega);
/// gcd of two polynomials over Q, leading coefficient 1 (zero if both are).
Poly gcd(const Poly& f, const Poly& g);

}  // namespace wpoisson::jacobian
