#include "wpoisson/jacobian.hpp"

namespace wpoisson::jacobian {

GroebnerBasis<Rational> jacobian_basis(const Poly& omega) {
  if (omega.is_zero()) throw DomainError("potential must be nonzero");
  auto grad = gradient(omega);
  return buchberger(std::vector<Poly>{grad[0], grad[1], grad[2]});
}

ASingData a_sing_hilbert(const Poly& omega, int max_degree) {
  if (!omega.is_homogeneous()) throw DomainError("potential must be homogeneous");
  ASingData out{jacobian_basis(omega), {}, {}};
  const Weights& w = omega.weights();
  const auto leads = out.basis.leading_monomials();
  if (out.basis.basis.empty()) {
    out.series = hilbert::ring_series(w);
  } else {
    out.series = hilbert::monomial_quotient_series(w, leads);
  }
  for (int d = 0; d <= max_degree; ++d) {
    std::size_t n = 0;
    for (const auto& m : monomial_basis(w, d)) {
      bool standard = true;
      for (const auto& l : leads) {
        if (l.divides(m)) {
          standard = false;
          break;
        }
      }
      n += standard;
    }
    out.dims.push_back(n);
  }
  return out;
}

int gkdim(const Poly& omega) {
  if (!omega.is_homogeneous()) throw DomainError("potential must be homogeneous");
  const auto gb = jacobian_basis(omega);
  if (gb.basis.empty()) return 3;
  return hilbert::monomial_quotient_series(omega.weights(), gb.leading_monomials())
      .pole_order_at_one();
}

bool has_isolated_singularity(const Poly& omega) { return gkdim(omega) == 0; }

namespace {

int degree_in(const Poly& f, Var v) {
  int d = -1;
  for (const auto& [m, c] : f.terms()) d = std::max(d, m[v]);
  return d;
}

// Coefficient of v^k, as a polynomial free of v.
Poly coefficient_in(const Poly& f, Var v, int k) {
  Poly r(f.weights());
  for (const auto& [m, c] : f.terms()) {
    if (m[v] != k) continue;
    Monomial mm = m;
    mm[v] = 0;
    r.add_term(mm, c);
  }
  return r;
}

Poly var_power(const Weights& w, Var v, int k) {
  Monomial m;
  m[v] = k;
  return Poly::term(w, m, Rational(1));
}

Poly exact_quotient(const Poly& f, const Poly& g) {
  auto [q, r] = divide(f, g);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
  return q;
}

Poly monic(Poly f) {
  if (!f.is_zero()) f *= inverse(f.leading_coefficient());
  return f;
}

Poly content_in(const Poly& f, Var v) {
  Poly g(f.weights());
  for (int k = 0; k <= degree_in(f, v); ++k) {
    const Poly c = coefficient_in(f, v, k);
    if (!c.is_zero()) g = gcd(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

// Pseudo-remainder of a by b with respect to v.
Poly prem(const Poly& a, const Poly& b, Var v) {
  const int db = degree_in(b, v);
  const Poly lb = coefficient_in(b, v, db);
  Poly r = a;
  int steps = degree_in(a, v) - db + 1;
  while (!r.is_zero() && degree_in(r, v) >= db) {
    const int dr = degree_in(r, v);
    const Poly lr = coefficient_in(r, v, dr);
    r = lb * r - lr * var_power(r.weights(), v, dr - db) * b;
    --steps;
  }
  for (; steps > 0; --steps) r = lb * r;
  return r;
}

}  // namespace

Poly gcd(const Poly& f, const Poly& g) {
  if (f.is_zero()) return monic(g);
  if (g.is_zero()) return monic(f);
  const Weights& w = f.weights();
  if (f.is_constant() || g.is_constant()) return Poly(w, Rational(1));

  // Main variable: the last one occurring in either input.
  Var v = Var::x;
  for (Var cand : kVars) {
    if (degree_in(f, cand) > 0 || degree_in(g, cand) > 0) v = cand;
  }
  const Poly cf = content_in(f, v), cg = content_in(g, v);
  const Poly c = gcd(cf, cg);
  Poly a = exact_quotient(f, cf), b = exact_quotient(g, cg);
  if (degree_in(a, v) < degree_in(b, v)) std::swap(a, b);
  if (degree_in(b, v) == 0) return monic(c);

  // Subresultant remainder sequence.
  Poly gg(w, Rational(1)), h(w, Rational(1));
  while (true) {
    const int delta = degree_in(a, v) - degree_in(b, v);
    const Poly r = prem(a, b, v);
    if (r.is_zero()) break;
    if (degree_in(r, v) == 0) return monic(c);
    a = b;
    b = exact_quotient(r, gg * pow(h, static_cast<unsigned>(delta)));
    gg = coefficient_in(a, v, degree_in(a, v));
    if (delta == 1) {
      h = gg;
    } else if (delta > 1) {
      h = exact_quotient(pow(gg, static_cast<unsigned>(delta)), pow(h, static_cast<unsigned>(delta - 1)));
    }
  }
  const Poly pb = exact_quotient(b, content_in(b, v));
  return monic(c * pb);
}

Poly gcd_partials(const Poly& omega) {
  const auto grad = gradient(omega);
  if (is_zero(grad)) throw DomainError("all partial derivatives vanish");
  return gcd(gcd(grad[0], grad[1]), grad[2]);
}

}  // namespace wpoisson::jacobian
