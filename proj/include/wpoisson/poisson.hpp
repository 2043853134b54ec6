#pragma once

// Poisson brackets on k[x,y,z], the Jacobian-determinant structure of a
// potential, derivations built from it, rigidity and automorphism checks.

#include "wpoisson/jacobian.hpp"
#include "wpoisson/polynomial.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace wpoisson::poisson {

class UnsupportedOperation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

template <class K>
struct PoissonStructure {
  Polynomial<K> pxy, pyz, pzx;             // {x,y}, {y,z}, {z,x}
  std::optional<Polynomial<K>> potential;  // set by from_potential

  const Weights& weights() const { return pxy.weights(); }
  /// (pyz, pzx, pxy): the structure as a vector paired with (x, y, z).
  PolyVector<K> as_vector() const { return {pyz, pzx, pxy}; }

  /// Degree w with deg{f,g} = deg f + deg g + w, if all data is homogeneous.
  std::optional<int> bracket_degree() const {
    std::optional<int> w;
    const Weights& wt = weights();
    const std::array<std::pair<const Polynomial<K>*, int>, 3> parts{
        std::pair{&pxy, wt.a() + wt.b()}, std::pair{&pyz, wt.b() + wt.c()},
        std::pair{&pzx, wt.c() + wt.a()}};
    for (const auto& [p, pair_deg] : parts) {
      if (p->is_zero()) continue;
      if (!p->is_homogeneous()) return std::nullopt;
      const int cand = *p->degree() - pair_deg;
      if (w && *w != cand) return std::nullopt;
      w = cand;
    }
    return w;
  }
};

template <class K>
using Derivation = PolyVector<K>;  // values on x, y, z

template <class K>
PoissonStructure<K> from_potential(const Polynomial<K>& omega) {
  if (omega.is_zero()) throw DomainError("potential must be nonzero");
  if (!omega.is_homogeneous()) throw DomainError("potential must be homogeneous");
  if (*omega.degree() <= 0) throw DomainError("potential must have positive degree");
  const auto grad = gradient(omega);
  return PoissonStructure<K>{grad[2], grad[0], grad[1], omega};
}

template <class K>
Polynomial<K> bracket(const PoissonStructure<K>& s, const Polynomial<K>& f, const Polynomial<K>& g) {
  return dot(s.as_vector(), cross(gradient(f), gradient(g)));
}

template <class K>
Polynomial<K> jacobiator(const PoissonStructure<K>& s) {
  const Weights& w = s.weights();
  const auto x = Polynomial<K>::variable(w, Var::x);
  const auto y = Polynomial<K>::variable(w, Var::y);
  const auto z = Polynomial<K>::variable(w, Var::z);
  return bracket(s, x, s.pyz) + bracket(s, y, s.pzx) + bracket(s, z, s.pxy);
}

template <class K>
Polynomial<K> apply(const Derivation<K>& d, const Polynomial<K>& f) {
  return dot(d, gradient(f));
}

template <class K>
Derivation<K> hamiltonian(const PoissonStructure<K>& s, const Polynomial<K>& f) {
  const Weights& w = s.weights();
  Derivation<K> h = zero_vector<K>(w);
  for (Var v : kVars) h[static_cast<int>(v)] = bracket(s, f, Polynomial<K>::variable(w, v));
  return h;
}

template <class K>
Derivation<K> euler_derivation(const Weights& w) {
  Derivation<K> e = zero_vector<K>(w);
  for (Var v : kVars) {
    e[static_cast<int>(v)] = Polynomial<K>::variable(w, v) * K(static_cast<long>(w.of(v)));
  }
  return e;
}

template <class K>
Derivation<K> modular_derivation(const PoissonStructure<K>& s) {
  const Weights& w = s.weights();
  Derivation<K> m = zero_vector<K>(w);
  for (Var v : kVars) {
    m[static_cast<int>(v)] = -div(hamiltonian(s, Polynomial<K>::variable(w, v)));
  }
  return m;
}

template <class K>
struct TwistResult {
  PoissonStructure<K> structure;
  bool is_poisson;  // jacobiator of the twisted bracket vanishes
};

/// Bracket + E∧δ for a homogeneous degree-zero derivation δ.
template <class K>
TwistResult<K> graded_twist(const PoissonStructure<K>& s, const Derivation<K>& delta) {
  const Weights& w = s.weights();
  for (Var v : kVars) {
    const auto& p = delta[static_cast<int>(v)];
    if (p.is_zero()) continue;
    if (!p.is_homogeneous() || *p.degree() != w.of(v)) {
      throw DomainError("twisting derivation must be homogeneous of degree 0");
    }
  }
  const auto e = euler_derivation<K>(w);
  auto wedge = [&](int u, int v) { return e[u] * delta[v] - delta[u] * e[v]; };
  PoissonStructure<K> t{s.pxy + wedge(0, 1), s.pyz + wedge(1, 2), s.pzx + wedge(2, 0), std::nullopt};
  const bool ok = jacobiator(t).is_zero();
  return {std::move(t), ok};
}

/// Jacobian determinant of the three images.
template <class K>
Polynomial<K> map_determinant(const PolyVector<K>& phi) {
  return dot(gradient(phi[0]), cross(gradient(phi[1]), gradient(phi[2])));
}

template <class K>
Polynomial<K> apply_map(const PolyVector<K>& phi, const Polynomial<K>& f) {
  return substitute(f, phi);
}

/// φ(Ω) = det(φ)·Ω.
template <class K>
bool verify_automorphism(const Polynomial<K>& omega, const PolyVector<K>& phi) {
  return apply_map(phi, omega) == map_determinant(phi) * omega;
}

struct QuotientCheck {
  bool preserves_ideal = false;
  bool preserves_bracket = false;
  bool inverse_ok = false;
  bool passed() const { return preserves_ideal && preserves_bracket && inverse_ok; }
};

/// Checks that φ induces a Poisson automorphism of A/(Ω-ξ) with inverse ψ.
template <class K>
QuotientCheck verify_quotient_automorphism(const Polynomial<K>& omega, const K& xi,
                                             const PolyVector<K>& phi, const PolyVector<K>& psi) {
  const Weights& w = omega.weights();
  const Polynomial<K> rel = omega - Polynomial<K>(w, xi);
  const std::vector<Polynomial<K>> ideal{rel};
  auto zero_mod = [&](const Polynomial<K>& f) { return jacobian::normal_form(f, ideal).is_zero(); };
  const auto s = from_potential(omega);
  QuotientCheck out;
  out.preserves_ideal = zero_mod(apply_map(phi, rel));
  out.preserves_bracket = true;
  for (auto [u, v] : {std::pair{Var::x, Var::y}, std::pair{Var::y, Var::z}, std::pair{Var::z, Var::x}}) {
    const auto pu = Polynomial<K>::variable(w, u), pv = Polynomial<K>::variable(w, v);
    const auto lhs = apply_map(phi, bracket(s, pu, pv));
    const auto rhs = bracket(s, phi[static_cast<int>(u)], phi[static_cast<int>(v)]);
    out.preserves_bracket = out.preserves_bracket && zero_mod(lhs - rhs);
  }
  out.inverse_ok = true;
  for (Var v : kVars) {
    const auto composed = apply_map(phi, psi[static_cast<int>(v)]);
    out.inverse_ok = out.inverse_ok && zero_mod(composed - Polynomial<K>::variable(w, v));
  }
  return out;
}

// Rational-only linear-algebra routines.

/// Basis of homogeneous Poisson derivations of degree d:
/// div(δ)∇Ω = ∇(δ(Ω)).
std::vector<Derivation<Rational>> graded_derivation_space(const PoissonStructure<Rational>& s, int d);
/// Basis of {δ of degree d : div δ = 0, δ(Ω) = 0}.
std::vector<Derivation<Rational>> divergence_free_annihilators(const Poly& omega, int d);
/// rgt = -dim{δ of degree 0 : div δ = δ(Ω) = 0}; needs deg Ω = a+b+c.
int rgt(const Poly& omega);
/// dim of Poisson derivations of degree d for -c <= d <= -1; needs deg Ω = a+b+c.
std::map<int, std::size_t> negative_degree_pd_dims(const Poly& omega);

/// Coordinates of a homogeneous derivation of degree d on the monomial
/// bases of A_{a+d}, A_{b+d}, A_{c+d}.
std::vector<Derivation<Rational>> derivation_basis(const Weights& w, int d);

}  // namespace wpoisson::poisson
