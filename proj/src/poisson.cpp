#include "wpoisson/poisson.hpp"

#include "wpoisson/graded.hpp"

namespace wpoisson::poisson {

namespace {

Derivation<Rational> to_derivation(const std::vector<Poly>& v) { return {v[0], v[1], v[2]}; }

std::vector<Derivation<Rational>> kernel_as_derivations(const GradedMap& map, int d) {
  const Coordinates src = map.source(d);
  std::vector<Derivation<Rational>> out;
  if (src.size() == 0) return out;
  for (const auto& v : linalg::kernel_basis(map.matrix(d))) out.push_back(to_derivation(src.from_coordinates(v)));
  return out;
}

void require_balanced_degree(const Poly& omega) {
  if (omega.is_zero() || !omega.is_homogeneous()) throw DomainError("potential must be nonzero and homogeneous");
  const Weights& w = omega.weights();
  if (*omega.degree() != w.sum()) {
    throw UnsupportedOperation("potential degree must equal a+b+c");
  }
}

}  // namespace

std::vector<Derivation<Rational>> graded_derivation_space(const PoissonStructure<Rational>& s, int d) {
  if (!s.potential) throw UnsupportedOperation("structure does not come from a potential");
  const Poly omega = *s.potential;
  const Weights& w = omega.weights();
  const int n = *omega.degree();
  const auto grad = gradient(omega);
  // δ ↦ div(δ)∇Ω − ∇(δ(Ω)), degree d ↦ degree d+n in each slot.
  GradedMap map(w, {w.a(), w.b(), w.c()}, {n - w.a(), n - w.b(), n - w.c()},
                [grad, omega](const std::vector<Poly>& v) {
                  const Derivation<Rational> delta = to_derivation(v);
                  const auto lhs = scale(div(delta), grad);
                  const auto rhs = gradient(apply(delta, omega));
                  const auto r = lhs - rhs;
                  return std::vector<Poly>{r[0], r[1], r[2]};
                });
  return kernel_as_derivations(map, d);
}

std::vector<Derivation<Rational>> divergence_free_annihilators(const Poly& omega, int d) {
  if (omega.is_zero() || !omega.is_homogeneous()) throw DomainError("potential must be nonzero and homogeneous");
  const Weights& w = omega.weights();
  const int n = *omega.degree();
  GradedMap map(w, {w.a(), w.b(), w.c()}, {0, n}, [omega](const std::vector<Poly>& v) {
    const Derivation<Rational> delta = to_derivation(v);
    return std::vector<Poly>{div(delta), apply(delta, omega)};
  });
  return kernel_as_derivations(map, d);
}

int rgt(const Poly& omega) {
  require_balanced_degree(omega);
  return -static_cast<int>(divergence_free_annihilators(omega, 0).size());
}

std::map<int, std::size_t> negative_degree_pd_dims(const Poly& omega) {
  require_balanced_degree(omega);
  const auto s = from_potential(omega);
  std::map<int, std::size_t> out;
  for (int d = -omega.weights().max(); d <= -1; ++d) out[d] = graded_derivation_space(s, d).size();
  return out;
}

std::vector<Derivation<Rational>> derivation_basis(const Weights& w, int d) {
  const Coordinates c(w, {w.a() + d, w.b() + d, w.c() + d});
  std::vector<Derivation<Rational>> out;
  for (std::size_t k = 0; k < c.size(); ++k) out.push_back(to_derivation(c.element(k)));
  return out;
}

}  // namespace wpoisson::poisson
