#include "wpoisson/poisson.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace wptest;

TEST_CASE("bracket of generators is the gradient of the potential") {
  const Weights w(1, 1, 2);
  const Poly omega = P("z^2+x^3*y", w);
  const auto s = poisson::from_potential(omega);
  const Poly x = Poly::variable(w, Var::x), y = Poly::variable(w, Var::y), z = Poly::variable(w, Var::z);
  CHECK(poisson::bracket(s, x, y) == P("2*z", w));
  CHECK(poisson::bracket(s, y, z) == P("3*x^2*y", w));
  CHECK(poisson::bracket(s, z, x) == P("x^3", w));
  CHECK(poisson::bracket(s, x, omega).is_zero());  // Ω is central
  CHECK(s.bracket_degree() == 0);
}

TEST_CASE("potential structures are Poisson and unimodular") {
  const Weights w(1, 2, 3);
  for (const char* t : {"z^2+y^3", "x*y*z+x^6+y^3", "z^2+y^3+5*x^2*y^2+x^4*y", "x^3*z"}) {
    const auto s = poisson::from_potential(P(t, w));
    CHECK(poisson::jacobiator(s).is_zero());
    CHECK(is_zero(poisson::modular_derivation(s)));
  }
  CHECK_THROWS_AS(poisson::from_potential(P("x+z", w)), DomainError);
  CHECK_THROWS_AS(poisson::from_potential(Poly(w)), DomainError);
}

TEST_CASE("a generic antisymmetric bracket is usually not Poisson") {
  const Weights w(1, 1, 1);
  poisson::PoissonStructure<Rational> s{P("z", w), P("x^2", w), P("y*z", w), std::nullopt};
  CHECK_FALSE(poisson::jacobiator(s).is_zero());
}

TEST_CASE("euler derivation acts by degree") {
  const Weights w(2, 3, 5);
  const Poly f = P("x*y*z+x^5", w);
  CHECK(poisson::apply(poisson::euler_derivation<Rational>(w), f) == P("10*x*y*z+10*x^5", w));
}

TEST_CASE("graded twist by a degree-zero derivation") {
  const Weights w(1, 1, 1);
  const auto s = poisson::from_potential(P("x^3+y^3+z^3", w));
  const PolyVec delta{P("x", w), P("-y", w), Poly(w)};
  const auto t = poisson::graded_twist(s, delta);
  CHECK(t.structure.pxy == s.pxy + P("x*(-y) - x*y", w));
  CHECK_THROWS_AS(poisson::graded_twist(s, PolyVec{P("x^2", w), Poly(w), Poly(w)}), DomainError);
}

TEST_CASE("rgt for fixed potentials") {
  // Hand count for x*y^2 at (1,2,2): degree-0 derivations killing Ω with
  // zero divergence are spanned by (x, -y/2, -z/2), (0,0,y) and (0,0,x^2).
  CHECK(poisson::rgt(P("x*y^2", Weights(1, 2, 2))) == -3);
  // At (2,3,3) the x^2 direction is absent.
  CHECK(poisson::rgt(P("x*y^2", Weights(2, 3, 3))) == -2);
  CHECK(poisson::rgt(P("x^4", Weights(1, 1, 2))) == -5);
  CHECK(poisson::rgt(P("x^2*z+x*y^3", Weights(1, 1, 2))) == -1);
  CHECK(poisson::rgt(P("z^2+x^3*y", Weights(1, 1, 2))) == 0);
  CHECK(poisson::rgt(P("x^3+y^3+z^3", Weights(1, 1, 1))) == 0);
  CHECK_THROWS_AS(poisson::rgt(P("x^2", Weights(1, 1, 1))), poisson::UnsupportedOperation);
}

TEST_CASE("rgt is invariant under rescaling the potential") {
  const Weights w(1, 2, 3);
  for (const char* t : {"x^3*z+x^2*y^2", "y^3+x^2*y^2", "z^2+x^4*y"}) {
    const Poly f = P(t, w);
    CHECK(poisson::rgt(f) == poisson::rgt(f * Rational(-7, 3)));
  }
}

TEST_CASE("negative-degree Poisson derivations") {
  const auto cusp = poisson::negative_degree_pd_dims(P("z^2+y^3", Weights(1, 2, 3)));
  std::size_t total = 0;
  for (const auto& [d, n] : cusp) total += n;
  CHECK(total > 0);  // ∂/∂x has degree -1
  CHECK(cusp.at(-1) >= 1);
  for (const auto& [d, n] : poisson::negative_degree_pd_dims(P("z^2+y^3+x^4*y", Weights(1, 2, 3)))) CHECK(n == 0);
}

TEST_CASE("graded derivation space contains the hamiltonians") {
  const Weights w(1, 1, 1);
  const Poly omega = P("x^3+y^3+z^3+x*y*z", w);
  const auto s = poisson::from_potential(omega);
  const auto basis = poisson::graded_derivation_space(s, 1);
  // Hamiltonians of x, y, z have degree 1 here; Euler has degree 0.
  CHECK(basis.size() >= 3);
  poisson::PoissonStructure<Rational> bare{s.pxy, s.pyz, s.pzx, std::nullopt};
  CHECK_THROWS_AS(poisson::graded_derivation_space(bare, 1), poisson::UnsupportedOperation);
  CHECK(poisson::derivation_basis(w, 0).size() == 9);
}

TEST_CASE("automorphism of the cusp family") {
  const Weights w(1, 1, 2);
  const Poly omega = P("z^2+x^3*y", w);
  const auto phi = textio::parse_map("x->x; y->y-x^3-2*z; z->z+x^3", w);
  CHECK(poisson::map_determinant(phi) == P("1", w));
  CHECK(poisson::verify_automorphism(omega, phi));
  const auto bad = textio::parse_map("x->x; y->y+z; z->z", w);
  CHECK_FALSE(poisson::verify_automorphism(omega, bad));
}

TEST_CASE("cube-root scaling over Q(s), s^2+s+1 = 0") {
  const Weights w(1, 1, 1);
  const auto F = textio::parse_extension("s^2+s+1");
  const auto omega = textio::parse_poly("x^3+y^3+z^3+7*x*y*z", w, F);
  CHECK(poisson::verify_automorphism(omega, textio::parse_map("x->x; y->s*y; z->s^2*z", w, F)));
  CHECK_FALSE(poisson::verify_automorphism(omega, textio::parse_map("x->x; y->s*y; z->z", w, F)));
}
