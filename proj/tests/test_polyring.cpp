#include "support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace wptest;

TEST_CASE("weights reject non-positive entries and common factors") {
  CHECK_THROWS_AS(Weights(0, 1, 1), DomainError);
  CHECK_THROWS_AS(Weights(2, 4, 6), DomainError);
  CHECK_NOTHROW(Weights(2, 3, 5));
  CHECK(Weights(1, 2, 3).sum() == 6);
}

TEST_CASE("monomial counts agree with enumeration") {
  for (const Weights& w : {Weights(1, 1, 1), Weights(1, 1, 2), Weights(1, 2, 3), Weights(2, 3, 5), Weights(5, 6, 8)}) {
    for (int d = -3; d <= 30; ++d) {
      CHECK(count_monomials(w, d) == brute_count(w, d));
      CHECK(monomial_basis(w, d).size() == brute_count(w, d));
    }
  }
  CHECK(count_monomials(Weights(1, 1, 1), 3) == 10);
}

TEST_CASE("monomial basis is sorted by the order and homogeneous") {
  const Weights w(1, 2, 3);
  const MonomialOrder ord(w);
  const auto basis = monomial_basis(w, 9);
  CHECK(std::is_sorted(basis.begin(), basis.end(), ord));
  for (const auto& m : basis) CHECK(m.degree(w) == 9);
}

TEST_CASE("order compares weighted degree first, then reverse lex") {
  const Weights w(1, 1, 2);
  const MonomialOrder ord(w);
  CHECK(ord.greater(Monomial(3, 0, 0), Monomial(0, 0, 1)));  // degree 3 > 2
  const Weights u(1, 1, 1);
  const MonomialOrder o1(u);
  CHECK(o1.greater(Monomial(1, 0, 0), Monomial(0, 1, 0)));  // x > y
  CHECK(o1.greater(Monomial(1, 0, 0), Monomial(0, 0, 1)));
  // revlex: the monomial with smaller last exponent is larger
  CHECK(o1.greater(Monomial(1, 1, 0), Monomial(1, 0, 1)));
  const Poly f = P("z + x + y", u);
  CHECK(f.leading_monomial() == Monomial(1, 0, 0));
}

TEST_CASE("arithmetic and leading data") {
  const Weights w(1, 1, 2);
  const Poly f = P("x + y", w), g = P("x - y", w);
  CHECK(f * g == P("x^2 - y^2", w));
  CHECK((f + g) == P("2*x", w));
  CHECK((f - f).is_zero());
  CHECK(P("x^2 + z", w).is_homogeneous());
  CHECK_FALSE(P("x + z", w).is_homogeneous());
  CHECK(*P("x*z", w).degree() == 3);
  CHECK_FALSE(Poly(w).degree().has_value());
  CHECK(pow(f, 3) == f * f * f);
  CHECK(P("3*x^2*y", w).coefficient(Monomial(2, 1, 0)) == 3);
}

TEST_CASE("mixing weight systems is a configuration error") {
  const Poly f = P("x", Weights(1, 1, 1));
  const Poly g = P("x", Weights(1, 1, 2));
  CHECK_THROWS_AS(f + g, ConfigurationError);
}

TEST_CASE("derivatives and vector calculus on fixed inputs") {
  const Weights w(1, 1, 1);
  const Poly f = P("x^2*y + y*z^3", w);
  CHECK(partial_derivative(f, Var::x) == P("2*x*y", w));
  CHECK(partial_derivative(f, Var::y) == P("x^2 + z^3", w));
  CHECK(partial_derivative(f, Var::z) == P("3*y*z^2", w));
  CHECK(is_zero(curl(gradient(f))));
  const PolyVec v{P("y*z", w), P("x^2", w), P("x*y*z", w)};
  CHECK(div(v) == P("x*y", w));
  CHECK(div(curl(v)).is_zero());
  CHECK(cross(v, v) == zero_vector<Rational>(w));
}

TEST_CASE("weighted Euler identity") {
  const Weights w(1, 2, 3);
  const Poly f = P("z^2 + y^3 + 5*x^2*y^2 + x^4*y", w);
  Poly e(w);
  for (Var v : kVars) e += Poly(w, Rational(w.of(v))) * Poly::variable(w, v) * partial_derivative(f, v);
  CHECK(e == Poly(w, Rational(6)) * f);
}

TEST_CASE("substitution and homogeneous components") {
  const Weights w(1, 1, 1);
  const Poly f = P("x^2 + y*z + 1", w);
  const PolyVec phi{P("y", w), P("x", w), P("x + z", w)};
  CHECK(substitute(f, phi) == P("y^2 + x^2 + x*z + 1", w));
  CHECK(homogeneous_component(f, 2) == P("x^2 + y*z", w));
  CHECK(homogeneous_component(f, 0) == P("1", w));
}

TEST_CASE("extension field arithmetic") {
  const auto F = textio::parse_extension("s^2+s+1");
  const ExtElement s = ExtElement::generator(F);
  CHECK(s * s * s == ExtElement(1));
  CHECK(s * s == -s - ExtElement(1));
  CHECK(s * s.inverse() == ExtElement(1));
  CHECK((ExtElement(Rational(1, 2)) + s).to_string() == "s+1/2");
  CHECK_THROWS_AS(ExtensionField(UniPoly{Rational(1), Rational(0), Rational(2)}), DomainError);
  const auto G = textio::parse_extension("s^2+1");
  CHECK_THROWS_AS(s + ExtElement::generator(G), ConfigurationError);
  CHECK_THROWS(ExtElement(0).inverse());
}
