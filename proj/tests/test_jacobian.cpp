#include "wpoisson/jacobian.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace wptest;

TEST_CASE("division leaves a reduced remainder") {
  const Weights w(1, 1, 1);
  const Poly f = P("x^2*y + x*y^2 + y^2", w);
  const Poly g = P("x*y - 1", w);
  const auto [q, r] = jacobian::divide(f, g);
  CHECK(q * g + r == f);
  for (const auto& [m, c] : r.terms()) CHECK_FALSE(g.leading_monomial().divides(m));
}

TEST_CASE("buchberger on a textbook ideal") {
  // <x^2 - y, x^3 - z> contains y*x - z and y^2 - x*z; reduced basis checked by membership.
  const Weights w(1, 1, 1);
  const auto gb = jacobian::buchberger<Rational>({P("x^2 - y", w), P("x^3 - z", w)});
  CHECK(jacobian::is_groebner(gb.basis));
  CHECK(jacobian::normal_form(P("x*y - z", w), gb).is_zero());
  CHECK(jacobian::normal_form(P("y^2 - x*z", w), gb).is_zero());
  CHECK_FALSE(jacobian::normal_form(P("x", w), gb).is_zero());
  for (const auto& g : gb.basis) CHECK(g.leading_coefficient() == 1);
  const auto unit = jacobian::buchberger<Rational>({P("x", w), P("x + 1", w)});
  REQUIRE(unit.basis.size() == 1);
  CHECK(unit.basis[0] == P("1", w));
}

TEST_CASE("milnor algebra of the Fermat cubic") {
  const Weights w(1, 1, 1);
  const auto data = jacobian::a_sing_hilbert(P("x^3+y^3+z^3", w), 6);
  // A/(x^2,y^2,z^2) has Hilbert function (1+t)^3.
  CHECK(data.dims == std::vector<std::size_t>{1, 3, 3, 1, 0, 0, 0});
  CHECK(data.series.pole_order_at_one() == 0);
}

TEST_CASE("GK dimension of the singular locus") {
  CHECK(jacobian::gkdim(P("x^3+y^3+z^3", Weights(1, 1, 1))) == 0);
  CHECK(jacobian::gkdim(P("z^2", Weights(1, 1, 2))) == 2);  // locus z = 0
  CHECK(jacobian::gkdim(P("x*y*z", Weights(1, 1, 1))) == 1);  // three axes
  CHECK(jacobian::gkdim(P("z^2+x^3*y", Weights(1, 1, 2))) == 1);
  // x(z^2 + x^4): xz = 0 and z^2 + 5x^4 = 0 leave only the y-axis.
  CHECK(jacobian::gkdim(P("x*z^2+x^5", Weights(1, 2, 2))) == 1);
  CHECK(jacobian::gkdim(P("x*z^2+x^4", Weights(2, 3, 3))) == 1);
}

TEST_CASE("isolated singularity across parameter boundaries") {
  const Weights w111(1, 1, 1), w112(1, 1, 2), w123(1, 2, 3);
  CHECK(jacobian::has_isolated_singularity(P("x^3+y^3+z^3+x*y*z", w111)));
  CHECK_FALSE(jacobian::has_isolated_singularity(P("x^3+y^3+z^3-3*x*y*z", w111)));
  CHECK(jacobian::has_isolated_singularity(P("z^2+x*y^3+x^3*y", w112)));
  CHECK_FALSE(jacobian::has_isolated_singularity(P("z^2+x*y^3+2*x^2*y^2+x^3*y", w112)));
  CHECK_FALSE(jacobian::has_isolated_singularity(P("z^2+x*y^3-2*x^2*y^2+x^3*y", w112)));
  CHECK(jacobian::has_isolated_singularity(P("z^2+y^3+x^4*y", w123)));
  CHECK_FALSE(jacobian::has_isolated_singularity(P("z^2+y^3+2*x^2*y^2+x^4*y", w123)));
}

TEST_CASE("gcd of partials") {
  const Weights w(1, 1, 1);
  const Poly g = jacobian::gcd_partials(P("x^2*y^2", Weights(1, 1, 2)));
  CHECK(g.size() == 1);
  CHECK(g.leading_monomial() == Monomial(1, 1, 0));
  CHECK(jacobian::gcd_partials(P("x^3+y^3+z^3", w)).is_constant());
  CHECK_THROWS_AS(jacobian::gcd_partials(P("1", w)), DomainError);
  const Poly a = P("(x+y)*(x-z)^2", w), b = P("(x-z)*(y+z)", w);
  const Poly d = jacobian::gcd(a, b);
  CHECK(*d.degree() == 1);
  CHECK(jacobian::divide(a, d).second.is_zero());
  CHECK(jacobian::divide(b, d).second.is_zero());
}
