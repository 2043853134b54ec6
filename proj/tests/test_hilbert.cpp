#include "wpoisson/hilbert.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace wptest;
using hilbert::HilbertSeries;
using hilbert::LaurentPoly;

namespace {

std::size_t count_standard(const Weights& w, int d, const std::vector<Monomial>& gens) {
  std::size_t n = 0;
  for (const auto& m : monomial_basis(w, d)) {
    bool divisible = false;
    for (const auto& g : gens) divisible = divisible || g.divides(m);
    if (!divisible) ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("laurent polynomial arithmetic") {
  const auto p = LaurentPoly::one_minus(3);
  CHECK(p.at(0) == 1);
  CHECK(p.at(3) == -1);
  CHECK(p.to_string() == "1 - t^3");
  LaurentPoly q;
  CHECK(p.divide_one_minus(1, q));
  CHECK(q == LaurentPoly::monomial(0) + LaurentPoly::monomial(1) + LaurentPoly::monomial(2));
  CHECK_FALSE(LaurentPoly::monomial(0).divide_one_minus(2, q));
  CHECK((p * p).order_at_one() == 2);
  CHECK(p.shifted(-2).min_degree() == -2);
}

TEST_CASE("ring series matches monomial counts") {
  for (const Weights& w : {Weights(1, 1, 1), Weights(1, 2, 3), Weights(2, 3, 5)}) {
    const auto coeffs = hilbert::ring_series(w).expand(-2, 40);
    for (int d = -2; d <= 40; ++d) CHECK(coeffs[static_cast<std::size_t>(d + 2)] == static_cast<unsigned long>(brute_count(w, d)));
  }
  CHECK(hilbert::ring_series(Weights(1, 1, 1)).pole_order_at_one() == 3);
}

TEST_CASE("series cancel common factors") {
  // (1 - t^2) / ((1-t)(1-t^2)) = 1/(1-t)
  const HilbertSeries s(LaurentPoly::one_minus(2), {1, 2});
  CHECK(s.pole_order_at_one() == 1);
  CHECK(hilbert::series_equal(s, HilbertSeries(LaurentPoly::monomial(0), {1})));
  const HilbertSeries sum = s + s.shifted(1);
  CHECK(sum.coefficient(0) == 1);
  CHECK(sum.coefficient(5) == 2);
}

TEST_CASE("monomial quotient series agree with counting standard monomials") {
  Gen g(7);
  for (int t = 0; t < 40; ++t) {
    const Weights w = g.weights();
    std::vector<Monomial> gens;
    const int k = g.uniform(1, 4);
    for (int i = 0; i < k; ++i) {
      Monomial m = g.monomial(3);
      if (m.is_one()) m.e[0] = 1;
      gens.push_back(m);
    }
    const auto s = hilbert::monomial_quotient_series(w, gens);
    const auto c = s.expand(0, 24);
    for (int d = 0; d <= 24; ++d) CHECK(c[static_cast<std::size_t>(d)] == static_cast<unsigned long>(count_standard(w, d, gens)));
  }
}

TEST_CASE("closed forms at the cubic") {
  const Weights w(1, 1, 1);
  const auto ph1 = hilbert::closed_form_ph(w, 1).expand(-3, 9);
  for (int d = -3; d <= 9; ++d) CHECK(ph1[static_cast<std::size_t>(d + 3)] == ((d >= 0 && d % 3 == 0) ? 1 : 0));
  const auto ph3 = hilbert::closed_form_ph(w, 3).expand(-3, 3);
  CHECK(ph3 == std::vector<Integer>{1, 3, 3, 2, 3, 3, 2});
  CHECK_THROWS_AS(hilbert::closed_form_ph(w, 4), DomainError);
  CHECK_THROWS_AS(hilbert::closed_form_lph2(w, 1), DomainError);
}

TEST_CASE("koszul H1 closed form") {
  const auto s = hilbert::closed_form_koszul_h1(4, 4);  // t^{c'+a'b'}/(1-t^{c'}), c' = a'+b'
  const auto c = s.expand(0, 40);
  for (int d = 0; d <= 40; ++d) CHECK(c[static_cast<std::size_t>(d)] == ((d >= 24 && d % 8 == 0) ? 1 : 0));
  CHECK_THROWS_AS(hilbert::closed_form_koszul_h1(2, 4), DomainError);
}

TEST_CASE("euler characteristic series at the cubic") {
  // -t^{-3}(1-t)^3 / (1-t)^3 = -t^{-3}
  const auto s = hilbert::euler_characteristic_series(Weights(1, 1, 1), 3);
  CHECK(s.coefficient(-3) == -1);
  CHECK(s.coefficient(0) == 0);
}
