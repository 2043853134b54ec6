#include "wpoisson/complexes.hpp"

#include "wpoisson/catalog.hpp"
#include "wpoisson/hilbert.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace wptest;
using complexes::Execution;

TEST_CASE("cochain differentials compose to zero") {
  for (auto [t, w] : {std::pair{"x^3+y^3+z^3+x*y*z", Weights(1, 1, 1)}, std::pair{"x^2*z+x*y^3", Weights(1, 1, 2)},
                      std::pair{"z^2+y^3", Weights(1, 2, 3)}, std::pair{"x^2", Weights(1, 1, 1)}}) {
    const Poly omega = P(t, w);
    for (int e = -6; e <= 8; ++e) {
      const auto m = complexes::cochain_matrices(omega, e);
      if (m.d0.rows() && m.d0.cols() && m.d1.rows()) CHECK((m.d1 * m.d0).is_zero_matrix());
      if (m.d1.rows() && m.d1.cols() && m.d2.rows()) CHECK((m.d2 * m.d1).is_zero_matrix());
    }
  }
}

TEST_CASE("cubic cohomology matches the closed forms") {
  const Poly omega = P("x^3+y^3+z^3+x*y*z", Weights(1, 1, 1));
  const auto t = complexes::ph_dims(omega, 12);
  CHECK(catalog::ph_matches_closed_forms(t, omega.weights()));
  for (int d = 0; d <= 12; ++d) CHECK(t.at(1, d) == (d % 3 == 0 ? 1u : 0u));
}

TEST_CASE("serial and parallel degree loops agree") {
  const Poly omega = P("z^2+x^2*y^2+x^3*y", Weights(1, 1, 2));
  const auto s = complexes::ph_dims(omega, 14, Execution::serial);
  const auto p = complexes::ph_dims(omega, 14, Execution::parallel);
  CHECK(s.dims == p.dims);
}

TEST_CASE("PH0 is k[Omega] for an irreducible potential") {
  complexes::PoissonComplex cx(P("z^2+x^3*y", Weights(1, 1, 2)));
  const auto t = complexes::ph_dims(cx, 16);
  for (int d = t.min_degree; d <= 16; ++d) CHECK(t.at(0, d) == ((d >= 0 && d % 4 == 0) ? 1u : 0u));
  for (const auto& [d, ok] : complexes::ph1_minimality_check(cx, 16)) CHECK(ok);
}

TEST_CASE("cusp is neither vacant nor ozone, with matching degrees") {
  complexes::PoissonComplex cx(P("z^2+y^3", Weights(1, 2, 3)));
  const auto v = complexes::vacancy_check(cx, 20);
  const auto o = complexes::ozone_vs_hamiltonian(cx, 20);
  CHECK_FALSE(v.vacant());
  CHECK_FALSE(o.ozone());
  REQUIRE(v.rows.size() == o.rows.size());
  for (std::size_t k = 0; k < v.rows.size(); ++k) CHECK((v.rows[k].uph2 == 0) == (o.rows[k].od == o.rows[k].hd));
}

TEST_CASE("isolated singularity gives a regular sequence") {
  const Poly omega = P("x^3+y^3+z^3", Weights(1, 1, 1));
  const auto k = complexes::koszul_dims(omega, 10);
  for (int d = 0; d <= 10; ++d) {
    CHECK(k.at(1, d) == 0);
    CHECK(k.at(2, d) == 0);
    CHECK(k.at(3, d) == 0);
  }
  CHECK(k.at(0, 0) == 1);
  CHECK(complexes::sealed_k1_dims(omega, 10).sealed());
}

TEST_CASE("Koszul H1 and sealedness for xyz+x^4+y^4") {
  const Poly omega = P("x*y*z+x^4+y^4", Weights(1, 1, 2));
  const auto k = complexes::koszul_dims(omega, 24);
  for (int d = 0; d <= 24; ++d) CHECK(k.at(1, d) == ((d >= 6 && d % 2 == 0) ? 1u : 0u));
  const auto s = complexes::sealed_k1_dims(omega, 24);
  CHECK(s.sealed());
}

TEST_CASE("reducible potential is not sealed") {
  CHECK_FALSE(complexes::sealed_k1_dims(P("x*y*z", Weights(1, 1, 1)), 9).sealed());
}

TEST_CASE("de Rham complex is exact away from constants") {
  for (const Weights& w : {Weights(1, 1, 1), Weights(1, 2, 3)}) CHECK(complexes::derham_exactness_check(w, 14));
}

TEST_CASE("euler characteristic identity, irreducible and reducible") {
  for (auto [t, w] : {std::pair{"z^2+x^3*y", Weights(1, 1, 2)}, std::pair{"x^2*y^2", Weights(1, 1, 2)},
                      std::pair{"x*y*z+y^3", Weights(1, 2, 3)}}) {
    complexes::PoissonComplex cx(P(t, w));
    CHECK(complexes::euler_characteristic_check(cx, 16));
  }
}

TEST_CASE("default truncation is 3n+12 unless overridden") {
  const Poly omega = P("x^3+y^3+z^3", Weights(1, 1, 1));
  ::unsetenv("WPOISSON_MAX_DEGREE");
  CHECK(complexes::default_max_degree(omega) == 21);
  ::setenv("WPOISSON_MAX_DEGREE", "9", 1);
  CHECK(complexes::default_max_degree(omega) == 9);
  ::unsetenv("WPOISSON_MAX_DEGREE");
}
