#include "support.hpp"

#include <doctest.h>

using namespace wptest;
using linalg::Matrix;

namespace {

Matrix<Rational> from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size(), c = rows.begin()->size();
  Matrix<Rational> m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("rank of small hand-checked matrices") {
  CHECK(linalg::rank(from_rows({{1, 2}, {2, 4}})) == 1);
  CHECK(linalg::rank(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);
  CHECK(linalg::rank(from_rows({{0, 0}, {0, 0}})) == 0);
  CHECK(linalg::rank(Matrix<Rational>::identity(5)) == 5);
  CHECK(linalg::rank(Matrix<Rational>(0, 4)) == 0);
}

TEST_CASE("rational entries are cleared of denominators") {
  Matrix<Rational> m(2, 2);
  m(0, 0) = Rational(1, 2);
  m(0, 1) = Rational(1, 3);
  m(1, 0) = Rational(3, 1);
  m(1, 1) = Rational(2, 1);
  CHECK(linalg::rank(m) == 1);
  const auto s = linalg::to_sparse(m);
  REQUIRE(s.rows.size() == 2);
  CHECK(s.rows[0].size() == 2);
}

TEST_CASE("kernel basis vectors are annihilated") {
  const auto m = from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
  const auto k = linalg::kernel_basis(m);
  REQUIRE(k.size() == 1);
  for (const auto& r : m.apply(k[0])) CHECK(r == 0);
}

TEST_CASE("column span membership returns a witness") {
  const auto m = from_rows({{1, 0}, {0, 1}, {1, 1}});
  const auto yes = linalg::in_column_span(m, std::vector<Rational>{2, 3, 5});
  REQUIRE(yes.has_value());
  CHECK(m.apply(*yes) == std::vector<Rational>{2, 3, 5});
  CHECK_FALSE(linalg::in_column_span(m, std::vector<Rational>{2, 3, 4}).has_value());
  CHECK_THROWS_AS(linalg::in_column_span(m, std::vector<Rational>{1, 2}), ConfigurationError);
}

TEST_CASE("sparse rank matches textbook elimination and is execution independent") {
  Gen g(20240517);
  for (int t = 0; t < 60; ++t) {
    const auto m = g.matrix(static_cast<std::size_t>(g.uniform(1, 14)), static_cast<std::size_t>(g.uniform(1, 14)),
                            g.uniform(10, 90));
    const std::size_t ref = reference_rank(rows_of(m));
    const auto s = linalg::to_sparse(m);
    CHECK(linalg::sparse_rank(s, linalg::Execution::serial) == ref);
    CHECK(linalg::sparse_rank(s, linalg::Execution::parallel) == ref);
  }
}

TEST_CASE("dense generic routines over an extension field") {
  const auto F = textio::parse_extension("s^2+1");
  const ExtElement i = ExtElement::generator(F);
  Matrix<ExtElement> m(2, 2);
  m(0, 0) = ExtElement(1);
  m(0, 1) = i;
  m(1, 0) = i;
  m(1, 1) = ExtElement(-1);  // second row = i * first row
  CHECK(linalg::rank(m) == 1);
  const auto k = linalg::kernel_basis(m);
  REQUIRE(k.size() == 1);
  for (const auto& r : m.apply(k[0])) CHECK(r.is_zero());
}

TEST_CASE("matrix product and transpose") {
  const auto a = from_rows({{1, 2}, {3, 4}});
  const auto b = from_rows({{0, 1}, {1, 0}});
  CHECK(a * b == from_rows({{2, 1}, {4, 3}}));
  CHECK(a.transpose() == from_rows({{1, 3}, {2, 4}}));
  CHECK((a * Matrix<Rational>::identity(2)) == a);
}
