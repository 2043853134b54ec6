#pragma once

// Shared helpers for the test binaries: seeded random polynomials and
// matrices, plus brute-force reference routines.

#include "wpoisson/linalg.hpp"
#include "wpoisson/polynomial.hpp"
#include "wpoisson/textio.hpp"

#include <cstdint>
#include <random>

namespace wptest {

using namespace wpoisson;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational rational(int span = 5) {
    const int num = uniform(-span, span);
    const int den = uniform(1, 3);
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  Rational nonzero_rational(int span = 5) {
    for (;;) {
      Rational r = rational(span);
      if (r != 0) return r;
    }
  }

  Monomial monomial(int max_exp) { return Monomial(uniform(0, max_exp), uniform(0, max_exp), uniform(0, max_exp)); }

  Poly poly(const Weights& w, int max_terms = 4, int max_exp = 3) {
    Poly p(w);
    const int k = uniform(0, max_terms);
    for (int i = 0; i < k; ++i) p.add_term(monomial(max_exp), rational());
    return p;
  }

  /// Random homogeneous polynomial of weighted degree d (zero if A_d = 0).
  Poly homogeneous(const Weights& w, int d, int max_terms = 4) {
    Poly p(w);
    const auto basis = monomial_basis(w, d);
    if (basis.empty()) return p;
    const int k = uniform(1, max_terms);
    for (int i = 0; i < k; ++i) p.add_term(basis[static_cast<std::size_t>(uniform(0, static_cast<int>(basis.size()) - 1))], nonzero_rational());
    return p;
  }

  PolyVec vec(const Weights& w, int max_terms = 3, int max_exp = 3) {
    return {poly(w, max_terms, max_exp), poly(w, max_terms, max_exp), poly(w, max_terms, max_exp)};
  }

  linalg::Matrix<Rational> matrix(std::size_t r, std::size_t c, int density_percent = 50, int span = 4) {
    linalg::Matrix<Rational> m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (uniform(1, 100) <= density_percent) m(i, j) = rational(span);
    return m;
  }

  Weights weights() {
    static const Weights table[] = {Weights(1, 1, 1), Weights(1, 1, 2), Weights(1, 2, 3), Weights(2, 3, 5), Weights(1, 2, 2)};
    return table[uniform(0, 4)];
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Plain textbook Gaussian elimination over Q, independent of linalg.
inline std::size_t reference_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

inline std::vector<std::vector<Rational>> rows_of(const linalg::Matrix<Rational>& m) {
  std::vector<std::vector<Rational>> out(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

/// Number of (i,j,k) >= 0 with a i + b j + c k = d, by enumeration.
inline std::size_t brute_count(const Weights& w, int d) {
  if (d < 0) return 0;
  std::size_t n = 0;
  for (int i = 0; i * w.a() <= d; ++i)
    for (int j = 0; i * w.a() + j * w.b() <= d; ++j)
      if ((d - i * w.a() - j * w.b()) % w.c() == 0) ++n;
  return n;
}

inline Poly P(const char* text, const Weights& w) { return textio::parse_poly(text, w); }

}  // namespace wptest
