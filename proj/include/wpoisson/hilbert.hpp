#pragma once

// Hilbert series as exact rational functions N(t) / prod (1 - t^e), where N
// is a Laurent polynomial with integer coefficients.

#include "wpoisson/polynomial.hpp"

#include <map>
#include <string>
#include <vector>

namespace wpoisson::hilbert {

class LaurentPoly {
 public:
  LaurentPoly() = default;
  /// c * t^d
  static LaurentPoly monomial(int d, const Integer& c = 1);
  /// 1 - t^e (any integer e; e = 0 gives zero)
  static LaurentPoly one_minus(int e);

  const std::map<int, Integer>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  Integer at(int d) const;
  int min_degree() const { return c_.begin()->first; }
  int max_degree() const { return c_.rbegin()->first; }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }
  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
  LaurentPoly operator-() const;
  LaurentPoly shifted(int k) const;
  bool operator==(const LaurentPoly&) const = default;

  /// Exact division by (1 - t^e), e > 0; false when not divisible.
  bool divide_one_minus(int e, LaurentPoly& quotient) const;
  /// Multiplicity of t = 1 as a root.
  int order_at_one() const;

  std::string to_string() const;

 private:
  void add(int d, const Integer& c);
  std::map<int, Integer> c_;
};

class HilbertSeries {
 public:
  HilbertSeries() = default;
  HilbertSeries(LaurentPoly numerator, std::vector<int> denominator);

  const LaurentPoly& numerator() const { return num_; }
  const std::vector<int>& denominator() const { return den_; }

  /// Coefficients of t^d for d_min <= d <= d_max.
  std::vector<Integer> expand(int d_min, int d_max) const;
  Integer coefficient(int d) const { return expand(d, d)[0]; }

  /// Order of the pole at t = 1 (0 when the series is a Laurent polynomial).
  int pole_order_at_one() const;

  HilbertSeries shifted(int k) const;
  friend HilbertSeries operator+(const HilbertSeries& p, const HilbertSeries& q);
  friend HilbertSeries operator-(const HilbertSeries& p, const HilbertSeries& q);
  friend HilbertSeries operator*(const HilbertSeries& p, const HilbertSeries& q);

  std::string to_string() const;

 private:
  void canonicalize();
  LaurentPoly num_;
  std::vector<int> den_;  // sorted, each > 0
};

bool series_equal(const HilbertSeries& p, const HilbertSeries& q);

/// 1 / ((1-t^a)(1-t^b)(1-t^c))
HilbertSeries ring_series(const Weights& w);
/// Closed forms for PH^i when deg(potential) = a+b+c.
HilbertSeries closed_form_ph(const Weights& w, int i);
/// Series of the lower part of PH^2 for potentials of degree n > max weight.
HilbertSeries closed_form_lph2(const Weights& w, int n);
/// t^(c'+a'b') / (1 - t^c'), c' = a'b' - a' - b'; needs a', b' >= 3.
HilbertSeries closed_form_koszul_h1(int a_prime, int b_prime);
/// Right-hand side of the Euler-characteristic identity for a potential of
/// degree n:  -t^-(3w+a+b+c) (1-t^(w+a))(1-t^(w+b))(1-t^(w+c)) h_A(t).
HilbertSeries euler_characteristic_series(const Weights& w, int n);
/// Series of A / I for the monomial ideal I generated by `gens`.
HilbertSeries monomial_quotient_series(const Weights& w, const std::vector<Monomial>& gens);

}  // namespace wpoisson::hilbert
