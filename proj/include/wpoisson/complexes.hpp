#pragma once

// Degree-truncated homology of the Poisson cochain complex, the Koszul
// complex on the gradient of Ω and the de Rham complex, plus the M²,
// vacancy, sealedness and ozone diagnostics built on them.
//
// Cochain grading: in complex degree e the four terms are
//   A_e,  ⊕ A_{e+w+v},  ⊕ A_{e+2w+u+v},  A_{e+3w+a+b+c}
// and PH^i in its natural grading is H^i at e = d - i*w.

#include "wpoisson/graded.hpp"
#include "wpoisson/jacobian.hpp"

#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

namespace wpoisson::complexes {

using linalg::Execution;

/// Default truncation 3n + 12, overridable through WPOISSON_MAX_DEGREE.
int default_max_degree(const Poly& omega);

/// Dimensions indexed by (homological index, degree).
struct DimsTable {
  int min_degree = 0;
  int max_degree = 0;
  std::array<std::map<int, std::size_t>, 4> dims;

  std::size_t at(int i, int d) const {
    auto it = dims[static_cast<std::size_t>(i)].find(d);
    return it == dims[static_cast<std::size_t>(i)].end() ? 0 : it->second;
  }
};

/// Ranks of a fixed family of graded maps, cached by (map, degree).
class RankCache {
 public:
  explicit RankCache(std::vector<GradedMap> maps) : maps_(std::move(maps)) {}
  const GradedMap& map(std::size_t i) const { return maps_[i]; }
  std::size_t rank(std::size_t i, int d);
  /// Fills the cache for all listed jobs, in parallel across jobs when asked.
  void prefetch(const std::vector<std::pair<std::size_t, int>>& jobs, Execution ex);

 private:
  std::vector<GradedMap> maps_;
  std::map<std::pair<std::size_t, int>, std::size_t> cache_;
  std::mutex mu_;
};

/// The Poisson cochain complex of π_Ω with rank caching.
class PoissonComplex {
 public:
  explicit PoissonComplex(Poly omega);

  const Poly& omega() const { return omega_; }
  const Weights& weights() const { return omega_.weights(); }
  int n() const { return n_; }
  int w() const { return w_; }

  /// δ^0, δ^1, δ^2 in complex grading.
  const GradedMap& differential(int i) const { return ranks_.map(static_cast<std::size_t>(i)); }
  /// M² generators (f, g) ↦ f∇Ω + ∇g, in natural bivector grading.
  const GradedMap& m2_map() const { return ranks_.map(3); }
  /// δ ↦ (div δ, δ(Ω)) on derivations of natural degree d.
  const GradedMap& ozone_map() const { return ranks_.map(4); }

  std::size_t cochain_dim(int i, int e) const;
  std::size_t rank(int i, int e) { return ranks_.rank(static_cast<std::size_t>(i), e); }
  /// dim H^i at complex degree e.
  std::size_t cohomology(int i, int e);
  std::size_t m2_dim(int d) { return ranks_.rank(3, d); }
  std::size_t od_dim(int d);
  std::size_t hd_dim(int d) { return rank(0, d - w_); }

  void prefetch(const std::vector<std::pair<std::size_t, int>>& jobs, Execution ex) {
    ranks_.prefetch(jobs, ex);
  }

 private:
  Poly omega_;
  int n_, w_;
  RankCache ranks_;
};

struct CochainMatrices {
  linalg::Matrix<Rational> d0, d1, d2;
};

/// Matrices of δ^0, δ^1, δ^2 at complex degree e (target rows, source columns).
CochainMatrices cochain_matrices(const Poly& omega, int e);

/// dim PH^i_d for -(a+b+c) <= d <= D in the natural grading.
DimsTable ph_dims(PoissonComplex& cx, int max_degree, Execution ex = Execution::parallel);
DimsTable ph_dims(const Poly& omega, int max_degree, Execution ex = Execution::parallel);

/// dim M²(A)_d for -(a+b+c) <= d <= D.
std::map<int, std::size_t> m2_dims(PoissonComplex& cx, int max_degree,
                                   Execution ex = Execution::parallel);

struct VacancyRow {
  int degree;
  std::size_t ker_d2, m2, uph2;
};
struct VacancyReport {
  int max_degree;
  std::vector<VacancyRow> rows;
  bool vacant() const;
};
VacancyReport vacancy_check(PoissonComplex& cx, int max_degree, Execution ex = Execution::parallel);

struct OzoneRow {
  int degree;
  std::size_t od, hd;
};
struct OzoneReport {
  int max_degree;
  std::vector<OzoneRow> rows;
  bool ozone() const;
};
OzoneReport ozone_vs_hamiltonian(PoissonComplex& cx, int max_degree,
                                 Execution ex = Execution::parallel);

/// Per degree 0..D: PH^1_d equals the dimension of k[Ω]E in degree d.
std::map<int, bool> ph1_minimality_check(PoissonComplex& cx, int max_degree,
                                         Execution ex = Execution::parallel);

/// Alternating sums of PH dims against the Euler-characteristic series,
/// checked at every complex degree whose terms all lie in [-(a+b+c), D].
bool euler_characteristic_check(PoissonComplex& cx, int max_degree,
                                Execution ex = Execution::parallel);

/// K_3 -> K_2 -> K_1 -> K_0 = A: h ↦ h∇Ω, f ↦ f×∇Ω, f ↦ f·∇Ω.
std::array<GradedMap, 3> koszul_maps(const Poly& omega);
/// H_0..H_3 for 0 <= d <= D.
DimsTable koszul_dims(const Poly& omega, int max_degree, Execution ex = Execution::parallel);

struct SealedReport {
  int max_degree;
  std::map<int, std::size_t> dims;  // sK_1 per degree
  bool sealed() const;
};
/// The map f ↦ (f·∇Ω, NF(div f)) whose kernel is the sealed cycle space.
GradedMap sealed_cycle_map(const Poly& omega, const jacobian::GroebnerBasis<Rational>& gb);
SealedReport sealed_k1_dims(const Poly& omega, int max_degree, Execution ex = Execution::parallel);

/// Ω^0 -> Ω^1 -> Ω^2 -> Ω^3 via gradient, curl, divergence.
std::array<GradedMap, 3> derham_maps(const Weights& w);
bool derham_exactness_check(const Weights& w, int max_degree, Execution ex = Execution::parallel);

}  // namespace wpoisson::complexes
