#pragma once

// Degree-d pieces of direct sums of shifted copies of A, and maps between
// them assembled column by column on monomial bases.

#include "wpoisson/linalg.hpp"
#include "wpoisson/polynomial.hpp"

#include <functional>
#include <vector>

namespace wpoisson {

/// Basis of A_{d_0} ⊕ A_{d_1} ⊕ ... in the fixed monomial order, component
/// by component.
class Coordinates {
 public:
  Coordinates(const Weights& w, const std::vector<int>& component_degrees);

  std::size_t size() const { return offsets_.back(); }
  std::size_t components() const { return bases_.size(); }
  const std::vector<Monomial>& basis(std::size_t comp) const { return bases_[comp]; }
  std::size_t offset(std::size_t comp) const { return offsets_[comp]; }

  /// The k-th basis element as a tuple of polynomials.
  std::vector<Poly> element(std::size_t k) const;
  /// Sparse coordinates of a tuple; throws if a term lies outside the basis.
  std::vector<std::pair<std::uint32_t, Rational>> coordinates(const std::vector<Poly>& parts) const;
  std::vector<Rational> dense_coordinates(const std::vector<Poly>& parts) const;
  /// Inverse of dense_coordinates.
  std::vector<Poly> from_coordinates(const std::vector<Rational>& v) const;

 private:
  Weights w_;
  std::vector<std::vector<Monomial>> bases_;
  std::vector<std::vector<std::pair<Monomial, std::uint32_t>>> lookup_;  // sorted lexicographically
  std::vector<std::size_t> offsets_;
};

/// A degree-preserving linear map ⊕ A[s_j] -> ⊕ A[t_i]: in degree d the
/// source is ⊕ A_{d+s_j} and the target ⊕ A_{d+t_i}.
class GradedMap {
 public:
  using Fn = std::function<std::vector<Poly>(const std::vector<Poly>&)>;

  GradedMap(Weights w, std::vector<int> source_shifts, std::vector<int> target_shifts, Fn fn)
      : w_(w), src_(std::move(source_shifts)), tgt_(std::move(target_shifts)), fn_(std::move(fn)) {}

  const Weights& weights() const { return w_; }
  Coordinates source(int d) const;
  Coordinates target(int d) const;
  std::vector<Poly> apply(const std::vector<Poly>& v) const { return fn_(v); }

  /// One row per source basis element holding its image (transpose of the
  /// matrix of the map).
  linalg::SparseIntMatrix images(int d) const;
  /// Matrix with target rows and source columns.
  linalg::Matrix<Rational> matrix(int d) const;
  std::size_t rank(int d, linalg::Execution ex = linalg::Execution::serial) const;

 private:
  Weights w_;
  std::vector<int> src_, tgt_;
  Fn fn_;
};

}  // namespace wpoisson
