#include "wpoisson/graded.hpp"

#include <algorithm>

namespace wpoisson {

Coordinates::Coordinates(const Weights& w, const std::vector<int>& component_degrees) : w_(w) {
  offsets_.push_back(0);
  for (int d : component_degrees) {
    bases_.push_back(monomial_basis(w, d));
    std::vector<std::pair<Monomial, std::uint32_t>> lk;
    for (std::size_t i = 0; i < bases_.back().size(); ++i) {
      lk.emplace_back(bases_.back()[i], static_cast<std::uint32_t>(offsets_.back() + i));
    }
    std::sort(lk.begin(), lk.end());
    lookup_.push_back(std::move(lk));
    offsets_.push_back(offsets_.back() + bases_.back().size());
  }
}

std::vector<Poly> Coordinates::element(std::size_t k) const {
  std::vector<Poly> out(bases_.size(), Poly(w_));
  for (std::size_t c = 0; c < bases_.size(); ++c) {
    if (k < offsets_[c + 1]) {
      out[c] = Poly::term(w_, bases_[c][k - offsets_[c]], Rational(1));
      break;
    }
  }
  return out;
}

std::vector<std::pair<std::uint32_t, Rational>> Coordinates::coordinates(
    const std::vector<Poly>& parts) const {
  if (parts.size() != bases_.size()) throw ConfigurationError("component count mismatch");
  std::vector<std::pair<std::uint32_t, Rational>> out;
  for (std::size_t c = 0; c < parts.size(); ++c) {
    for (const auto& [m, v] : parts[c].terms()) {
      const auto& lk = lookup_[c];
      auto it = std::lower_bound(lk.begin(), lk.end(), m,
                                 [](const auto& e, const Monomial& q) { return e.first < q; });
      if (it == lk.end() || !(it->first == m)) {
        throw ConfigurationError("term outside the graded piece");
      }
      out.emplace_back(it->second, v);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
  return out;
}

std::vector<Rational> Coordinates::dense_coordinates(const std::vector<Poly>& parts) const {
  std::vector<Rational> v(size());
  for (auto& [i, c] : coordinates(parts)) v[i] = c;
  return v;
}

std::vector<Poly> Coordinates::from_coordinates(const std::vector<Rational>& v) const {
  if (v.size() != size()) throw ConfigurationError("coordinate vector length mismatch");
  std::vector<Poly> out(bases_.size(), Poly(w_));
  for (std::size_t c = 0; c < bases_.size(); ++c) {
    for (std::size_t i = 0; i < bases_[c].size(); ++i) out[c].add_term(bases_[c][i], v[offsets_[c] + i]);
  }
  return out;
}

namespace {
std::vector<int> shifted(const std::vector<int>& s, int d) {
  std::vector<int> out;
  for (int e : s) out.push_back(d + e);
  return out;
}
}  // namespace

Coordinates GradedMap::source(int d) const { return Coordinates(w_, shifted(src_, d)); }
Coordinates GradedMap::target(int d) const { return Coordinates(w_, shifted(tgt_, d)); }

linalg::SparseIntMatrix GradedMap::images(int d) const {
  const Coordinates s = source(d), t = target(d);
  linalg::SparseIntMatrix m;
  m.cols = t.size();
  m.rows.reserve(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) linalg::append_row(m, t.coordinates(fn_(s.element(k))));
  return m;
}

linalg::Matrix<Rational> GradedMap::matrix(int d) const {
  const Coordinates s = source(d), t = target(d);
  linalg::Matrix<Rational> m(t.size(), s.size());
  for (std::size_t k = 0; k < s.size(); ++k) {
    for (auto& [i, c] : t.coordinates(fn_(s.element(k)))) m(i, k) = c;
  }
  return m;
}

std::size_t GradedMap::rank(int d, linalg::Execution ex) const { return linalg::sparse_rank(images(d), ex); }

}  // namespace wpoisson
