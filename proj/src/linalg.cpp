#include "wpoisson/linalg.hpp"

#include <algorithm>
#include <limits>

namespace wpoisson::linalg {

namespace {

void divide_by_content(SparseRow& row) {
  if (row.empty()) return;
  Integer g = abs(row.front().second);
  for (std::size_t i = 1; i < row.size() && g != 1; ++i) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[i].second.get_mpz_t());
  if (g == 1) return;
  for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

const Integer* find_entry(const SparseRow& row, std::uint32_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::uint32_t c) { return e.first < c; });
  if (it == row.end() || it->first != col) return nullptr;
  return &it->second;
}

// target := a*target - b*pivot, then strip the common content.
void eliminate(SparseRow& target, const SparseRow& pivot, const Integer& pivot_value,
               std::uint32_t pivot_col) {
  const Integer* tv = find_entry(target, pivot_col);
  Integer g;
  mpz_gcd(g.get_mpz_t(), pivot_value.get_mpz_t(), tv->get_mpz_t());
  Integer a, b;
  mpz_divexact(a.get_mpz_t(), pivot_value.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(b.get_mpz_t(), tv->get_mpz_t(), g.get_mpz_t());

  SparseRow out;
  out.reserve(target.size() + pivot.size());
  std::size_t i = 0, j = 0;
  Integer t;
  while (i < target.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < target.size() && target[i].first < pivot[j].first)) {
      out.emplace_back(target[i].first, a * target[i].second);
      ++i;
    } else if (i == target.size() || pivot[j].first < target[i].first) {
      out.emplace_back(pivot[j].first, -(b * pivot[j].second));
      ++j;
    } else {
      t = a * target[i].second;
      mpz_submul(t.get_mpz_t(), b.get_mpz_t(), pivot[j].second.get_mpz_t());
      if (sgn(t) != 0) out.emplace_back(target[i].first, t);
      ++i;
      ++j;
    }
  }
  divide_by_content(out);
  target = std::move(out);
}

}  // namespace

std::size_t sparse_rank(SparseIntMatrix m, Execution ex) {
  std::vector<SparseRow> rows;
  rows.reserve(m.rows.size());
  std::vector<std::size_t> col_count(m.cols, 0);
  for (auto& r : m.rows) {
    r.erase(std::remove_if(r.begin(), r.end(), [](const auto& e) { return sgn(e.second) == 0; }),
            r.end());
    if (r.empty()) continue;
    std::sort(r.begin(), r.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
    divide_by_content(r);
    for (const auto& e : r) ++col_count[e.first];
    rows.push_back(std::move(r));
  }

  std::size_t rank = 0;
  std::vector<std::size_t> targets;
  while (!rows.empty()) {
    // Markowitz-style pivot: sparsest row, then its least-populated column,
    // then the smallest magnitude.
    std::size_t p = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      if (rows[i].size() < rows[p].size()) p = i;
    }
    std::size_t best = 0;
    for (std::size_t k = 1; k < rows[p].size(); ++k) {
      const auto& cand = rows[p][k];
      const auto& cur = rows[p][best];
      const std::size_t cc = col_count[cand.first], bc = col_count[cur.first];
      if (cc < bc || (cc == bc && mpz_cmpabs(cand.second.get_mpz_t(), cur.second.get_mpz_t()) < 0)) best = k;
    }
    const std::uint32_t pc = rows[p][best].first;
    SparseRow pivot = std::move(rows[p]);
    rows[p] = std::move(rows.back());
    rows.pop_back();
    for (const auto& e : pivot) --col_count[e.first];
    ++rank;
    if (col_count[pc] == 0) continue;

    targets.clear();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (find_entry(rows[i], pc)) targets.push_back(i);
    }
    for (auto i : targets) {
      for (const auto& e : rows[i]) --col_count[e.first];
    }
    const Integer pv = *find_entry(pivot, pc);
    const auto nt = static_cast<std::ptrdiff_t>(targets.size());
    if (ex == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 4)
      for (std::ptrdiff_t t = 0; t < nt; ++t) eliminate(rows[targets[t]], pivot, pv, pc);
    } else {
      for (std::ptrdiff_t t = 0; t < nt; ++t) eliminate(rows[targets[t]], pivot, pv, pc);
    }
    for (auto i : targets) {
      for (const auto& e : rows[i]) ++col_count[e.first];
    }
    rows.erase(std::remove_if(rows.begin(), rows.end(), [](const SparseRow& r) { return r.empty(); }),
               rows.end());
  }
  return rank;
}

void append_row(SparseIntMatrix& m, std::vector<std::pair<std::uint32_t, Rational>> row) {
  Integer l = 1;
  for (const auto& [c, v] : row) {
    if (sgn(v) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  }
  SparseRow out;
  out.reserve(row.size());
  for (auto& [c, v] : row) {
    if (sgn(v) == 0) continue;
    Integer scaled = l / v.get_den() * v.get_num();
    out.emplace_back(c, std::move(scaled));
  }
  if (out.size() > std::numeric_limits<std::uint32_t>::max()) throw ConfigurationError("row too long");
  m.rows.push_back(std::move(out));
}

SparseIntMatrix to_sparse(const Matrix<Rational>& m) {
  SparseIntMatrix s;
  s.cols = m.cols();
  s.rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<std::pair<std::uint32_t, Rational>> row;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (sgn(m(i, j)) != 0) row.emplace_back(static_cast<std::uint32_t>(j), m(i, j));
    }
    append_row(s, std::move(row));
  }
  return s;
}

}  // namespace wpoisson::linalg
