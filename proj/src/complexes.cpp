#include "wpoisson/complexes.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace wpoisson::complexes {

namespace {

PolyVec vec(const std::vector<Poly>& v) { return {v[0], v[1], v[2]}; }
std::vector<Poly> list(const PolyVec& v) { return {v[0], v[1], v[2]}; }

void require_homogeneous(const Poly& omega) {
  if (omega.is_zero() || !omega.is_homogeneous() || *omega.degree() <= 0) {
    throw DomainError("potential must be nonzero, homogeneous and of positive degree");
  }
}

Poly checked(Poly omega) {
  require_homogeneous(omega);
  return omega;
}

std::vector<GradedMap> poisson_maps(const Poly& omega) {
  const Weights& wt = omega.weights();
  const int a = wt.a(), b = wt.b(), c = wt.c();
  const int n = *omega.degree(), w = n - a - b - c;
  const PolyVec g = gradient(omega);
  std::vector<GradedMap> maps;
  // δ0(f) = ∇f × ∇Ω
  maps.emplace_back(wt, std::vector<int>{0}, std::vector<int>{w + a, w + b, w + c},
                    [g](const std::vector<Poly>& v) { return list(cross(gradient(v[0]), g)); });
  // δ1(f) = -∇(f·∇Ω) + div(f)∇Ω
  maps.emplace_back(wt, std::vector<int>{w + a, w + b, w + c},
                    std::vector<int>{2 * w + b + c, 2 * w + a + c, 2 * w + a + b},
                    [g](const std::vector<Poly>& v) {
                      const PolyVec f = vec(v);
                      return list(scale(div(f), g) - gradient(dot(f, g)));
                    });
  // δ2(f) = -div(f × ∇Ω)
  maps.emplace_back(wt, std::vector<int>{2 * w + b + c, 2 * w + a + c, 2 * w + a + b},
                    std::vector<int>{3 * w + a + b + c},
                    [g](const std::vector<Poly>& v) { return std::vector<Poly>{-div(cross(vec(v), g))}; });
  // (f, g) ↦ f∇Ω + ∇g in natural bivector degree d: f ∈ A_{d-w}, g ∈ A_{d+a+b+c}
  maps.emplace_back(wt, std::vector<int>{-w, a + b + c}, std::vector<int>{b + c, a + c, a + b},
                    [g](const std::vector<Poly>& v) { return list(scale(v[0], g) + gradient(v[1])); });
  // δ ↦ (div δ, δ(Ω)) on derivations of degree d
  maps.emplace_back(wt, std::vector<int>{a, b, c}, std::vector<int>{0, n},
                    [g](const std::vector<Poly>& v) {
                      const PolyVec f = vec(v);
                      return std::vector<Poly>{div(f), dot(f, g)};
                    });
  return maps;
}

// Independent rank jobs, spread over threads when asked.
std::vector<std::size_t> run_ranks(const std::vector<std::pair<const GradedMap*, int>>& jobs,
                                   Execution ex) {
  std::vector<std::size_t> out(jobs.size());
  const auto n = static_cast<std::ptrdiff_t>(jobs.size());
  if (ex == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      out[static_cast<std::size_t>(i)] = jobs[static_cast<std::size_t>(i)].first->rank(jobs[static_cast<std::size_t>(i)].second);
    }
  } else {
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      out[static_cast<std::size_t>(i)] = jobs[static_cast<std::size_t>(i)].first->rank(jobs[static_cast<std::size_t>(i)].second);
    }
  }
  return out;
}

std::size_t dim_source(const GradedMap& m, int d) { return m.source(d).size(); }

}  // namespace

int default_max_degree(const Poly& omega) {
  if (const char* env = std::getenv("WPOISSON_MAX_DEGREE")) {
    try {
      const int v = std::stoi(env);
      if (v >= 0) return v;
    } catch (const std::exception&) {
    }
  }
  const int n = omega.degree().value_or(omega.weights().sum());
  return 3 * n + 12;
}

std::size_t RankCache::rank(std::size_t i, int d) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find({i, d});
    if (it != cache_.end()) return it->second;
  }
  const std::size_t r = maps_[i].rank(d);
  std::lock_guard<std::mutex> lock(mu_);
  cache_[{i, d}] = r;
  return r;
}

void RankCache::prefetch(const std::vector<std::pair<std::size_t, int>>& jobs, Execution ex) {
  std::vector<std::pair<std::size_t, int>> todo;
  {
    std::lock_guard<std::mutex> lock(mu_);
    for (const auto& j : jobs) {
      if (!cache_.count(j) && std::find(todo.begin(), todo.end(), j) == todo.end()) todo.push_back(j);
    }
  }
  // Largest degrees first; they dominate the cost.
  std::stable_sort(todo.begin(), todo.end(), [](const auto& p, const auto& q) { return p.second > q.second; });
  std::vector<std::pair<const GradedMap*, int>> runs;
  for (const auto& [i, d] : todo) runs.emplace_back(&maps_[i], d);
  const auto r = run_ranks(runs, ex);
  std::lock_guard<std::mutex> lock(mu_);
  for (std::size_t k = 0; k < todo.size(); ++k) cache_[todo[k]] = r[k];
}

PoissonComplex::PoissonComplex(Poly omega)
    : omega_(checked(std::move(omega))),
      n_(*omega_.degree()),
      w_(n_ - omega_.weights().sum()),
      ranks_(poisson_maps(omega_)) {}

std::size_t PoissonComplex::cochain_dim(int i, int e) const {
  if (i < 3) return differential(i).source(e).size();
  return differential(2).target(e).size();
}

std::size_t PoissonComplex::cohomology(int i, int e) {
  const std::size_t dim = cochain_dim(i, e);
  const std::size_t out = i < 3 ? rank(i, e) : 0;
  const std::size_t in = i > 0 ? rank(i - 1, e) : 0;
  return dim - out - in;
}

std::size_t PoissonComplex::od_dim(int d) {
  return dim_source(ozone_map(), d) - ranks_.rank(4, d);
}

CochainMatrices cochain_matrices(const Poly& omega, int e) {
  require_homogeneous(omega);
  const auto maps = poisson_maps(omega);
  return {maps[0].matrix(e), maps[1].matrix(e), maps[2].matrix(e)};
}

DimsTable ph_dims(PoissonComplex& cx, int max_degree, Execution ex) {
  DimsTable t;
  t.min_degree = -cx.weights().sum();
  t.max_degree = max_degree;
  std::vector<std::pair<std::size_t, int>> jobs;
  for (int i = 0; i < 4; ++i) {
    for (int d = t.min_degree; d <= max_degree; ++d) {
      const int e = d - i * cx.w();
      if (i < 3) jobs.emplace_back(static_cast<std::size_t>(i), e);
      if (i > 0) jobs.emplace_back(static_cast<std::size_t>(i - 1), e);
    }
  }
  cx.prefetch(jobs, ex);
  for (int i = 0; i < 4; ++i) {
    for (int d = t.min_degree; d <= max_degree; ++d) t.dims[static_cast<std::size_t>(i)][d] = cx.cohomology(i, d - i * cx.w());
  }
  return t;
}

DimsTable ph_dims(const Poly& omega, int max_degree, Execution ex) {
  PoissonComplex cx(omega);
  return ph_dims(cx, max_degree, ex);
}

std::map<int, std::size_t> m2_dims(PoissonComplex& cx, int max_degree, Execution ex) {
  std::vector<std::pair<std::size_t, int>> jobs;
  const int lo = -cx.weights().sum();
  for (int d = lo; d <= max_degree; ++d) jobs.emplace_back(3, d);
  cx.prefetch(jobs, ex);
  std::map<int, std::size_t> out;
  for (int d = lo; d <= max_degree; ++d) out[d] = cx.m2_dim(d);
  return out;
}

bool VacancyReport::vacant() const {
  return std::all_of(rows.begin(), rows.end(), [](const VacancyRow& r) { return r.uph2 == 0; });
}

VacancyReport vacancy_check(PoissonComplex& cx, int max_degree, Execution ex) {
  const int lo = -cx.weights().sum();
  std::vector<std::pair<std::size_t, int>> jobs;
  for (int d = lo; d <= max_degree; ++d) {
    jobs.emplace_back(2, d - 2 * cx.w());
    jobs.emplace_back(3, d);
  }
  cx.prefetch(jobs, ex);
  VacancyReport rep{max_degree, {}};
  for (int d = lo; d <= max_degree; ++d) {
    const int e = d - 2 * cx.w();
    const std::size_t ker = cx.cochain_dim(2, e) - cx.rank(2, e);
    const std::size_t m2 = cx.m2_dim(d);
    if (m2 > ker) throw std::logic_error("M2 exceeds the cocycle space at degree " + std::to_string(d));
    rep.rows.push_back({d, ker, m2, ker - m2});
  }
  return rep;
}

bool OzoneReport::ozone() const {
  return std::all_of(rows.begin(), rows.end(), [](const OzoneRow& r) { return r.od == r.hd; });
}

OzoneReport ozone_vs_hamiltonian(PoissonComplex& cx, int max_degree, Execution ex) {
  const int lo = -cx.weights().sum();
  std::vector<std::pair<std::size_t, int>> jobs;
  for (int d = lo; d <= max_degree; ++d) {
    jobs.emplace_back(4, d);
    jobs.emplace_back(0, d - cx.w());
  }
  cx.prefetch(jobs, ex);
  OzoneReport rep{max_degree, {}};
  for (int d = lo; d <= max_degree; ++d) rep.rows.push_back({d, cx.od_dim(d), cx.hd_dim(d)});
  return rep;
}

std::map<int, bool> ph1_minimality_check(PoissonComplex& cx, int max_degree, Execution ex) {
  const DimsTable t = ph_dims(cx, max_degree, ex);
  std::map<int, bool> out;
  for (int d = t.min_degree; d <= max_degree; ++d) {
    const std::size_t expect = (d >= 0 && d % cx.n() == 0) ? 1 : 0;
    out[d] = t.at(1, d) == expect;
  }
  return out;
}

bool euler_characteristic_check(PoissonComplex& cx, int max_degree, Execution ex) {
  const DimsTable t = ph_dims(cx, max_degree, ex);
  const int w = cx.w();
  const auto series = hilbert::euler_characteristic_series(cx.weights(), cx.n());
  const int lo = t.min_degree - 3 * std::max(w, 0);
  for (int e = lo; e <= max_degree; ++e) {
    bool in_range = true;
    Integer sum = 0;
    for (int i = 0; i < 4; ++i) {
      const int d = e + i * w;
      if (d > max_degree) {
        in_range = false;
        break;
      }
      const Integer v(static_cast<unsigned long>(t.at(i, d)));
      sum += (i % 2 == 0) ? v : Integer(-v);
    }
    if (!in_range) continue;
    if (sum != series.coefficient(e)) return false;
  }
  return true;
}

std::array<GradedMap, 3> koszul_maps(const Poly& omega) {
  require_homogeneous(omega);
  const Weights& wt = omega.weights();
  const int a = wt.a(), b = wt.b(), c = wt.c(), n = *omega.degree();
  const PolyVec g = gradient(omega);
  const std::vector<int> k1{a - n, b - n, c - n};
  const std::vector<int> k2{-2 * n + b + c, -2 * n + a + c, -2 * n + a + b};
  const std::vector<int> k3{-3 * n + a + b + c};
  return {GradedMap(wt, k1, {0}, [g](const std::vector<Poly>& v) { return std::vector<Poly>{dot(vec(v), g)}; }),
          GradedMap(wt, k2, k1, [g](const std::vector<Poly>& v) { return list(cross(vec(v), g)); }),
          GradedMap(wt, k3, k2, [g](const std::vector<Poly>& v) { return list(scale(v[0], g)); })};
}

DimsTable koszul_dims(const Poly& omega, int max_degree, Execution ex) {
  const auto maps = koszul_maps(omega);
  std::vector<std::pair<const GradedMap*, int>> jobs;
  for (int d = 0; d <= max_degree; ++d) {
    for (const auto& m : maps) jobs.emplace_back(&m, d);
  }
  const auto r = run_ranks(jobs, ex);
  DimsTable t;
  t.min_degree = 0;
  t.max_degree = max_degree;
  for (int d = 0; d <= max_degree; ++d) {
    const std::size_t base = static_cast<std::size_t>(d) * 3;
    const std::size_t r1 = r[base], r2 = r[base + 1], r3 = r[base + 2];  // out of K1, K2, K3
    const std::size_t k0 = count_monomials(omega.weights(), d);
    t.dims[0][d] = k0 - r1;
    t.dims[1][d] = dim_source(maps[0], d) - r1 - r2;
    t.dims[2][d] = dim_source(maps[1], d) - r2 - r3;
    t.dims[3][d] = dim_source(maps[2], d) - r3;
  }
  return t;
}

bool SealedReport::sealed() const {
  return std::all_of(dims.begin(), dims.end(), [](const auto& e) { return e.second == 0; });
}

GradedMap sealed_cycle_map(const Poly& omega, const jacobian::GroebnerBasis<Rational>& gb) {
  const Weights& wt = omega.weights();
  const int a = wt.a(), b = wt.b(), c = wt.c(), n = *omega.degree();
  const PolyVec g = gradient(omega);
  const auto basis = gb.basis;
  return GradedMap(wt, {a - n, b - n, c - n}, {0, -n}, [g, basis](const std::vector<Poly>& v) {
    const PolyVec f = vec(v);
    return std::vector<Poly>{dot(f, g), jacobian::normal_form(div(f), basis)};
  });
}

SealedReport sealed_k1_dims(const Poly& omega, int max_degree, Execution ex) {
  const auto maps = koszul_maps(omega);
  const auto gb = jacobian::jacobian_basis(omega);
  const GradedMap sealed = sealed_cycle_map(omega, gb);
  std::vector<std::pair<const GradedMap*, int>> jobs;
  for (int d = 0; d <= max_degree; ++d) {
    jobs.emplace_back(&sealed, d);
    jobs.emplace_back(&maps[1], d);
  }
  const auto r = run_ranks(jobs, ex);
  SealedReport rep{max_degree, {}};
  for (int d = 0; d <= max_degree; ++d) {
    const std::size_t cycles = dim_source(sealed, d) - r[2 * static_cast<std::size_t>(d)];
    const std::size_t boundaries = r[2 * static_cast<std::size_t>(d) + 1];
    if (boundaries > cycles) throw std::logic_error("boundaries exceed sealed cycles at degree " + std::to_string(d));
    rep.dims[d] = cycles - boundaries;
  }
  return rep;
}

std::array<GradedMap, 3> derham_maps(const Weights& wt) {
  const int a = wt.a(), b = wt.b(), c = wt.c();
  const std::vector<int> o1{-a, -b, -c}, o2{-b - c, -a - c, -a - b}, o3{-a - b - c};
  return {GradedMap(wt, {0}, o1, [](const std::vector<Poly>& v) { return list(gradient(v[0])); }),
          GradedMap(wt, o1, o2, [](const std::vector<Poly>& v) { return list(curl(vec(v))); }),
          GradedMap(wt, o2, o3, [](const std::vector<Poly>& v) { return std::vector<Poly>{div(vec(v))}; })};
}

bool derham_exactness_check(const Weights& w, int max_degree, Execution ex) {
  const auto maps = derham_maps(w);
  std::vector<std::pair<const GradedMap*, int>> jobs;
  for (int d = 0; d <= max_degree; ++d) {
    for (const auto& m : maps) jobs.emplace_back(&m, d);
  }
  const auto r = run_ranks(jobs, ex);
  for (int d = 0; d <= max_degree; ++d) {
    const std::size_t base = static_cast<std::size_t>(d) * 3;
    const std::size_t r0 = r[base], r1 = r[base + 1], r2 = r[base + 2];
    const std::size_t h0 = dim_source(maps[0], d) - r0;
    const std::size_t h1 = dim_source(maps[1], d) - r1 - r0;
    const std::size_t h2 = dim_source(maps[2], d) - r2 - r1;
    const std::size_t h3 = maps[2].target(d).size() - r2;
    if (h0 != (d == 0 ? 1U : 0U) || h1 != 0 || h2 != 0 || h3 != 0) return false;
  }
  return true;
}

}  // namespace wpoisson::complexes
