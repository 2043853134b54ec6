#include "wpoisson/hilbert.hpp"

#include <algorithm>
#include <sstream>

namespace wpoisson::hilbert {

LaurentPoly LaurentPoly::monomial(int d, const Integer& c) {
  LaurentPoly p;
  p.add(d, c);
  return p;
}

LaurentPoly LaurentPoly::one_minus(int e) {
  LaurentPoly p;
  p.add(0, 1);
  p.add(e, -1);
  return p;
}

void LaurentPoly::add(int d, const Integer& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = c_.try_emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) c_.erase(it);
  }
}

Integer LaurentPoly::at(int d) const {
  auto it = c_.find(d);
  return it == c_.end() ? Integer(0) : it->second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [d, c] : o.c_) add(d, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [d, c] : o.c_) add(d, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly r;
  for (const auto& [dp, cp] : p.c_) {
    for (const auto& [dq, cq] : q.c_) r.add(dp + dq, cp * cq);
  }
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [d, c] : r.c_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [d, c] : c_) r.c_.emplace(d + k, c);
  return r;
}

bool LaurentPoly::divide_one_minus(int e, LaurentPoly& quotient) const {
  // p = (1 - t^e) q  <=>  q_d = p_d + q_{d-e}, sweeping upward.
  quotient = LaurentPoly();
  if (c_.empty()) return true;
  const int lo = min_degree(), hi = max_degree();
  if (hi - lo < e) return false;
  std::vector<Integer> q(static_cast<std::size_t>(hi - lo - e + 1));
  for (int d = lo; d <= hi - e; ++d) {
    Integer v = at(d);
    if (d - e >= lo) v += q[static_cast<std::size_t>(d - e - lo)];
    q[static_cast<std::size_t>(d - lo)] = v;
  }
  // The top e coefficients must satisfy p_d = -q_{d-e}.
  for (int d = hi - e + 1; d <= hi; ++d) {
    const Integer expect = d - e >= lo ? Integer(-q[static_cast<std::size_t>(d - e - lo)]) : Integer(0);
    if (at(d) != expect) return false;
  }
  for (std::size_t i = 0; i < q.size(); ++i) quotient.add(lo + static_cast<int>(i), q[i]);
  return true;
}

int LaurentPoly::order_at_one() const {
  if (c_.empty()) return -1;
  // Divide by (1 - t) while the coefficient sum vanishes.
  int order = 0;
  LaurentPoly cur = *this;
  while (true) {
    Integer s = 0;
    for (const auto& [d, c] : cur.c_) s += c;
    if (sgn(s) != 0) return order;
    LaurentPoly q;
    cur.divide_one_minus(1, q);
    cur = std::move(q);
    ++order;
  }
}

std::string LaurentPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : c_) {
    Integer mag = abs(c);
    if (sgn(c) < 0) os << (first ? "-" : " - ");
    else if (!first) os << " + ";
    first = false;
    if (d == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "t";
    if (d != 1) os << "^" << d;
  }
  return os.str();
}

HilbertSeries::HilbertSeries(LaurentPoly numerator, std::vector<int> denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  for (int e : den_) {
    if (e <= 0) throw DomainError("denominator factors need positive exponents");
  }
  canonicalize();
}

void HilbertSeries::canonicalize() {
  std::sort(den_.begin(), den_.end());
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  // Cancel any factor that divides the numerator.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < den_.size(); ++i) {
      LaurentPoly q;
      if (num_.divide_one_minus(den_[i], q)) {
        num_ = std::move(q);
        den_.erase(den_.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
}

std::vector<Integer> HilbertSeries::expand(int d_min, int d_max) const {
  if (d_min > d_max) throw DomainError("empty expansion window");
  std::vector<Integer> out(static_cast<std::size_t>(d_max - d_min + 1));
  if (num_.is_zero()) return out;
  const int lo = std::min(num_.min_degree(), d_min);
  std::vector<Integer> s(static_cast<std::size_t>(d_max - lo + 1));
  for (const auto& [d, c] : num_.coeffs()) {
    if (d <= d_max) s[static_cast<std::size_t>(d - lo)] = c;
  }
  for (int e : den_) {
    for (std::size_t i = static_cast<std::size_t>(e); i < s.size(); ++i) s[i] += s[i - e];
  }
  for (int d = d_min; d <= d_max; ++d) {
    out[static_cast<std::size_t>(d - d_min)] = s[static_cast<std::size_t>(d - lo)];
  }
  return out;
}

int HilbertSeries::pole_order_at_one() const {
  if (num_.is_zero()) return 0;
  return std::max(0, static_cast<int>(den_.size()) - num_.order_at_one());
}

HilbertSeries HilbertSeries::shifted(int k) const { return HilbertSeries(num_.shifted(k), den_); }

namespace {

// Multiset union and the factors each side is missing.
std::vector<int> common_den(const std::vector<int>& p, const std::vector<int>& q,
                            std::vector<int>& p_missing, std::vector<int>& q_missing) {
  std::map<int, int> mp, mq;
  for (int e : p) ++mp[e];
  for (int e : q) ++mq[e];
  std::vector<int> all;
  std::map<int, int> keys = mp;
  for (auto [e, k] : mq) keys[e] = std::max(keys[e], k);
  for (auto [e, k] : keys) {
    for (int i = 0; i < k; ++i) all.push_back(e);
    for (int i = mp[e]; i < k; ++i) p_missing.push_back(e);
    for (int i = mq[e]; i < k; ++i) q_missing.push_back(e);
  }
  return all;
}

LaurentPoly times_factors(LaurentPoly p, const std::vector<int>& factors) {
  for (int e : factors) p = p * LaurentPoly::one_minus(e);
  return p;
}

}  // namespace

HilbertSeries operator+(const HilbertSeries& p, const HilbertSeries& q) {
  std::vector<int> pm, qm;
  auto den = common_den(p.den_, q.den_, pm, qm);
  return HilbertSeries(times_factors(p.num_, pm) + times_factors(q.num_, qm), den);
}

HilbertSeries operator-(const HilbertSeries& p, const HilbertSeries& q) {
  std::vector<int> pm, qm;
  auto den = common_den(p.den_, q.den_, pm, qm);
  return HilbertSeries(times_factors(p.num_, pm) - times_factors(q.num_, qm), den);
}

HilbertSeries operator*(const HilbertSeries& p, const HilbertSeries& q) {
  std::vector<int> den = p.den_;
  den.insert(den.end(), q.den_.begin(), q.den_.end());
  return HilbertSeries(p.num_ * q.num_, den);
}

std::string HilbertSeries::to_string() const {
  std::string s = "(" + num_.to_string() + ")";
  if (den_.empty()) return s;
  s += " / (";
  for (std::size_t i = 0; i < den_.size(); ++i) {
    if (i) s += "*";
    s += den_[i] == 1 ? "(1-t)" : "(1-t^" + std::to_string(den_[i]) + ")";
  }
  return s + ")";
}

bool series_equal(const HilbertSeries& p, const HilbertSeries& q) {
  std::vector<int> pm, qm;
  common_den(p.denominator(), q.denominator(), pm, qm);
  return times_factors(p.numerator(), pm) == times_factors(q.numerator(), qm);
}

HilbertSeries ring_series(const Weights& w) {
  return HilbertSeries(LaurentPoly::monomial(0), {w.a(), w.b(), w.c()});
}

HilbertSeries closed_form_ph(const Weights& w, int i) {
  const int a = w.a(), b = w.b(), c = w.c(), n = a + b + c;
  const std::vector<int> den{n, a, b, c};
  const LaurentPoly top = LaurentPoly::one_minus(a + b) * LaurentPoly::one_minus(a + c) *
                          LaurentPoly::one_minus(b + c);
  const LaurentPoly bottom = LaurentPoly::one_minus(n) * LaurentPoly::one_minus(a) *
                             LaurentPoly::one_minus(b) * LaurentPoly::one_minus(c);
  switch (i) {
    case 0:
    case 1:
      return HilbertSeries(LaurentPoly::monomial(0), {n});
    case 2:
      return HilbertSeries((top - bottom).shifted(-n), den);
    case 3:
      return HilbertSeries(top.shifted(-n), den);
    default:
      throw DomainError("cohomology index must be 0..3");
  }
}

HilbertSeries closed_form_lph2(const Weights& w, int n) {
  const int a = w.a(), b = w.b(), c = w.c();
  if (n <= w.max()) throw DomainError("potential degree must exceed every weight");
  const LaurentPoly top = LaurentPoly::one_minus(n - a) * LaurentPoly::one_minus(n - b) *
                          LaurentPoly::one_minus(n - c);
  const LaurentPoly bottom = LaurentPoly::one_minus(n) * LaurentPoly::one_minus(a) *
                             LaurentPoly::one_minus(b) * LaurentPoly::one_minus(c);
  return HilbertSeries((top - bottom).shifted(-(a + b + c)), {n, a, b, c});
}

HilbertSeries closed_form_koszul_h1(int a_prime, int b_prime) {
  if (a_prime < 3 || b_prime < 3) throw DomainError("both exponents must be at least 3");
  const int c_prime = a_prime * b_prime - a_prime - b_prime;
  return HilbertSeries(LaurentPoly::monomial(c_prime + a_prime * b_prime), {c_prime});
}

HilbertSeries euler_characteristic_series(const Weights& w, int n) {
  const int a = w.a(), b = w.b(), c = w.c(), wt = n - a - b - c;
  LaurentPoly num = LaurentPoly::one_minus(wt + a) * LaurentPoly::one_minus(wt + b) *
                    LaurentPoly::one_minus(wt + c);
  num = (-num).shifted(-(3 * wt + a + b + c));
  return HilbertSeries(num, {a, b, c});
}

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      redundant = j != i && gens[j].divides(gens[i]) && !(gens[j] == gens[i]);
    }
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

// Numerator K with h_{A/I} = K / prod(1-t^weight).
LaurentPoly quotient_numerator(const Weights& w, std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return LaurentPoly::monomial(0);
  for (const auto& g : gens) {
    if (g.is_one()) return LaurentPoly();
  }
  bool pure = true;
  for (const auto& g : gens) {
    int support = (g.e[0] > 0) + (g.e[1] > 0) + (g.e[2] > 0);
    pure = pure && support == 1;
  }
  if (pure) {
    LaurentPoly r = LaurentPoly::monomial(0);
    for (const auto& g : gens) r = r * LaurentPoly::one_minus(g.degree(w));
    return r;
  }
  // Split off a generator that is not a pure power.
  std::size_t pick = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    int support = (gens[i].e[0] > 0) + (gens[i].e[1] > 0) + (gens[i].e[2] > 0);
    if (support > 1) {
      pick = i;
      break;
    }
  }
  const Monomial m = gens[pick];
  std::vector<Monomial> rest;
  std::vector<Monomial> colon;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i == pick) continue;
    rest.push_back(gens[i]);
    const Monomial l = lcm(gens[i], m);
    colon.push_back(l / m);
  }
  return quotient_numerator(w, rest) -
         quotient_numerator(w, colon).shifted(m.degree(w));
}

}  // namespace

HilbertSeries monomial_quotient_series(const Weights& w, const std::vector<Monomial>& gens) {
  return HilbertSeries(quotient_numerator(w, gens), {w.a(), w.b(), w.c()});
}

}  // namespace wpoisson::hilbert
