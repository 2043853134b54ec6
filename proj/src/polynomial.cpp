#include "wpoisson/polynomial.hpp"

#include <algorithm>

namespace wpoisson {

Weights::Weights(int a, int b, int c) : w_{a, b, c} {
  if (a < 1 || b < 1 || c < 1) throw DomainError("weights must be positive");
  if (std::gcd(std::gcd(a, b), c) != 1) throw DomainError("weights must have gcd 1");
}

std::string Weights::to_string() const {
  return std::to_string(w_[0]) + "," + std::to_string(w_[1]) + "," + std::to_string(w_[2]);
}

std::vector<Monomial> monomial_basis(const Weights& w, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  for (int k = 0; k * w.c() <= d; ++k) {
    const int r1 = d - k * w.c();
    for (int j = 0; j * w.b() <= r1; ++j) {
      const int r2 = r1 - j * w.b();
      if (r2 % w.a() == 0) out.emplace_back(r2 / w.a(), j, k);
    }
  }
  std::sort(out.begin(), out.end(), MonomialOrder(w));
  return out;
}

std::size_t count_monomials(const Weights& w, int d) {
  if (d < 0) return 0;
  std::size_t n = 0;
  for (int k = 0; k * w.c() <= d; ++k) {
    const int r1 = d - k * w.c();
    for (int j = 0; j * w.b() <= r1; ++j) n += (r1 - j * w.b()) % w.a() == 0;
  }
  return n;
}

}  // namespace wpoisson
