#include "qconv/types.hpp"

#include <algorithm>
#include <cmath>

namespace qconv {

double norm_squared(const Sequence& v) {
  double s = 0.0;
  for (const Complex& z : v) s += std::norm(z);
  return s;
}

double norm(const Sequence& v) { return std::sqrt(norm_squared(v)); }

Complex inner(const Sequence& x, const Sequence& y) {
  if (x.size() != y.size()) {
    throw InvalidInput("inner: size mismatch");
  }
  Complex s{};
  for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
  return s;
}

double max_abs_diff(const Sequence& x, const Sequence& y) {
  if (x.size() != y.size()) {
    throw InvalidInput("max_abs_diff: size mismatch");
  }
  double m = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    m = std::max(m, std::abs(x[i] - y[i]));
  }
  return m;
}

bool all_finite(const Sequence& v) {
  for (const Complex& z : v) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

int log2_exact(std::size_t n) {
  if (!is_power_of_two(n)) {
    throw InvalidInput("log2_exact: not a power of two");
  }
  int k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

Sequence kron(const Sequence& x, const Sequence& y) {
  Sequence out(x.size() * y.size());
  std::size_t idx = 0;
  for (const Complex& a : x) {
    for (const Complex& b : y) out[idx++] = a * b;
  }
  return out;
}

}  // namespace qconv
