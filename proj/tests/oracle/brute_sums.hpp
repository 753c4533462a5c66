#pragma once

// Independent brute-force oracles for the test suite. These deliberately
// avoid the library's histogram/difference-table machinery: direct big-integer
// evaluation, direct complex accumulation, no sharing of code paths with the
// implementation under test.

#include <complex>
#include <numbers>
#include <vector>

#include "expsum/polynomial.hpp"

namespace oracle {

using expsum::Int;
using expsum::Polynomial;

inline std::complex<double> root_of_unity(const Int& value, std::uint64_t M) {
  Int r = value % M;
  if (r < 0) r += M;
  double frac = r.convert_to<double>() / static_cast<double>(M);
  double ang = 2.0 * std::numbers::pi * frac;
  return {std::cos(ang), std::sin(ang)};
}

// Normalized S(F,p,m) by direct summation over (Z/p^m)^n.
inline std::complex<double> brute_exp_sum(const Polynomial& F, std::uint64_t p, unsigned m) {
  const int n = F.nvars();
  std::uint64_t M = 1;
  for (unsigned i = 0; i < m; ++i) M *= p;
  std::vector<Int> x(n, 0);
  std::complex<double> acc = 0.0;
  double total = 1.0;
  for (int i = 0; i < n; ++i) total *= static_cast<double>(M);
  for (;;) {
    acc += root_of_unity(F.eval(x), M);
    int i = 0;
    while (i < n && ++x[i] == M) x[i++] = 0;
    if (i == n) break;
  }
  return acc / total;
}

// Normalized S_y(F,p,m): direct summation over the coset x = y mod p.
inline std::complex<double> brute_exp_sum_local(const Polynomial& F, std::uint64_t p, unsigned m,
                                                const std::vector<long long>& y) {
  const int n = F.nvars();
  std::uint64_t M = 1;
  for (unsigned i = 0; i < m; ++i) M *= p;
  std::uint64_t D = M / p;
  std::vector<std::uint64_t> u(n, 0);
  std::complex<double> acc = 0.0;
  double total = 1.0;
  for (int i = 0; i < n; ++i) total *= static_cast<double>(M);
  for (;;) {
    std::vector<Int> x(n);
    for (int i = 0; i < n; ++i) x[i] = Int(y[i]) + Int(p) * u[i];
    acc += root_of_unity(F.eval(x), M);
    int i = 0;
    while (i < n && ++u[i] == D) u[i++] = 0;
    if (i == n) break;
  }
  return acc / total;
}

// Unnormalized additive character sum over F_q^n for q prime: the trace is
// the identity and psi(a) = e(a/q).
inline std::complex<double> brute_char_sum_prime(const Polynomial& h, std::uint64_t q) {
  const int n = h.nvars();
  std::vector<Int> x(n, 0);
  std::complex<double> acc = 0.0;
  for (;;) {
    acc += root_of_unity(h.eval(x), q);
    int i = 0;
    while (i < n && ++x[i] == q) x[i++] = 0;
    if (i == n) break;
  }
  return acc;
}

}  // namespace oracle
