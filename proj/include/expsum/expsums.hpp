#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <memory>
#include <numbers>
#include <vector>

#include "expsum/fiber.hpp"

namespace expsum {

// A complex sum value. The fiber counts are exact; only the final pairing
// against roots of unity is floating point, and abs_error_bound accounts for
// it. normalization records the q^{-mn} factor already applied (1 when the
// sum is reported unnormalized).
struct ExpSumValue {
  double re = 0.0;
  double im = 0.0;
  double modulus = 0.0;
  double abs_error_bound = 0.0;
  double normalization = 1.0;
  std::shared_ptr<const FiberCounts> source;

  std::complex<double> value() const { return {re, im}; }
};

namespace detail {

// Pair an exact histogram with the modulus-M character a -> e(a/M).
// Kahan-compensated; the error bound follows the stated convention of
// 2 * eps * (number of summands) * (normalized mass).
inline ExpSumValue pair_roots_of_unity(const std::vector<std::uint64_t>& counts, std::uint64_t M,
                                       double normalization) {
  double re = 0.0, im = 0.0, cre = 0.0, cim = 0.0;
  double mass = 0.0;
  const double tau = 2.0 * std::numbers::pi;
  for (std::uint64_t a = 0; a < M; ++a) {
    if (!counts[a]) continue;
    const double w = static_cast<double>(counts[a]) * normalization;
    const double ang = tau * (static_cast<double>(a) / static_cast<double>(M));
    double t, y;
    y = w * std::cos(ang) - cre; t = re + y; cre = (t - re) - y; re = t;
    y = w * std::sin(ang) - cim; t = im + y; cim = (t - im) - y; im = t;
    mass += std::abs(w);
  }
  ExpSumValue v;
  v.re = re;
  v.im = im;
  v.modulus = std::hypot(re, im);
  v.normalization = normalization;
  v.abs_error_bound = 2.0 * std::numeric_limits<double>::epsilon() * static_cast<double>(M) * std::max(mass, 1.0);
  return v;
}

inline std::vector<Int> to_int_vec(const std::vector<long long>& y) {
  return std::vector<Int>(y.begin(), y.end());
}

}  // namespace detail

// S(F,p,m) = p^{-mn} sum_{x in (Z/p^m)^n} e(F(x)/p^m).
inline ExpSumValue exp_sum(const Polynomial& F, std::uint64_t p, unsigned m,
                           std::uint64_t cap = kDefaultEnumerationCap, unsigned threads = 0) {
  auto fc = std::make_shared<FiberCounts>(fiber_counts(F, p, m, cap, threads));
  const double norm = std::pow(static_cast<double>(p), -static_cast<double>(m) * F.nvars());
  ExpSumValue v = detail::pair_roots_of_unity(fc->counts, fc->modulus(), norm);
  v.source = fc;
  return v;
}

// S_y(F,p,m) = p^{-mn} sum_{x = y mod p} e(F(x)/p^m), enumerated over
// u in (Z/p^{m-1})^n with x = y + p u. Depends on y only through y mod p.
inline ExpSumValue exp_sum_local(const Polynomial& F, std::uint64_t p, unsigned m,
                                 const std::vector<long long>& y,
                                 std::uint64_t cap = kDefaultEnumerationCap, unsigned threads = 0) {
  if (!is_prime_u64(p)) throw std::invalid_argument("exp_sum_local: p must be prime");
  if (m < 2) throw std::invalid_argument("exp_sum_local: m must be >= 2");
  const unsigned n = static_cast<unsigned>(F.nvars());
  if (y.size() != n) throw std::invalid_argument("exp_sum_local: y dimension mismatch");
  require_budget(pow_u64_saturating(p, (m - 1) * n), cap);

  std::vector<Int> y0(n);
  for (unsigned i = 0; i < n; ++i) {
    long long r = y[i] % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    y0[i] = r;
  }
  const std::uint64_t M = pow_u64_saturating(p, m);
  const std::uint64_t D = pow_u64_saturating(p, m - 1);
  // G(u) = F(y + p u); well defined mod p^m for u mod p^{m-1}.
  Polynomial G = F.compose_shift(y0).scale_vars(Int(p));
  auto counts = value_histogram(ModPoly::from(G, M), threads, D);
  const double norm = std::pow(static_cast<double>(p), -static_cast<double>(m) * n);
  return detail::pair_roots_of_unity(counts, M, norm);
}

// Consistency of the two sum definitions: sum over y mod p of S_y equals S.
struct PartitionCheck {
  bool pass = false;
  double residual = 0.0;
  ExpSumValue full;
  std::complex<double> coset_total;
};

inline PartitionCheck partition_check(const Polynomial& F, std::uint64_t p, unsigned m,
                                      std::uint64_t cap = kDefaultEnumerationCap,
                                      unsigned threads = 0, double tolerance = 1e-9) {
  const unsigned n = static_cast<unsigned>(F.nvars());
  require_budget(pow_u64_saturating(p, m * n), cap);
  PartitionCheck out;
  out.full = exp_sum(F, p, m, cap, threads);
  std::complex<double> acc = 0.0;
  std::vector<long long> y(n, 0);
  for (;;) {
    acc += exp_sum_local(F, p, m, y, cap, threads).value();
    unsigned i = 0;
    while (i < n && ++y[i] == static_cast<long long>(p)) y[i++] = 0;
    if (i == n) break;
  }
  out.coset_total = acc;
  out.residual = std::abs(acc - out.full.value());
  out.pass = out.residual <= tolerance;
  return out;
}

// Residues v in F_p^n where every component of grad F vanishes mod p.
inline std::vector<std::vector<std::uint64_t>> critical_residues(const Polynomial& F, std::uint64_t p) {
  const unsigned n = static_cast<unsigned>(F.nvars());
  std::vector<ModPoly> grad;
  for (const auto& g : F.gradient()) grad.push_back(ModPoly::from(g, p));
  std::vector<std::vector<std::uint64_t>> V;
  std::vector<std::uint64_t> v(n, 0);
  for (;;) {
    bool crit = true;
    for (const auto& g : grad)
      if (g.eval(v) != 0) { crit = false; break; }
    if (crit) V.push_back(v);
    unsigned i = 0;
    while (i < n && ++v[i] == p) v[i++] = 0;
    if (i == n) break;
  }
  return V;
}

// Decomposition of S over the critical residues of F mod p: local sums over
// cosets through V(F_p) must reassemble the full sum (their complement
// vanishes by character orthogonality once m >= 2). check_noncritical also
// enumerates the complementary cosets and records the largest modulus seen.
struct CriticalDecomposition {
  std::vector<std::pair<std::vector<std::uint64_t>, ExpSumValue>> local;
  ExpSumValue full;
  std::complex<double> critical_total;
  double residual = 0.0;
  bool pass = false;
  double max_noncritical_modulus = 0.0;
};

inline CriticalDecomposition critical_decomposition(const Polynomial& F, std::uint64_t p, unsigned m,
                                                    std::uint64_t cap = kDefaultEnumerationCap,
                                                    unsigned threads = 0, bool check_noncritical = true,
                                                    double tolerance = 1e-9) {
  if (m < 2) throw std::invalid_argument("critical_decomposition: m must be >= 2");
  const unsigned n = static_cast<unsigned>(F.nvars());
  CriticalDecomposition out;
  out.full = exp_sum(F, p, m, cap, threads);
  auto V = critical_residues(F, p);
  std::complex<double> acc = 0.0;
  for (const auto& v : V) {
    std::vector<long long> y(v.begin(), v.end());
    ExpSumValue s = exp_sum_local(F, p, m, y, cap, threads);
    acc += s.value();
    out.local.emplace_back(v, s);
  }
  out.critical_total = acc;
  out.residual = std::abs(acc - out.full.value());
  out.pass = out.residual <= tolerance;
  if (check_noncritical) {
    std::vector<std::uint64_t> v(n, 0);
    std::size_t vi = 0;
    for (;;) {
      bool crit = vi < V.size() && V[vi] == v;
      if (crit) {
        ++vi;
      } else {
        std::vector<long long> y(v.begin(), v.end());
        double mod = exp_sum_local(F, p, m, y, cap, threads).modulus;
        out.max_noncritical_modulus = std::max(out.max_noncritical_modulus, mod);
      }
      unsigned i = 0;
      while (i < n && ++v[i] == p) v[i++] = 0;
      if (i == n) break;
    }
  }
  return out;
}

}  // namespace expsum
