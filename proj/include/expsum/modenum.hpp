#pragma once

#include <cstdint>
#include <thread>
#include <utility>
#include <vector>

#include "expsum/common.hpp"
#include "expsum/polynomial.hpp"

namespace expsum {

// Polynomial with coefficients reduced into Z/M, M = p^m. Evaluation points
// and values are machine words; M stays at desk scale (<= enumeration cap).
struct ModPoly {
  int nvars = 1;
  std::uint64_t modulus = 2;
  std::vector<std::pair<Monomial, std::uint64_t>> terms;

  static ModPoly from(const Polynomial& f, std::uint64_t M) {
    ModPoly r;
    r.nvars = f.nvars();
    r.modulus = M;
    for (const auto& [e, c] : f.terms()) {
      std::uint64_t cc = mod_reduce(c, M);
      if (cc) r.terms.emplace_back(e, cc);
    }
    return r;
  }

  std::uint64_t eval(const std::vector<std::uint64_t>& x) const {
    std::uint64_t acc = 0;
    for (const auto& [e, c] : terms) {
      std::uint64_t t = c;
      for (int i = 0; i < nvars; ++i)
        if (e[i]) t = mulmod_u64(t, powmod_u64(x[i] % modulus, e[i], modulus), modulus);
      acc = (acc + t) % modulus;
    }
    return acc;
  }

  int degree_in(int var) const {
    int d = 0;
    for (const auto& [e, c] : terms) d = std::max(d, static_cast<int>(e[var]));
    return d;
  }
};

namespace detail {

// Sweep a dense univariate polynomial over t = lo..hi-1 mod M with a forward
// difference table: after init, each step is deg adds and conditional
// subtracts, no multiplication.
class DiffSweep {
 public:
  DiffSweep(const std::vector<std::uint64_t>& coeffs, std::uint64_t M, std::uint64_t lo)
      : M_(M), table_(coeffs.size()) {
    const std::size_t d = coeffs.size() - 1;
    // Values at lo, lo+1, ..., lo+d.
    for (std::size_t i = 0; i <= d; ++i) {
      std::uint64_t t = (lo + i) % M;
      std::uint64_t v = 0;
      for (std::size_t k = coeffs.size(); k-- > 0;) v = (mulmod_u64(v, t, M) + coeffs[k]) % M;
      table_[i] = v;
    }
    // In-place forward differences.
    for (std::size_t j = 1; j <= d; ++j)
      for (std::size_t k = d; k >= j; --k)
        table_[k] = sub(table_[k], table_[k - 1]);
  }

  std::uint64_t value() const { return table_[0]; }

  void advance() {
    for (std::size_t j = 0; j + 1 < table_.size(); ++j)
      table_[j] = add(table_[j], table_[j + 1]);
  }

 private:
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= M_ ? s - M_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + M_ - b; }

  std::uint64_t M_;
  std::vector<std::uint64_t> table_;
};

// One worker's share: x_0 in [lo, hi), all remaining variables in [0, D).
// Values are reduced mod f.modulus; the domain bound D may differ (local sums
// enumerate u mod p^{m-1} while values live mod p^m).
inline void histogram_chunk(const ModPoly& f, std::uint64_t lo, std::uint64_t hi, std::uint64_t D,
                            std::vector<std::uint64_t>& counts) {
  const std::uint64_t M = f.modulus;
  const int n = f.nvars;
  const int inner = n - 1;
  const int d = f.degree_in(inner);

  // Univariate view in the innermost variable: for each inner exponent, the
  // terms of its coefficient polynomial in the outer variables.
  std::vector<std::vector<std::pair<Monomial, std::uint64_t>>> coeff_terms(d + 1);
  for (const auto& [e, c] : f.terms) coeff_terms[e[inner]].emplace_back(e, c);

  // Power tables for the outer variables.
  std::vector<std::vector<std::vector<std::uint64_t>>> pow(n);
  for (int i = 0; i + 1 < n; ++i) {
    int di = f.degree_in(i);
    pow[i].assign(di + 1, {});
    for (int e = 0; e <= di; ++e) {
      pow[i][e].resize(D);
      for (std::uint64_t v = 0; v < D; ++v)
        pow[i][e][v] = e == 0 ? 1 % M : mulmod_u64(pow[i][e - 1][v], v % M, M);
    }
  }

  std::vector<std::uint64_t> outer(std::max(0, n - 1), 0);
  if (n >= 2) outer[0] = lo;
  std::vector<std::uint64_t> ucoeffs(d + 1);

  for (;;) {
    // Specialize the univariate coefficients at the current outer point.
    for (int e = 0; e <= d; ++e) {
      std::uint64_t acc = 0;
      for (const auto& [mono, c] : coeff_terms[e]) {
        std::uint64_t t = c;
        for (int i = 0; i + 1 < n; ++i)
          if (mono[i]) t = mulmod_u64(t, pow[i][mono[i]][outer[i]], M);
        acc += t;
        if (acc >= M) acc -= M;
      }
      ucoeffs[e] = acc;
    }

    if (n == 1) {
      DiffSweep sweep(ucoeffs, M, lo);
      for (std::uint64_t t = lo; t < hi; ++t) {
        ++counts[sweep.value()];
        sweep.advance();
      }
      return;
    }

    DiffSweep sweep(ucoeffs, M, 0);
    for (std::uint64_t t = 0; t < D; ++t) {
      ++counts[sweep.value()];
      sweep.advance();
    }

    // Odometer over the outer variables; x_0 is bounded by the chunk.
    int pos = n - 2;
    while (pos >= 0) {
      ++outer[pos];
      std::uint64_t bound = (pos == 0) ? hi : D;
      if (outer[pos] < bound) break;
      outer[pos] = (pos == 0) ? hi : 0;
      --pos;
    }
    if (pos < 0) return;
  }
}

}  // namespace detail

// counts[a] = #{x in [0,D)^n : f(x) = a mod M}, exact; D defaults to M. Work
// is split over the outermost variable's residue range; partial histograms
// merge by addition, so the result is deterministic.
inline std::vector<std::uint64_t> value_histogram(const ModPoly& f, unsigned threads = 0,
                                                  std::uint64_t domain = 0) {
  const std::uint64_t M = f.modulus;
  const std::uint64_t D = domain ? domain : M;
  if (threads == 0) threads = worker_count();
  // Per-worker histograms cost 8*M bytes each; stay well under memory.
  while (threads > 1 && threads * M * 8ull > (1ull << 31)) --threads;
  std::uint64_t chunk = D / threads;
  if (chunk == 0) { threads = 1; chunk = D; }

  std::vector<std::vector<std::uint64_t>> parts(threads);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    std::uint64_t lo = w * chunk;
    std::uint64_t hi = (w + 1 == threads) ? D : lo + chunk;
    parts[w].assign(M, 0);
    pool.emplace_back([&, w, lo, hi] { detail::histogram_chunk(f, lo, hi, D, parts[w]); });
  }
  for (auto& t : pool) t.join();

  std::vector<std::uint64_t> counts = std::move(parts[0]);
  for (unsigned w = 1; w < threads; ++w)
    for (std::uint64_t a = 0; a < M; ++a) counts[a] += parts[w][a];
  return counts;
}

}  // namespace expsum
