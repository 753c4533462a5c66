#pragma once

#include <optional>
#include <string>

#include "expsum/expsums.hpp"
#include "expsum/gf.hpp"
#include "expsum/lct.hpp"

namespace expsum {

// The two identities behind the m = r+1 and m = r+2 windows. Both compare an
// enumerated local sum against a closed-form reduction; the leading phase
// b_y has modulus one, so moduli are compared and b_y never needs a value.

struct ReductionReport {
  bool applicable = false;
  std::string note;
  std::vector<Int> base_point;  // y' used
  unsigned r = 0;               // vanishing order at y'
  unsigned m = 0;               // r + 1
  double lhs = 0.0;             // |S_y(F, p, m)|
  double rhs = 0.0;             // p^{-2n} |char sum of the lowest form mod p|
  double difference = 0.0;
  bool pass = false;
};

// Picks an integer critical point y' = y mod p realizing the filtered minimal
// lct and order (the search is bounded; absence is "inapplicable", never a
// failure).
inline std::optional<std::pair<std::vector<Int>, unsigned>> reduction_base_point(
    const Polynomial& F, const std::vector<long long>& y, std::uint64_t p,
    const CriticalPointSet& pts) {
  std::vector<Int> yi(y.begin(), y.end());
  LocalExponents le = compute_local_exponents(F, yi, p, pts);
  if (!le.r) return std::nullopt;
  return std::make_pair(le.witness, *le.r);
}

// |S_y(F, p, r+1)| = p^{-2n} |sum over F_p^n of psi_p(lowest form of F at y')|.
inline ReductionReport reduction_identity(const Polynomial& F, std::uint64_t p,
                                          const std::vector<long long>& y,
                                          const CriticalPointSet& pts,
                                          std::uint64_t cap = kDefaultEnumerationCap,
                                          double tolerance = 1e-9) {
  ReductionReport rep;
  auto base = reduction_base_point(F, y, p, pts);
  if (!base) {
    rep.note = "inapplicable: no integer critical point found in the coset";
    return rep;
  }
  rep.applicable = true;
  rep.base_point = base->first;
  rep.r = base->second;
  rep.m = rep.r + 1;
  const unsigned n = static_cast<unsigned>(F.nvars());

  rep.lhs = exp_sum_local(F, p, rep.m, y, cap).modulus;

  Polynomial fy = F.taylor_shift(rep.base_point);
  Polynomial lowest = fy.homogeneous_part(rep.r);
  double char_mod = finite_field_character_sum(lowest, p, cap).modulus;
  rep.rhs = char_mod * std::pow(static_cast<double>(p), -2.0 * n);
  rep.difference = std::abs(rep.lhs - rep.rhs);
  rep.pass = rep.difference <= tolerance;
  return rep;
}

// m = r+2: the coset integral splits over residues u mod p according to
// whether grad(lowest form) vanishes at u. The part away from that locus
// (I_2) dies by one Hensel step; the rest (I_1) carries the sum.
struct SplitReport {
  bool applicable = false;
  std::string note;
  std::vector<Int> base_point;
  unsigned r = 0;
  unsigned m = 0;  // r + 2
  double i1_modulus = 0.0;
  double i2_modulus = 0.0;          // asserted ~ 0
  double lhs = 0.0;                 // |S_y(F, p, r+2)|
  double rhs = 0.0;                 // p^{-n} |I_1|
  double difference = 0.0;
  bool i2_vanishes = false;
  bool pass = false;
  std::uint64_t scheme_points = 0;  // #X(F_p), X = zeros of grad(lowest form)
};

inline SplitReport split_I1_I2(const Polynomial& F, std::uint64_t p,
                               const std::vector<long long>& y, const CriticalPointSet& pts,
                               std::uint64_t cap = kDefaultEnumerationCap,
                               double tolerance = 1e-10) {
  SplitReport rep;
  auto base = reduction_base_point(F, y, p, pts);
  if (!base) {
    rep.note = "inapplicable: no integer critical point found in the coset";
    return rep;
  }
  rep.applicable = true;
  rep.base_point = base->first;
  rep.r = base->second;
  rep.m = rep.r + 2;
  const unsigned n = static_cast<unsigned>(F.nvars());
  const std::uint64_t p2 = p * p;
  require_budget(pow_u64_saturating(p2, n), cap);

  rep.lhs = exp_sum_local(F, p, rep.m, y, cap).modulus;

  Polynomial fy = F.taylor_shift(rep.base_point);
  Polynomial fr = fy.homogeneous_part(rep.r);
  Polynomial fr1 = fy.homogeneous_part(rep.r + 1);
  // Integrand on u mod p^2: (f_r(u) + p f_{r+1}(u)) / p^2.
  Polynomial integrand = fr + Polynomial::constant(F.nvars(), Int(p)) * fr1;
  ModPoly integrand_mod = ModPoly::from(integrand, p2);

  // X(F_p): zeros of grad f_r mod p.
  auto X = critical_residues(fr, p);
  rep.scheme_points = X.size();
  std::vector<bool> in_X(pow_u64_saturating(p, n), false);
  for (const auto& v : X) {
    std::uint64_t idx = 0;
    for (unsigned i = n; i-- > 0;) idx = idx * p + v[i];
    in_X[idx] = true;
  }

  std::complex<double> I1 = 0.0, I2 = 0.0;
  std::vector<std::uint64_t> u(n, 0);
  const double tau = 2.0 * std::numbers::pi;
  const double inv = 1.0 / std::pow(static_cast<double>(p), 2.0 * n);
  for (;;) {
    std::uint64_t val = integrand_mod.eval(u);
    double ang = tau * static_cast<double>(val) / static_cast<double>(p2);
    std::uint64_t idx = 0;
    for (unsigned i = n; i-- > 0;) idx = idx * p + (u[i] % p);
    std::complex<double> term(std::cos(ang), std::sin(ang));
    if (in_X[idx]) I1 += term; else I2 += term;
    unsigned i = 0;
    while (i < n && ++u[i] == p2) u[i++] = 0;
    if (i == n) break;
  }
  I1 *= inv;
  I2 *= inv;
  rep.i1_modulus = std::abs(I1);
  rep.i2_modulus = std::abs(I2);
  rep.i2_vanishes = rep.i2_modulus <= tolerance;
  rep.rhs = rep.i1_modulus / std::pow(static_cast<double>(p), static_cast<double>(n));
  rep.difference = std::abs(rep.lhs - rep.rhs);
  rep.pass = rep.i2_vanishes && rep.difference <= 10 * tolerance + 1e-12;
  return rep;
}

}  // namespace expsum
