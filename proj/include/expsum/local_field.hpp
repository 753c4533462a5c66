#pragma once

#include <vector>

#include "expsum/gf.hpp"

namespace expsum {

// A non-archimedean local field at desk scale. For the p-adic kind the
// engine's exp_sum/exp_sum_local apply directly (s = 1); the t-series kind
// is F_q((t)) with q = p^s, where the standard character is trivial on the
// valuation ring and reads the t^{-1} coefficient through psi_q.
struct LocalFieldSpec {
  enum class Kind { PAdic, TSeries };
  Kind kind = Kind::PAdic;
  std::uint64_t p = 2;
  unsigned s = 1;  // q = p^s; forced to 1 for the p-adic kind
  unsigned m = 2;  // valuation of the denominator: lambda = p^m resp. t^m

  std::uint64_t q() const {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < s; ++i) r *= p;
    return r;
  }

  void validate() const {
    if (m < 1) throw std::invalid_argument("LocalFieldSpec: m >= 1 required");
    if (kind == Kind::PAdic && s != 1)
      throw std::invalid_argument("LocalFieldSpec: p-adic kind has s = 1");
    if (s < 1 || s > 3) throw std::invalid_argument("LocalFieldSpec: s <= 3 only");
  }
};

namespace tseries_detail {

using Elem = GFTable::Elem;

// Truncated polynomial in t over F_q, coefficients [t^0 .. t^{m-1}].
using Trunc = std::vector<Elem>;

inline Trunc trunc_zero(const GFTable& gf, unsigned m) { return Trunc(m, gf.zero()); }

inline Trunc trunc_mul(const GFTable& gf, const Trunc& a, const Trunc& b) {
  unsigned m = static_cast<unsigned>(a.size());
  Trunc c = trunc_zero(gf, m);
  for (unsigned i = 0; i < m; ++i) {
    if (gf.is_zero(a[i])) continue;
    for (unsigned j = 0; i + j < m; ++j) {
      if (gf.is_zero(b[j])) continue;
      c[i + j] = gf.add(c[i + j], gf.mul(a[i], b[j]));
    }
  }
  return c;
}

inline Trunc trunc_pow(const GFTable& gf, Trunc base, std::uint32_t e, unsigned m) {
  Trunc r = trunc_zero(gf, m);
  r[0] = gf.one();
  while (e) {
    if (e & 1) r = trunc_mul(gf, r, base);
    if (e >>= 1) base = trunc_mul(gf, base, base);
  }
  return r;
}

// Coefficient of t^{m-1} in F(x) for x a tuple of truncated series.
inline Elem top_coefficient(const GFTable& gf, const GFPoly& F, const std::vector<Trunc>& x,
                            unsigned m) {
  Trunc acc = trunc_zero(gf, m);
  for (const auto& [e, c] : F.terms) {
    Trunc t = trunc_zero(gf, m);
    t[0] = c;
    for (int i = 0; i < F.nvars; ++i)
      if (e[i]) t = trunc_mul(gf, t, trunc_pow(gf, x[i], e[i], m));
    for (unsigned k = 0; k < m; ++k) acc[k] = gf.add(acc[k], t[k]);
  }
  return acc[m - 1];
}

}  // namespace tseries_detail

// S(F, F_q((t)), t^m) = q^{-mn} sum over x in (F_q[t]/t^m)^n of
// psi_q([t^{m-1}] F(x)). With restrict_to_y, the sum runs over x = y mod t
// (the local variant), still normalized by q^{-mn}.
inline ExpSumValue local_field_exp_sum(const Polynomial& F, const LocalFieldSpec& spec,
                                       const std::vector<std::uint64_t>* restrict_to_y = nullptr,
                                       std::uint64_t cap = kDefaultEnumerationCap) {
  spec.validate();
  if (spec.kind != LocalFieldSpec::Kind::TSeries)
    throw std::invalid_argument("local_field_exp_sum: t-series kind expected; use exp_sum for Q_p");
  const GFTable& gf = gf_table(spec.p, spec.s);
  const std::uint64_t q = spec.q();
  const unsigned n = static_cast<unsigned>(F.nvars());
  const unsigned m = spec.m;
  if (restrict_to_y && m < 2)
    throw std::invalid_argument("local_field_exp_sum: local variant needs m >= 2");
  const unsigned free_slots = restrict_to_y ? n * (m - 1) : n * m;
  require_budget(pow_u64_saturating(q, free_slots), cap);

  GFPoly FF = GFPoly::from(F, gf);
  std::vector<tseries_detail::Trunc> x(n, tseries_detail::trunc_zero(gf, m));
  if (restrict_to_y) {
    if (restrict_to_y->size() != n)
      throw std::invalid_argument("local_field_exp_sum: y dimension mismatch");
    for (unsigned i = 0; i < n; ++i) x[i][0] = gf.embed((*restrict_to_y)[i]);
  }

  std::vector<std::uint64_t> hist(gf.p(), 0);
  const unsigned lo = restrict_to_y ? 1u : 0u;  // coefficient slots being enumerated
  std::vector<std::uint64_t> odo(free_slots, 0);
  for (;;) {
    for (unsigned i = 0; i < n; ++i)
      for (unsigned k = lo; k < m; ++k)
        x[i][k] = static_cast<GFTable::Elem>(odo[i * (m - lo) + (k - lo)]);
    ++hist[gf.trace(tseries_detail::top_coefficient(gf, FF, x, m))];
    unsigned i = 0;
    while (i < free_slots && ++odo[i] == q) odo[i++] = 0;
    if (i == free_slots) break;
  }
  double norm = std::pow(static_cast<double>(q), -static_cast<double>(m) * n);
  return detail::pair_roots_of_unity(hist, gf.p(), norm);
}

}  // namespace expsum
