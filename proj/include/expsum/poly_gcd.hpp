#pragma once

#include <optional>

#include "expsum/polynomial.hpp"

namespace expsum {

// Polynomial gcd and divisibility over Z (modulus = 0) or over the prime
// field F_p (modulus = p), via primitive pseudo-remainder sequences. All
// inputs are desk-scale, so the primitive PRS is fast enough.

namespace detail {

inline Int coeff_norm(const Int& c, std::uint64_t p) {
  if (p == 0) return c;
  Int r = c % p;
  if (r < 0) r += p;
  return r;
}

inline Polynomial reduce_coeffs(const Polynomial& f, std::uint64_t p) {
  if (p == 0) return f;
  Polynomial r(f.nvars());
  for (const auto& [e, c] : f.terms()) r.add_term(e, coeff_norm(c, p));
  return r;
}

inline Int integer_content(const Polynomial& f) {
  Int g = 0;
  for (const auto& [e, c] : f.terms()) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return g;  // 0 for the zero polynomial
}

// Inverse mod p for p prime.
inline Int inv_mod(const Int& a, std::uint64_t p) {
  return Int(powmod_u64(mod_reduce(a, p), p - 2, p));
}

inline bool is_constant(const Polynomial& f) { return f.is_zero() || f.total_degree() == 0; }

// View in one variable: coefficient of x_v^k, with the v-exponent zeroed.
inline Polynomial coeff_in_var(const Polynomial& f, int v, std::uint32_t k) {
  Polynomial r(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    if (e[v] != k) continue;
    Monomial m = e;
    m[v] = 0;
    r.add_term(std::move(m), c);
  }
  return r;
}

inline Polynomial mul_var_power(const Polynomial& f, int v, std::uint32_t k) {
  Polynomial r(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    Monomial m = e;
    m[v] += k;
    r.add_term(std::move(m), c);
  }
  return r;
}

}  // namespace detail

// Exact division: returns f / d when d divides f (coefficientwise exactly
// over Z, or over F_p), nullopt otherwise.
inline std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& d,
                                              std::uint64_t modulus = 0) {
  if (d.is_zero()) return std::nullopt;
  Polynomial rem = detail::reduce_coeffs(f, modulus);
  Polynomial div = detail::reduce_coeffs(d, modulus);
  if (div.is_zero()) return std::nullopt;
  Polynomial q(f.nvars());
  const auto& dl = *div.terms().begin();
  while (!rem.is_zero()) {
    const auto& rl = *rem.terms().begin();
    Monomial e(f.nvars());
    for (int i = 0; i < f.nvars(); ++i) {
      if (rl.first[i] < dl.first[i]) return std::nullopt;
      e[i] = rl.first[i] - dl.first[i];
    }
    Int c;
    if (modulus == 0) {
      if (rl.second % dl.second != 0) return std::nullopt;
      c = rl.second / dl.second;
    } else {
      c = detail::coeff_norm(rl.second * detail::inv_mod(dl.second, modulus), modulus);
    }
    Polynomial t = Polynomial::monomial(f.nvars(), e, c);
    q += t;
    rem -= t * div;
    rem = detail::reduce_coeffs(rem, modulus);
  }
  return q;
}

inline bool divides(const Polynomial& d, const Polynomial& f, std::uint64_t modulus = 0) {
  if (f.is_zero()) return true;
  if (d.is_zero()) return false;
  return exact_divide(f, d, modulus).has_value();
}

namespace detail {

// Sign/monic normalization so the gcd is canonical.
inline Polynomial normalize(const Polynomial& f, std::uint64_t p) {
  if (f.is_zero()) return f;
  if (p == 0) {
    if (f.terms().begin()->second < 0) return -f;
    return f;
  }
  Int lc = f.terms().begin()->second;
  Polynomial r(f.nvars());
  Int ic = inv_mod(lc, p);
  for (const auto& [e, c] : f.terms()) r.add_term(e, coeff_norm(c * ic, p));
  return r;
}

inline Polynomial prem(const Polynomial& f, const Polynomial& g, int v, std::uint64_t p) {
  Polynomial r = f;
  int dg = g.degree_in(v);
  Polynomial lcg = coeff_in_var(g, v, dg);
  while (!r.is_zero() && r.degree_in(v) >= dg) {
    int dr = r.degree_in(v);
    Polynomial lcr = coeff_in_var(r, v, dr);
    r = lcg * r - mul_var_power(lcr * g, v, dr - dg);
    r = reduce_coeffs(r, p);
  }
  return r;
}

Polynomial gcd_impl(const Polynomial& a, const Polynomial& b, std::uint64_t p);

// Content of f seen as a univariate polynomial in x_v.
inline Polynomial content_in_var(const Polynomial& f, int v, std::uint64_t p) {
  Polynomial c(f.nvars());
  for (int k = 0; k <= f.degree_in(v); ++k) {
    Polynomial ck = coeff_in_var(f, v, k);
    if (ck.is_zero()) continue;
    c = c.is_zero() ? normalize(ck, p) : gcd_impl(c, ck, p);
    if (is_constant(c) && !c.is_zero() && (p != 0 || c.constant_term() == 1)) break;
  }
  return c;
}

inline Polynomial gcd_impl(const Polynomial& a_in, const Polynomial& b_in, std::uint64_t p) {
  Polynomial a = reduce_coeffs(a_in, p), b = reduce_coeffs(b_in, p);
  if (a.is_zero()) return normalize(b, p);
  if (b.is_zero()) return normalize(a, p);
  if (is_constant(a) || is_constant(b)) {
    if (p != 0) return Polynomial::constant(a.nvars(), 1);
    Int g = boost::multiprecision::gcd(integer_content(a), integer_content(b));
    return Polynomial::constant(a.nvars(), g);
  }
  // Main variable: the highest index actually present.
  int v = -1;
  for (int i = a.nvars() - 1; i >= 0; --i)
    if (a.degree_in(i) > 0 || b.degree_in(i) > 0) { v = i; break; }
  Polynomial ca = content_in_var(a, v, p), cb = content_in_var(b, v, p);
  Polynomial gamma = gcd_impl(ca, cb, p);
  Polynomial f = *exact_divide(a, ca, p);
  Polynomial g = *exact_divide(b, cb, p);
  if (f.degree_in(v) < g.degree_in(v)) std::swap(f, g);
  while (true) {
    Polynomial r = prem(f, g, v, p);
    if (r.is_zero()) break;
    f = g;
    Polynomial cr = content_in_var(r, v, p);
    g = *exact_divide(r, cr, p);
  }
  Polynomial pp = *exact_divide(g, content_in_var(g, v, p), p);
  return normalize(gamma * pp, p);
}

}  // namespace detail

// Gcd over Z (modulus 0, sign-normalized, integer content retained) or over
// F_p (modulus prime, monic).
inline Polynomial poly_gcd(const Polynomial& a, const Polynomial& b, std::uint64_t modulus = 0) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("poly_gcd: nvars mismatch");
  return detail::gcd_impl(a, b, modulus);
}

inline Polynomial poly_gcd_many(const std::vector<Polynomial>& fs, std::uint64_t modulus = 0) {
  if (fs.empty()) throw std::invalid_argument("poly_gcd_many: empty");
  Polynomial g = detail::reduce_coeffs(fs[0], modulus);
  g = detail::normalize(g, modulus);
  for (std::size_t i = 1; i < fs.size(); ++i) {
    if (!g.is_zero() && detail::is_constant(g) && (modulus != 0 || g.constant_term() == 1)) break;
    g = poly_gcd(g, fs[i], modulus);
  }
  return g;
}

inline Polynomial primitive_part(const Polynomial& f) {
  if (f.is_zero()) return f;
  Int c = detail::integer_content(f);
  Polynomial r = *exact_divide(f, Polynomial::constant(f.nvars(), c));
  return detail::normalize(r, 0);
}

// Repeated-factor analysis over Q (equivalently over any extension, since
// gcd commutes with field extension in characteristic zero).
//   repeated = gcd(f, df/dx_1, ..., df/dx_n)   (= prod q_i^{e_i - 1})
//   radical2 = gcd(repeated, f / repeated)     (= prod of q_i with e_i >= 2)
// f is squarefree iff repeated is constant; radical2^2 divides f.
struct SquarefreeData {
  Polynomial repeated;
  Polynomial radical2;
  bool squarefree;
};

inline SquarefreeData squarefree_data(const Polynomial& f_in) {
  if (f_in.is_zero()) throw std::invalid_argument("squarefree_data: zero polynomial");
  Polynomial f = primitive_part(f_in);
  std::vector<Polynomial> chain{f};
  for (int i = 0; i < f.nvars(); ++i) chain.push_back(f.derivative(i));
  Polynomial rep = poly_gcd_many(chain);
  SquarefreeData d{rep, Polynomial(f.nvars()), detail::is_constant(rep)};
  if (d.squarefree) {
    d.radical2 = Polynomial::constant(f.nvars(), 1);
    d.repeated = Polynomial::constant(f.nvars(), 1);
    return d;
  }
  Polynomial w = *exact_divide(f, rep);
  d.radical2 = poly_gcd(rep, w);
  return d;
}

inline bool is_squarefree_over_Q(const Polynomial& f) { return squarefree_data(f).squarefree; }

enum class ReducedState { Reduced, NonReduced, Indeterminate };

struct ReducedResult {
  ReducedState state;
  std::string note;
};

// Squarefreeness of f mod p over the algebraic closure, decided by the gcd of
// the reduction with its partial derivatives. Sound only in the large-p
// regime p > deg f; smaller p is refused as indeterminate rather than
// silently answered.
inline ReducedResult is_reduced_mod(const Polynomial& f, std::uint64_t p) {
  if (f.is_zero()) return {ReducedState::Indeterminate, "zero polynomial"};
  if (p <= static_cast<std::uint64_t>(f.total_degree()))
    return {ReducedState::Indeterminate, "requires p > deg f"};
  Polynomial fb = detail::reduce_coeffs(f, p);
  if (fb.is_zero()) return {ReducedState::Indeterminate, "reduction vanishes mod p"};
  if (fb.total_degree() == 0) return {ReducedState::Indeterminate, "reduction is constant mod p"};
  std::vector<Polynomial> chain{fb};
  for (int i = 0; i < f.nvars(); ++i) chain.push_back(fb.derivative(i));
  Polynomial g = poly_gcd_many(chain, p);
  if (detail::is_constant(g)) return {ReducedState::Reduced, ""};
  return {ReducedState::NonReduced, ""};
}

}  // namespace expsum
