#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <vector>

#include "expsum/common.hpp"
#include "expsum/expsums.hpp"
#include "expsum/poly_gcd.hpp"

namespace expsum {

// ----- Conway polynomials ---------------------------------------------------
//
// Extension-field arithmetic is built on the standard Conway polynomials:
// the minimal monic primitive polynomial in the usual word ordering whose
// root has norm equal to the smallest primitive root of F_p. Degrees are
// capped at 3, which keeps the search and the compatibility conditions tiny.

namespace gfdetail {

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> fs;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) fs.push_back(n);
  return fs;
}

inline std::uint64_t smallest_primitive_root(std::uint64_t p) {
  if (p == 2) return 1;
  auto fs = prime_factors(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto f : fs)
      if (powmod_u64(g, (p - 1) / f, p) == 1) { ok = false; break; }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root found");
}

// Dense univariate arithmetic mod (f, p) for the Conway search; f monic.
struct PolyMod {
  std::uint64_t p;
  std::vector<std::uint64_t> f;  // ascending, f.back() == 1

  std::vector<std::uint64_t> mul(const std::vector<std::uint64_t>& a,
                                 const std::vector<std::uint64_t>& b) const {
    unsigned s = static_cast<unsigned>(f.size() - 1);
    std::vector<std::uint64_t> c(2 * s - 1, 0);
    for (unsigned i = 0; i < s; ++i)
      for (unsigned j = 0; j < s; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    for (unsigned d = 2 * s - 2; d >= s; --d) {
      std::uint64_t lc = c[d];
      if (lc) {
        for (unsigned j = 0; j <= s; ++j) {
          unsigned idx = d - s + j;
          c[idx] = (c[idx] + (p - lc % p) * f[j]) % p;
        }
      }
      if (d == s) break;
    }
    c.resize(s);
    return c;
  }

  std::vector<std::uint64_t> pow_x(std::uint64_t e) const {
    unsigned s = static_cast<unsigned>(f.size() - 1);
    std::vector<std::uint64_t> r(s, 0), b(s, 0);
    r[0] = 1;
    if (s == 1) {
      // x = -f[0] as an element
      b[0] = (p - f[0] % p) % p;
    } else {
      b[1] = 1;
    }
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }
};

}  // namespace gfdetail

// Coefficients c_0..c_s (ascending, monic) of the Conway polynomial for p^s.
inline std::vector<std::uint64_t> compute_conway_polynomial(std::uint64_t p, unsigned s) {
  if (!is_prime_u64(p)) throw std::invalid_argument("conway: p must be prime");
  if (s < 1 || s > 3) throw std::invalid_argument("conway: only degrees 1..3 are supported");
  const std::uint64_t g = gfdetail::smallest_primitive_root(p);
  if (s == 1) return {(p - g) % p, 1};

  std::uint64_t q = 1;
  for (unsigned i = 0; i < s; ++i) q *= p;
  auto qfs = gfdetail::prime_factors(q - 1);

  // Candidates in word order: minimize (a_{s-1}, ..., a_0) where
  // f = x^s + sum_i (-1)^{s-i} a_i x^i. The constant term is pinned by the
  // norm-compatibility condition N(x) = g.
  std::vector<std::uint64_t> a(s, 0);
  for (;;) {
    std::vector<std::uint64_t> coeffs(s + 1, 0);
    coeffs[s] = 1;
    for (unsigned i = 0; i < s; ++i) {
      std::uint64_t c = a[i] % p;
      if ((s - i) % 2 == 1) c = (p - c) % p;  // (-1)^{s-i} a_i
      coeffs[i] = c;
    }
    // Norm of x is (-1)^s * c_0; require it to equal g.
    std::uint64_t norm = (s % 2 == 0) ? coeffs[0] : (p - coeffs[0]) % p;
    if (norm == g % p) {
      // Irreducible for s <= 3 iff rootless.
      bool rootless = true;
      for (std::uint64_t r = 0; r < p && rootless; ++r) {
        std::uint64_t v = 0;
        for (unsigned k = s + 1; k-- > 0;) v = (v * r + coeffs[k]) % p;
        if (v == 0) rootless = false;
      }
      if (rootless) {
        gfdetail::PolyMod pm{p, coeffs};
        bool primitive = true;
        for (auto f : qfs) {
          auto e = pm.pow_x((q - 1) / f);
          bool is_one = e[0] == 1;
          for (unsigned k = 1; k < s; ++k)
            if (e[k]) is_one = false;
          if (is_one) { primitive = false; break; }
        }
        if (primitive) return coeffs;
      }
    }
    // Next word (a_{s-1}, ..., a_0): increment a_0 fastest.
    unsigned i = 0;
    while (i < s && ++a[i] == p) a[i++] = 0;
    if (i == s) throw std::logic_error("conway search exhausted");
  }
}

// Bundled table, generated by tools/gen_conway; see conway_data.hpp.
struct ConwayEntry {
  std::uint64_t p;
  unsigned s;
  std::array<std::uint64_t, 4> coeffs;  // c_0..c_3 ascending; unused high slots 0
};

const std::vector<ConwayEntry>& bundled_conway_table();

inline std::vector<std::uint64_t> conway_polynomial(std::uint64_t p, unsigned s) {
  for (const auto& e : bundled_conway_table())
    if (e.p == p && e.s == s) {
      std::vector<std::uint64_t> c(e.coeffs.begin(), e.coeffs.begin() + s + 1);
      return c;
    }
  return compute_conway_polynomial(p, s);
}

// ----- Zech-log tables ------------------------------------------------------

// F_q arithmetic, q = p^s with s <= 3, in discrete-log form: index i in
// [0, q-1) encodes alpha^i for the Conway generator alpha, index q-1 encodes 0.
class GFTable {
 public:
  using Elem = std::uint32_t;

  GFTable(std::uint64_t p, unsigned s) : p_(p), s_(s) {
    q_ = 1;
    for (unsigned i = 0; i < s; ++i) {
      q_ *= p;
      if (q_ > (1u << 21)) throw std::invalid_argument("field too large for Zech tables");
    }
    build();
  }

  std::uint64_t p() const { return p_; }
  unsigned s() const { return s_; }
  std::uint64_t q() const { return q_; }
  Elem zero() const { return static_cast<Elem>(q_ - 1); }
  Elem one() const { return 0; }
  bool is_zero(Elem a) const { return a == zero(); }

  Elem add(Elem a, Elem b) const {
    if (is_zero(a)) return b;
    if (is_zero(b)) return a;
    std::uint64_t d = (b + q_ - 1 - a) % (q_ - 1);
    Elem z = zech_[d];
    if (is_zero(z)) return zero();
    return static_cast<Elem>((a + z) % (q_ - 1));
  }

  Elem neg(Elem a) const {
    if (is_zero(a) || p_ == 2) return a;
    return static_cast<Elem>((a + (q_ - 1) / 2) % (q_ - 1));
  }

  Elem mul(Elem a, Elem b) const {
    if (is_zero(a) || is_zero(b)) return zero();
    return static_cast<Elem>((static_cast<std::uint64_t>(a) + b) % (q_ - 1));
  }

  Elem pow(Elem a, std::uint64_t e) const {
    if (is_zero(a)) return e == 0 ? one() : zero();
    return static_cast<Elem>((static_cast<std::uint64_t>(a) * (e % (q_ - 1))) % (q_ - 1));
  }

  // c * 1 for c in F_p.
  Elem embed(std::uint64_t c) const { return embed_[c % p_]; }

  Elem from_integer(const Int& c) const { return embed(mod_reduce(c, p_)); }

  // Absolute trace to F_p, as a value in [0, p).
  std::uint64_t trace(Elem a) const { return trace_[a]; }

  const std::vector<std::uint64_t>& conway() const { return conway_; }

 private:
  void build() {
    conway_ = conway_polynomial(p_, s_);
    std::vector<std::uint32_t> index_of(q_, static_cast<std::uint32_t>(q_));
    std::vector<std::vector<std::uint64_t>> vec(q_ - 1, std::vector<std::uint64_t>(s_, 0));
    // Powers of x mod the Conway polynomial.
    std::vector<std::uint64_t> cur(s_, 0);
    cur[0] = 1;
    for (std::uint64_t i = 0; i < q_ - 1; ++i) {
      vec[i] = cur;
      index_of[pack(cur)] = static_cast<std::uint32_t>(i);
      // cur *= x
      std::uint64_t lead = s_ >= 1 ? cur[s_ - 1] : 0;
      for (unsigned k = s_; k-- > 1;) cur[k] = cur[k - 1];
      cur[0] = 0;
      if (lead)
        for (unsigned k = 0; k < s_; ++k)
          cur[k] = (cur[k] + (p_ - conway_[k] % p_) * lead) % p_;
    }
    zech_.assign(q_ - 1, 0);
    for (std::uint64_t i = 0; i < q_ - 1; ++i) {
      std::vector<std::uint64_t> w = vec[i];
      w[0] = (w[0] + 1) % p_;
      std::uint64_t packed = pack(w);
      zech_[i] = packed == 0 ? zero() : index_of[packed];
    }
    embed_.assign(p_, 0);
    embed_[0] = zero();
    for (std::uint64_t c = 1; c < p_; ++c) embed_[c] = index_of[c];
    trace_.assign(q_, 0);
    trace_[zero()] = 0;
    for (std::uint64_t i = 0; i < q_ - 1; ++i) {
      std::vector<std::uint64_t> acc(s_, 0);
      std::uint64_t e = i;
      for (unsigned j = 0; j < s_; ++j) {
        for (unsigned k = 0; k < s_; ++k) acc[k] = (acc[k] + vec[e][k]) % p_;
        e = (e * (p_ % (q_ - 1))) % (q_ - 1);
      }
      for (unsigned k = 1; k < s_; ++k)
        if (acc[k]) throw std::logic_error("trace not in the prime field");
      trace_[i] = acc[0];
    }
  }

  std::uint64_t pack(const std::vector<std::uint64_t>& v) const {
    std::uint64_t r = 0;
    for (unsigned k = s_; k-- > 0;) r = r * p_ + v[k];
    return r;
  }

  std::uint64_t p_, q_;
  unsigned s_;
  std::vector<std::uint64_t> conway_;
  std::vector<std::uint32_t> zech_;
  std::vector<std::uint32_t> embed_;
  std::vector<std::uint64_t> trace_;
};

inline const GFTable& gf_table(std::uint64_t p, unsigned s) {
  static std::map<std::pair<std::uint64_t, unsigned>, std::unique_ptr<GFTable>> registry;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, s);
  auto it = registry.find(key);
  if (it == registry.end()) it = registry.emplace(key, std::make_unique<GFTable>(p, s)).first;
  return *it->second;
}

// Resolve q = p^s with the s <= 3 restriction.
inline const GFTable& gf_table_for_q(std::uint64_t q) {
  std::uint64_t p;
  unsigned s;
  if (!prime_power_split(q, p, s)) throw std::invalid_argument("q is not a prime power");
  if (s > 3) throw std::invalid_argument("extension degree s <= 3 only");
  return gf_table(p, s);
}

// ----- Polynomials over F_q and character sums ------------------------------

struct GFPoly {
  const GFTable* gf = nullptr;
  int nvars = 1;
  std::vector<std::pair<Monomial, GFTable::Elem>> terms;

  // Coefficientwise reduction of an integer polynomial through the prime field.
  static GFPoly from(const Polynomial& f, const GFTable& table) {
    GFPoly r;
    r.gf = &table;
    r.nvars = f.nvars();
    for (const auto& [e, c] : f.terms()) {
      GFTable::Elem cc = table.from_integer(c);
      if (!table.is_zero(cc)) r.terms.emplace_back(e, cc);
    }
    return r;
  }

  GFTable::Elem eval(const std::vector<GFTable::Elem>& x) const {
    GFTable::Elem acc = gf->zero();
    for (const auto& [e, c] : terms) {
      GFTable::Elem t = c;
      for (int i = 0; i < nvars; ++i)
        if (e[i]) t = gf->mul(t, gf->pow(x[i], e[i]));
      acc = gf->add(acc, t);
    }
    return acc;
  }

  bool is_zero() const { return terms.empty(); }
};

// The q-element-field reduction of f (spec operation reduce_mod): valid for
// any prime power q = p^s with s <= 3; the embedding goes through F_p.
inline GFPoly reduce_mod(const Polynomial& f, std::uint64_t q) {
  return GFPoly::from(f, gf_table_for_q(q));
}

// Unnormalized sum over F_q^n of psi_q(h), psi_q = e(Tr(.)/p). Exact
// per-trace-value counts are paired with p-th roots of unity at the end.
inline ExpSumValue finite_field_character_sum(const Polynomial& h, std::uint64_t q,
                                              std::uint64_t cap = kDefaultEnumerationCap) {
  const GFTable& gf = gf_table_for_q(q);
  const unsigned n = static_cast<unsigned>(h.nvars());
  require_budget(pow_u64_saturating(q, n), cap);
  GFPoly hh = GFPoly::from(h, gf);
  std::vector<std::uint64_t> hist(gf.p(), 0);
  std::vector<GFTable::Elem> x(n, gf.zero());
  // Odometer over element indices; index q-1 is 0, the rest are alpha^i.
  std::vector<GFTable::Elem> domain(q);
  for (std::uint64_t i = 0; i < q; ++i) domain[i] = static_cast<GFTable::Elem>(i);
  std::vector<std::uint64_t> odo(n, 0);
  for (;;) {
    for (unsigned i = 0; i < n; ++i) x[i] = domain[odo[i]];
    ++hist[gf.trace(hh.eval(x))];
    unsigned i = 0;
    while (i < n && ++odo[i] == q) odo[i++] = 0;
    if (i == n) break;
  }
  return detail::pair_roots_of_unity(hist, gf.p(), 1.0);
}

struct SchemeSum {
  ExpSumValue sum;           // unnormalized
  std::uint64_t points = 0;  // #X(F_q)
};

// Sum of psi_q(h) over the common zeros X(F_q) of gens.
inline SchemeSum scheme_character_sum(const std::vector<Polynomial>& gens, const Polynomial& h,
                                      std::uint64_t q, std::uint64_t cap = kDefaultEnumerationCap) {
  const GFTable& gf = gf_table_for_q(q);
  const unsigned n = static_cast<unsigned>(h.nvars());
  require_budget(pow_u64_saturating(q, n), cap);
  std::vector<GFPoly> gg;
  for (const auto& g : gens) {
    if (g.nvars() != h.nvars()) throw std::invalid_argument("scheme_character_sum: nvars mismatch");
    gg.push_back(GFPoly::from(g, gf));
  }
  GFPoly hh = GFPoly::from(h, gf);
  std::vector<std::uint64_t> hist(gf.p(), 0);
  std::uint64_t points = 0;
  std::vector<GFTable::Elem> x(n, gf.zero());
  std::vector<std::uint64_t> odo(n, 0);
  for (;;) {
    for (unsigned i = 0; i < n; ++i) x[i] = static_cast<GFTable::Elem>(odo[i]);
    bool on_scheme = true;
    for (const auto& g : gg)
      if (!gf.is_zero(g.eval(x))) { on_scheme = false; break; }
    if (on_scheme) {
      ++points;
      ++hist[gf.trace(hh.eval(x))];
    }
    unsigned i = 0;
    while (i < n && ++odo[i] == q) odo[i++] = 0;
    if (i == n) break;
  }
  SchemeSum out;
  out.sum = detail::pair_roots_of_unity(hist, gf.p(), 1.0);
  out.points = points;
  return out;
}

}  // namespace expsum

#include "expsum/conway_data.hpp"
