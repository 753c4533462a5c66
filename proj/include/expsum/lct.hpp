#pragma once

#include <optional>
#include <string>
#include <vector>

#include "expsum/newton.hpp"
#include "expsum/poly_gcd.hpp"

namespace expsum {

enum class LctMethod { NewtonNondegenerate, HowaldMonomial, MonomialSingle, JetUpper, Declared };

inline const char* to_string(LctMethod m) {
  switch (m) {
    case LctMethod::NewtonNondegenerate: return "newton-nondegenerate";
    case LctMethod::HowaldMonomial: return "howald-monomial";
    case LctMethod::MonomialSingle: return "monomial-single";
    case LctMethod::JetUpper: return "jet-upper";
    case LctMethod::Declared: return "declared";
  }
  return "?";
}

// An exact rational lct or a [lower, upper] bracket, with provenance. When
// heuristic is set the bounds are evidence only and must not feed verdicts;
// sound_lower/sound_upper encode that policy.
struct LctEstimate {
  bool exact = false;
  Rat value;       // when exact
  Rat lower, upper;  // when bracket
  LctMethod method = LctMethod::NewtonNondegenerate;
  std::vector<Int> at;  // base point; empty means the origin
  bool heuristic = false;
  bool search_limited = false;
  std::string note;

  static LctEstimate exactly(Rat v, LctMethod m) {
    LctEstimate e;
    e.exact = true;
    e.value = std::move(v);
    e.method = m;
    return e;
  }
  static LctEstimate bracket(Rat lo, Rat hi, LctMethod m) {
    LctEstimate e;
    e.lower = std::move(lo);
    e.upper = std::move(hi);
    e.method = m;
    return e;
  }

  Rat sound_lower() const {
    if (heuristic) return Rat(0);
    return exact ? value : lower;
  }
  std::optional<Rat> sound_upper() const {
    if (heuristic) return std::nullopt;
    return exact ? value : upper;
  }
  Rat display_upper() const { return exact ? value : upper; }

  // min(this, other); exactness survives only when provable.
  LctEstimate min_with(const LctEstimate& o) const {
    LctEstimate r;
    r.heuristic = heuristic || o.heuristic;
    r.search_limited = search_limited || o.search_limited;
    Rat lo = std::min(exact ? value : lower, o.exact ? o.value : o.lower);
    Rat hi = std::min(display_upper(), o.display_upper());
    if (exact && o.exact) {
      r.exact = true;
      r.value = std::min(value, o.value);
      r.method = value <= o.value ? method : o.method;
    } else if (exact && value <= (o.exact ? o.value : o.lower)) {
      r = *this;
      r.search_limited = search_limited || o.search_limited;
    } else if (o.exact && o.value <= (exact ? value : lower)) {
      r = o;
      r.search_limited = search_limited || o.search_limited;
    } else {
      r.lower = lo;
      r.upper = hi;
      r.method = method;
    }
    return r;
  }

  LctEstimate scaled(const Rat& k) const {
    LctEstimate r = *this;
    if (r.exact) r.value *= k;
    r.lower *= k;
    r.upper *= k;
    return r;
  }

  LctEstimate capped_at_one() const {
    LctEstimate r = *this;
    if (r.exact) {
      if (r.value > 1) r.value = 1;
    } else {
      if (r.lower > 1) r.lower = 1;
      if (r.upper > 1) r.upper = 1;
    }
    return r;
  }

  std::string to_text() const {
    std::string s = exact ? format_rational(value)
                          : "[" + format_rational(lower) + ", " + format_rational(upper) + "]";
    s += " (";
    s += to_string(method);
    if (heuristic) s += ", heuristic";
    if (search_limited) s += ", search-limited";
    s += ")";
    return s;
  }
};

// Log-canonical threshold of f at the origin via the Newton polyhedron:
// min(1, 1/t0) exactly when f is nondegenerate with respect to the compact
// faces; otherwise the same number survives only as a sound upper bound
// (the term ideal contains f). A linear part makes the origin smooth and the
// lct exactly 1 regardless of degeneracy.
inline LctEstimate lct_newton_at_origin(const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("lct: zero polynomial");
  if (f.constant_term() != 0) throw std::invalid_argument("lct: f(0) != 0");
  Rat t0 = newton_diagonal_t0(NewtonPolyhedron::of(f));
  Rat up = Rat(1) / t0;
  if (up > 1) up = 1;
  if (!f.homogeneous_part(1).is_zero())
    return LctEstimate::exactly(Rat(1), LctMethod::NewtonNondegenerate);
  LctMethod method =
      f.term_count() == 1 ? LctMethod::MonomialSingle : LctMethod::NewtonNondegenerate;
  NondegeneracyResult nd = nondegeneracy_check(f);
  if (nd.status == Nondegeneracy::Pass) return LctEstimate::exactly(up, method);
  LctEstimate e = LctEstimate::bracket(Rat(0), up, method);
  e.note = nd.status == Nondegeneracy::Fail ? "newton-degenerate: " + nd.note
                                            : "nondegeneracy indeterminate: " + nd.note;
  return e;
}

inline LctEstimate lct_nondegenerate(const Polynomial& f) { return lct_newton_at_origin(f); }

// lct of F - F(y) at the point y (integer coordinates).
inline LctEstimate lct_at_point(const Polynomial& F, const std::vector<Int>& y) {
  Polynomial shifted = F.taylor_shift(y);
  if (shifted.is_zero()) throw std::invalid_argument("lct_at_point: constant polynomial");
  LctEstimate e = lct_newton_at_origin(shifted);
  e.at = y;
  return e;
}

// ----- Critical point discovery ----------------------------------------------

// Exhaustive integer search for grad F = 0 in the box [-H, H]^n. Honest about
// its limits: everything downstream is tagged search-limited unless the
// caller declares the list complete.
struct CriticalPointSet {
  std::vector<std::vector<Int>> points;
  bool declared_complete = false;
};

inline CriticalPointSet critical_points_search(const Polynomial& F, long long H = 10) {
  const int n = F.nvars();
  auto grad = F.gradient();
  CriticalPointSet out;
  std::vector<long long> v(n, -H);
  for (;;) {
    std::vector<Int> x(v.begin(), v.end());
    bool crit = true;
    for (const auto& g : grad)
      if (g.eval(x) != 0) { crit = false; break; }
    if (crit) out.points.push_back(x);
    int i = 0;
    while (i < n && ++v[i] > H) v[i++] = -H;
    if (i == n) break;
  }
  return out;
}

// ----- The exponents r and a -------------------------------------------------

struct OrderResult {
  std::optional<unsigned> value;  // empty = +infinity (no critical point found)
  bool search_limited = false;
};

// Minimum vanishing order of F - F(y') over the supplied critical points;
// +infinity over the empty set.
inline OrderResult compute_r(const Polynomial& F, const CriticalPointSet& pts) {
  OrderResult r;
  r.search_limited = !pts.declared_complete;
  for (const auto& y : pts.points) {
    auto ord = order_of_vanishing(F - Polynomial::constant(F.nvars(), F.eval(y)), y);
    if (!ord) continue;  // F constant along the fiber; contributes nothing finite
    if (!r.value || *ord < *r.value) r.value = *ord;
  }
  return r;
}

// Minimum of the lct of F - b over the found critical values, capped by the
// smooth contribution 1.
inline LctEstimate compute_a(const Polynomial& F, const CriticalPointSet& pts) {
  LctEstimate a = LctEstimate::exactly(Rat(1), LctMethod::NewtonNondegenerate);
  a.note = pts.points.empty() ? "no singular point found; bound trivial" : "";
  for (const auto& y : pts.points) a = a.min_with(lct_at_point(F, y));
  a = a.capped_at_one();
  a.search_limited = !pts.declared_complete;
  return a;
}

inline std::vector<std::vector<Int>> filter_congruent(const std::vector<std::vector<Int>>& pts,
                                                      const std::vector<Int>& y, std::uint64_t p) {
  std::vector<std::vector<Int>> out;
  for (const auto& q : pts) {
    bool ok = true;
    for (std::size_t i = 0; i < q.size(); ++i)
      if (mod_reduce(q[i] - y[i], p) != 0) { ok = false; break; }
    if (ok) out.push_back(q);
  }
  return out;
}

// a_{y,p}: minimum lct over critical points congruent to y mod p (1 when the
// filtered set is empty). r_{y,p}: minimum vanishing order among the filtered
// points that attain a_{y,p}.
struct LocalExponents {
  LctEstimate a;
  std::optional<unsigned> r;  // empty = no attaining critical point found
  std::vector<Int> witness;   // a point attaining (a, r), when any
  bool search_limited = true;
};

inline LocalExponents compute_local_exponents(const Polynomial& F, const std::vector<Int>& y,
                                              std::uint64_t p, const CriticalPointSet& pts) {
  LocalExponents out;
  out.search_limited = !pts.declared_complete;
  auto filtered = filter_congruent(pts.points, y, p);
  out.a = LctEstimate::exactly(Rat(1), LctMethod::NewtonNondegenerate);
  if (filtered.empty()) {
    out.a.note = "no singular point found; bound trivial";
    out.a.search_limited = out.search_limited;
    return out;
  }
  std::vector<LctEstimate> per;
  for (const auto& q : filtered) {
    per.push_back(lct_at_point(F, q));
    out.a = out.a.min_with(per.back());
  }
  out.a = out.a.capped_at_one();
  out.a.search_limited = out.search_limited;
  // Attaining points: compare against the minimum by upper bound (exact when
  // everything is exact, which is the supported regime for r_{y,p}).
  Rat amin = out.a.display_upper();
  for (std::size_t i = 0; i < filtered.size(); ++i) {
    if (per[i].display_upper() != amin) continue;
    auto ord = order_of_vanishing(F - Polynomial::constant(F.nvars(), F.eval(filtered[i])), filtered[i]);
    if (!ord) continue;
    if (!out.r || *ord < *out.r) {
      out.r = *ord;
      out.witness = filtered[i];
    }
  }
  return out;
}

// ----- Stratification of critical points --------------------------------------

// V_0: order > r. V_1: order r with reduced lowest form. V_{1/2}: order r
// with non-reduced lowest form. Reducedness is squarefreeness over the
// algebraic closure, decided in characteristic zero by gcd with the partials.
enum class Stratum { Zero, Half, One };

inline const char* to_string(Stratum s) {
  switch (s) {
    case Stratum::Zero: return "0";
    case Stratum::Half: return "1/2";
    case Stratum::One: return "1";
  }
  return "?";
}

struct CriticalPointRecord {
  std::vector<Int> point;
  Int value;        // F(point)
  unsigned order = 0;  // vanishing order of F - F(point) at point
  Stratum stratum = Stratum::One;
  LctEstimate lct_at_point;
};

inline std::vector<CriticalPointRecord> stratify_critical_points(const Polynomial& F,
                                                                 const CriticalPointSet& pts,
                                                                 std::uint64_t /*p*/ = 0) {
  OrderResult r = compute_r(F, pts);
  std::vector<CriticalPointRecord> out;
  for (const auto& y : pts.points) {
    Polynomial shifted = F.taylor_shift(y);
    if (shifted.is_zero()) continue;
    CriticalPointRecord rec;
    rec.point = y;
    rec.value = F.eval(y);
    rec.order = static_cast<unsigned>(shifted.lowest_degree());
    rec.lct_at_point = lct_newton_at_origin(shifted);
    rec.lct_at_point.at = y;
    if (r.value && rec.order > *r.value) {
      rec.stratum = Stratum::Zero;
    } else {
      Polynomial lowest = shifted.homogeneous_part(rec.order);
      rec.stratum = is_squarefree_over_Q(lowest) ? Stratum::One : Stratum::Half;
    }
    out.push_back(std::move(rec));
  }
  return out;
}

// ----- Global lct of a homogeneous polynomial ---------------------------------

// For homogeneous g the scaling action contracts every point to the origin
// and c(g) = c_0(g); the origin estimate is therefore exact when the Newton
// reading at the origin is. Found non-origin singular points are still probed
// and folded in by min, which can only confirm the origin value.
inline LctEstimate global_lct_homogeneous(const Polynomial& g, long long H = 10) {
  if (g.is_zero()) throw std::invalid_argument("global_lct_homogeneous: zero polynomial");
  if (!g.is_homogeneous()) throw std::invalid_argument("global_lct_homogeneous: not homogeneous");
  if (g.total_degree() == 0) throw std::invalid_argument("global_lct_homogeneous: constant");
  LctEstimate est = g.lowest_degree() == 0 ? LctEstimate::exactly(Rat(1), LctMethod::NewtonNondegenerate)
                                           : lct_newton_at_origin(g);
  CriticalPointSet pts = critical_points_search(g, H);
  for (const auto& y : pts.points) {
    bool origin = true;
    for (const auto& c : y)
      if (c != 0) origin = false;
    if (origin) continue;
    Polynomial shifted = g.taylor_shift(y);
    if (shifted.is_zero()) continue;
    if (g.eval(y) != 0) continue;  // c(g) ranges over zeros of g only
    est = est.min_with(lct_newton_at_origin(shifted));
  }
  return est;
}

}  // namespace expsum
