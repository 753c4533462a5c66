#pragma once

#include <optional>
#include <string>
#include <vector>

#include "expsum/jets.hpp"

namespace expsum {

// Checkers for the lct inequalities. Verdict policy: "pass" only when sound
// (upper bound of the left side <= lower bound of the right side), "fail"
// only when sound in reverse; anything else is inconclusive. Heuristic
// estimates never enter a verdict.

enum class Verdict { Pass, Fail, Inconclusive, Inapplicable };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
    case Verdict::Inapplicable: return "inapplicable";
  }
  return "?";
}

// One side of an inequality: sound bounds plus a display string.
struct Bound {
  Rat lower;
  std::optional<Rat> upper;
  bool exact = false;
  std::string desc;

  static Bound from_estimate(const LctEstimate& e) {
    Bound b;
    b.lower = e.sound_lower();
    b.upper = e.sound_upper();
    b.exact = e.exact && !e.heuristic;
    b.desc = e.to_text();
    return b;
  }
  static Bound exactly(Rat v, std::string d = "") {
    return {v, v, true, std::move(d)};
  }
  Bound scaled(const Rat& k) const {
    Bound b = *this;
    b.lower *= k;
    if (b.upper) *b.upper *= k;
    return b;
  }
  Bound plus(const Rat& k) const {
    Bound b = *this;
    b.lower += k;
    if (b.upper) *b.upper += k;
    return b;
  }
};

struct InequalityReport {
  std::string name;
  Verdict verdict = Verdict::Inapplicable;
  Bound lhs, rhs;
  bool equality = false;  // both sides exact and equal
  std::string details;
};

inline Verdict compare_sides(const Bound& lhs, const Bound& rhs) {
  if (lhs.upper && *lhs.upper <= rhs.lower) return Verdict::Pass;
  if (rhs.upper && lhs.lower > *rhs.upper) return Verdict::Fail;
  return Verdict::Inconclusive;
}

inline InequalityReport make_report(std::string name, const Bound& lhs, const Bound& rhs,
                                    std::string details = "") {
  InequalityReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.verdict = compare_sides(lhs, rhs);
  r.equality = lhs.exact && rhs.exact && lhs.lower == rhs.lower;
  r.details = std::move(details);
  return r;
}

// ----- The two classical bounds ----------------------------------------------

// c_0(f) <= 1/2 when f is non-reduced at zero, and c_0(f) <= n/r always.
// Both are theorems; a Fail verdict here flags an estimator defect.
inline std::vector<InequalityReport> check_trivial_bounds(const Polynomial& f,
                                                          const LctEstimate& c0) {
  if (f.is_zero() || f.constant_term() != 0)
    throw std::invalid_argument("check_trivial_bounds: need f nonzero with f(0) = 0");
  std::vector<InequalityReport> out;
  Bound lhs = Bound::from_estimate(c0);

  auto sq = squarefree_data(f);
  bool nonreduced_at_zero = !sq.squarefree && sq.radical2.constant_term() == 0 &&
                            sq.radical2.total_degree() > 0;
  if (nonreduced_at_zero) {
    out.push_back(make_report("nonreduced-half", lhs, Bound::exactly(Rat(1, 2), "1/2"),
                              "repeated factor " + sq.radical2.to_string() + " vanishes at 0"));
  } else {
    InequalityReport skip;
    skip.name = "nonreduced-half";
    skip.verdict = Verdict::Inapplicable;
    skip.details = "f is reduced at zero";
    out.push_back(skip);
  }

  unsigned r = static_cast<unsigned>(f.lowest_degree());
  Bound rhs = Bound::exactly(Rat(f.nvars(), static_cast<long>(r)),
                             std::to_string(f.nvars()) + "/" + std::to_string(r));
  out.push_back(make_report("order-bound", lhs, rhs, "multiplicity r = " + std::to_string(r)));
  return out;
}

// ----- (r+1) c_0(f) <= n + c(f_r) ---------------------------------------------

inline InequalityReport check_geomcfr(const Polynomial& f, const LctEstimate& c0) {
  if (f.is_zero() || f.constant_term() != 0)
    throw std::invalid_argument("check_geomcfr: need f nonzero with f(0) = 0");
  auto dec = homogeneous_parts(f);
  unsigned r = dec.lowest_degree;
  Polynomial fr = f.homogeneous_part(r);
  LctEstimate cfr = global_lct_homogeneous(fr);
  Bound lhs = Bound::from_estimate(c0).scaled(Rat(r + 1));
  Bound rhs = Bound::from_estimate(cfr).plus(Rat(f.nvars()));
  return make_report("lowest-form-bound", lhs, rhs,
                     "r = " + std::to_string(r) + ", c(f_r) = " + cfr.to_text());
}

// ----- The repeated-factor bounds ---------------------------------------------

// If g^2 | f_r for nonconstant g: (r+1) c_0(f) <= n + 1/2; if additionally
// g | f_{r+1} (vacuous when f_{r+1} = 0): (r+2) c_0(f) <= n + 1. The witness
// g is derived from the repeated part of f_r, maximizing applicability: any
// repeated irreducible works for the first bound, and for the second it is
// enough that some repeated irreducible divides f_{r+1}.
inline std::vector<InequalityReport> check_geomc(const Polynomial& f, const LctEstimate& c0) {
  if (f.is_zero() || f.constant_term() != 0)
    throw std::invalid_argument("check_geomc: need f nonzero with f(0) = 0");
  auto dec = homogeneous_parts(f);
  unsigned r = dec.lowest_degree;
  Polynomial fr = f.homogeneous_part(r);
  Polynomial fr1 = f.homogeneous_part(r + 1);
  std::vector<InequalityReport> out;

  auto sq = squarefree_data(fr);
  Bound lhs1 = Bound::from_estimate(c0).scaled(Rat(r + 1));
  if (sq.squarefree) {
    InequalityReport skip;
    skip.name = "square-factor-half";
    skip.verdict = Verdict::Inapplicable;
    skip.details = "f_r is squarefree";
    out.push_back(skip);
    InequalityReport skip2 = skip;
    skip2.name = "square-factor-one";
    out.push_back(skip2);
    return out;
  }

  Polynomial g1 = sq.radical2;  // g1^2 divides f_r
  out.push_back(make_report("square-factor-half", lhs1,
                            Bound::exactly(Rat(f.nvars()) + Rat(1, 2)),
                            "g = " + g1.to_string()));

  Polynomial g2(f.nvars());
  if (fr1.is_zero()) {
    g2 = g1;
  } else {
    g2 = poly_gcd(g1, fr1);
  }
  if (!detail::is_constant(g2)) {
    Bound lhs2 = Bound::from_estimate(c0).scaled(Rat(r + 2));
    out.push_back(make_report("square-factor-one", lhs2,
                              Bound::exactly(Rat(f.nvars()) + Rat(1)),
                              "g = " + g2.to_string() +
                                  (fr1.is_zero() ? " (f_{r+1} = 0)" : " divides f_{r+1}")));
  } else {
    InequalityReport skip;
    skip.name = "square-factor-one";
    skip.verdict = Verdict::Inapplicable;
    skip.details = "no repeated factor of f_r divides f_{r+1}";
    out.push_back(skip);
  }
  return out;
}

// ----- Powered-generator ideals -----------------------------------------------

// d_e = lcm(1..e).
inline std::uint64_t d_e(unsigned e) { return lcm_upto(e); }

struct PoweredGenerator {
  Polynomial base;
  unsigned degree;    // homogeneous degree of the base
  unsigned exponent;  // power applied
  Polynomial powered;
};

namespace ineqdetail {

inline std::vector<PoweredGenerator> powered_generators(const Polynomial& f, unsigned lo_deg,
                                                        unsigned hi_deg, std::uint64_t d,
                                                        unsigned denom_shift) {
  // Generator for degree i in [lo_deg, hi_deg]: f_i^(d / (hi_deg - i + denom_shift)).
  std::vector<PoweredGenerator> gens;
  for (unsigned i = lo_deg; i <= hi_deg; ++i) {
    Polynomial fi = f.homogeneous_part(i);
    if (fi.is_zero()) continue;
    std::uint64_t denom = hi_deg - i + denom_shift;
    if (denom == 0 || d % denom != 0)
      throw std::logic_error("powered_generators: non-integral exponent");
    unsigned e = static_cast<unsigned>(d / denom);
    gens.push_back({fi, i, e, fi.pow(e)});
  }
  return gens;
}

}  // namespace ineqdetail

// I_e(f): generators f_i^{d_e/(e-i+1)} for 1 <= i <= e.
inline std::vector<Polynomial> ideal_I_e(const Polynomial& f, unsigned e) {
  if (f.is_zero() || f.constant_term() != 0)
    throw std::invalid_argument("ideal_I_e: need f nonzero with f(0) = 0");
  std::vector<Polynomial> out;
  for (auto& g : ineqdetail::powered_generators(f, 1, e, d_e(e), 1)) out.push_back(g.powered);
  return out;
}

// J_k(f): generators f_{r+i}^{d_k/(k-i)} for 0 <= i <= k-1.
inline std::vector<Polynomial> ideal_J_k(const Polynomial& f, unsigned k) {
  if (f.is_zero() || f.constant_term() != 0)
    throw std::invalid_argument("ideal_J_k: need f nonzero with f(0) = 0");
  unsigned r = homogeneous_parts(f).lowest_degree;
  std::vector<Polynomial> out;
  for (auto& g : ineqdetail::powered_generators(f, r, r + k - 1, d_e(k), 1)) out.push_back(g.powered);
  return out;
}

// lct of the ideal generated by powered homogeneous parts. Sound routes:
// all-monomial generators go through the Howald LP exactly; otherwise the
// ideal is bracketed by the best single generator from below (monotonicity)
// and by the monomial ideal of all generator terms from above (containment).
// A jet reading is attached as evidence but stays heuristic.
struct IdealLct {
  bool zero_ideal = false;
  LctEstimate estimate;                  // sound
  std::optional<LctEstimate> jet_upper;  // heuristic evidence
};

inline IdealLct ideal_lct(const std::vector<PoweredGenerator>& gens, int nvars,
                          std::uint64_t cap = kDefaultEnumerationCap) {
  IdealLct out;
  if (gens.empty()) {
    out.zero_ideal = true;
    out.estimate = LctEstimate::exactly(Rat(0), LctMethod::HowaldMonomial);
    out.estimate.note = "zero ideal";
    return out;
  }
  bool all_monomial = true;
  for (const auto& g : gens)
    if (g.powered.term_count() != 1) all_monomial = false;
  if (all_monomial) {
    std::vector<Monomial> exps;
    for (const auto& g : gens) exps.push_back(g.powered.terms().begin()->first);
    auto howald = lct_monomial_ideal(exps, nvars);
    if (howald.unit_ideal) {
      out.estimate = LctEstimate::exactly(Rat(0), LctMethod::HowaldMonomial);
      out.estimate.note = "unit ideal sentinel";
      return out;
    }
    LctMethod m = gens.size() == 1 ? LctMethod::MonomialSingle : LctMethod::HowaldMonomial;
    out.estimate = LctEstimate::exactly(howald.value, m);
    return out;
  }
  if (gens.size() == 1) {
    // c(g^e) = c(g)/e with g homogeneous.
    LctEstimate base = global_lct_homogeneous(gens[0].base);
    out.estimate = base.scaled(Rat(1, static_cast<long>(gens[0].exponent)));
    out.estimate.method = base.method;
    return out;
  }
  // Mixed generators: best single-generator lower bound, term-ideal upper.
  Rat lower(0);
  for (const auto& g : gens) {
    LctEstimate base = global_lct_homogeneous(g.base);
    Rat lo = base.sound_lower() / Rat(static_cast<long>(g.exponent));
    lower = std::max(lower, lo);
  }
  std::vector<Monomial> all_terms;
  for (const auto& g : gens)
    for (const auto& [e, c] : g.powered.terms()) all_terms.push_back(e);
  auto hull = lct_monomial_ideal(all_terms, nvars);
  Rat upper = hull.unit_ideal ? Rat(0) : hull.value;
  out.estimate = LctEstimate::bracket(lower, upper, LctMethod::HowaldMonomial);
  out.estimate.note = "single-generator lower vs term-ideal upper";
  std::vector<Polynomial> polys;
  for (const auto& g : gens) polys.push_back(g.powered);
  try {
    out.jet_upper = lct_upper_from_jets_ideal(polys, 4, {2, 3}, cap);
  } catch (const BudgetError&) {
    out.jet_upper = std::nullopt;
  }
  return out;
}

// ----- (e+1) c_0(f) <= n + d_e c(I_e(f)) and the r-shifted reformulation ------

inline InequalityReport check_geomcfe(const Polynomial& f, unsigned e, const LctEstimate& c0,
                                      std::uint64_t cap = kDefaultEnumerationCap) {
  if (f.is_zero() || f.constant_term() != 0)
    throw std::invalid_argument("check_geomcfe: need f nonzero with f(0) = 0");
  std::uint64_t d = d_e(e);
  auto gens = ineqdetail::powered_generators(f, 1, e, d, 1);
  IdealLct ide = ideal_lct(gens, f.nvars(), cap);
  Bound lhs = Bound::from_estimate(c0).scaled(Rat(e + 1));
  Bound rhs = Bound::from_estimate(ide.estimate).scaled(Rat(static_cast<long>(d))).plus(Rat(f.nvars()));
  std::string details = "d_e = " + std::to_string(d) + ", c(I_e) = " + ide.estimate.to_text();
  if (ide.jet_upper) details += ", jet evidence " + ide.jet_upper->to_text();
  return make_report("powered-ideal-e" + std::to_string(e), lhs, rhs, details);
}

inline InequalityReport check_c0k(const Polynomial& f, unsigned k, const LctEstimate& c0,
                                  std::uint64_t cap = kDefaultEnumerationCap) {
  if (f.is_zero() || f.constant_term() != 0)
    throw std::invalid_argument("check_c0k: need f nonzero with f(0) = 0");
  unsigned r = homogeneous_parts(f).lowest_degree;
  std::uint64_t d = d_e(k);
  auto gens = ineqdetail::powered_generators(f, r, r + k - 1, d, 1);
  IdealLct ide = ideal_lct(gens, f.nvars(), cap);
  Bound lhs = Bound::from_estimate(c0).scaled(Rat(r + k));
  Bound rhs = Bound::from_estimate(ide.estimate).scaled(Rat(static_cast<long>(d))).plus(Rat(f.nvars()));
  std::string details = "r = " + std::to_string(r) + ", d_k = " + std::to_string(d) +
                        ", c(J_k) = " + ide.estimate.to_text();
  if (ide.jet_upper) details += ", jet evidence " + ide.jet_upper->to_text();
  return make_report("powered-ideal-k" + std::to_string(k), lhs, rhs, details);
}

}  // namespace expsum
