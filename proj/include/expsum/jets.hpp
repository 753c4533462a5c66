#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "expsum/gf.hpp"
#include "expsum/lct.hpp"

namespace expsum {

// Arc/jet counting over F_q as a proxy for contact-locus codimensions. The
// codimension of { x : h(x) = 0 mod t^k } inside the length-m jet space, read
// off from point counts, upper-bounds the lct by the standard arc-space
// formulas. Everything here is flagged heuristic: the true statement lives
// over C and small fields can misbehave, which the stability rules below are
// designed to catch.

struct ContactLocusCount {
  unsigned k = 1;  // contact order
  unsigned m = 1;  // jet length, m >= k
  std::uint64_t q = 2;
  bool based_at_origin = false;
  std::uint64_t count = 0;  // jets with h = 0 mod t^k; exact
};

namespace jetdetail {

// Count jets x in (F_q[t]/t^{m+1})^n with g(x) = 0 mod t^k for every g.
// based_at_origin pins the constant coefficients to 0 (they still count
// toward the ambient, i.e. the returned count is over the free slots times
// the pinned ones). Slots beyond t^{k-1} cannot affect h mod t^k and are
// accounted for by a power factor instead of being enumerated.
inline std::uint64_t count_jets(const std::vector<Polynomial>& gens, unsigned k, unsigned m,
                                std::uint64_t q, bool based, std::uint64_t cap,
                                bool full_enumeration = false) {
  if (gens.empty()) throw std::invalid_argument("count_jets: no generators");
  const GFTable& gf = gf_table_for_q(q);
  const int n = gens[0].nvars();
  const unsigned slots_per_var = based ? m : m + 1;      // t^1..t^m resp. t^0..t^m
  require_budget(pow_u64_saturating(q, static_cast<unsigned>(n) * slots_per_var), cap);
  const unsigned lo = based ? 1u : 0u;
  const unsigned shortcut = based ? (k >= 1 ? k - 1 : 0u) : k;
  const unsigned active = full_enumeration ? slots_per_var : std::min(slots_per_var, shortcut);
  const unsigned inert = slots_per_var - active;  // never influence h mod t^k

  std::vector<GFPoly> gg;
  for (const auto& g : gens) gg.push_back(GFPoly::from(g, gf));

  using tseries_detail::Trunc;
  std::vector<Trunc> x(n, Trunc(k, gf.zero()));  // arithmetic truncated at t^k

  std::uint64_t hits = 0;
  const unsigned free_slots = static_cast<unsigned>(n) * active;
  if (free_slots == 0) {
    // based_at_origin with k = 1: every relevant slot is pinned to 0, so the
    // condition is just g(0) = 0 in F_q.
    bool ok = true;
    for (const auto& g : gg) {
      GFTable::Elem c = gf.zero();
      for (const auto& [e, cc] : g.terms)
        if (monomial_degree(e) == 0) c = gf.add(c, cc);
      if (!gf.is_zero(c)) ok = false;
    }
    hits = ok ? 1 : 0;
  } else {
    std::vector<std::uint64_t> odo(free_slots, 0);
    for (;;) {
      // Slots at t^k and above are enumerated in full mode but cannot affect
      // the value; they simply scale the count.
      for (int i = 0; i < n; ++i)
        for (unsigned s = 0; s < active; ++s)
          if (lo + s < k) x[i][lo + s] = static_cast<GFTable::Elem>(odo[i * active + s]);
      bool ok = true;
      for (const auto& g : gg) {
        Trunc val = tseries_detail::trunc_zero(gf, k);
        for (const auto& [e, c] : g.terms) {
          Trunc t = tseries_detail::trunc_zero(gf, k);
          t[0] = c;
          for (int i = 0; i < n; ++i)
            if (e[i]) t = tseries_detail::trunc_mul(gf, t, tseries_detail::trunc_pow(gf, x[i], e[i], k));
          for (unsigned j = 0; j < k; ++j) val[j] = gf.add(val[j], t[j]);
        }
        for (unsigned j = 0; j < k; ++j)
          if (!gf.is_zero(val[j])) { ok = false; break; }
        if (!ok) break;
      }
      if (ok) ++hits;
      unsigned i = 0;
      while (i < free_slots && ++odo[i] == q) odo[i++] = 0;
      if (i == free_slots) break;
    }
  }
  // Inert slots multiply the count.
  for (unsigned i = 0; i < inert * static_cast<unsigned>(n); ++i) hits *= q;
  return hits;
}

}  // namespace jetdetail

inline ContactLocusCount contact_count(const Polynomial& h, unsigned k, unsigned m, std::uint64_t q,
                                       bool based_at_origin,
                                       std::uint64_t cap = kDefaultEnumerationCap) {
  if (m < k) throw std::invalid_argument("contact_count: jet length m must be >= k");
  ContactLocusCount c;
  c.k = k;
  c.m = m;
  c.q = q;
  c.based_at_origin = based_at_origin;
  c.count = jetdetail::count_jets({h}, k, m, q, based_at_origin, cap);
  return c;
}

inline ContactLocusCount contact_count_ideal(const std::vector<Polynomial>& gens, unsigned k,
                                             unsigned m, std::uint64_t q, bool based_at_origin,
                                             std::uint64_t cap = kDefaultEnumerationCap) {
  if (m < k) throw std::invalid_argument("contact_count_ideal: jet length m must be >= k");
  ContactLocusCount c;
  c.k = k;
  c.m = m;
  c.q = q;
  c.based_at_origin = based_at_origin;
  c.count = jetdetail::count_jets(gens, k, m, q, based_at_origin, cap);
  return c;
}

// Codimension estimate n(m+1) - log_q(count), accepted per field only when
// the count sits within q^{+-0.2} of a clean power (small-q point counts
// carry lower-order terms; anything murkier is dropped). Accepted reads that
// agree give a stable value; a spread of 1 gives a bracket; worse is
// reported unstable with no numeric result.
struct CodimEstimate {
  bool has_value = false;
  bool stable = false;
  long lo = 0, hi = 0;
  bool m_independence_ok = true;
  std::vector<std::tuple<std::uint64_t, std::uint64_t, double, bool>> reads;  // q, count, log_q, accepted
  std::string note;
};

inline CodimEstimate codim_estimate(const std::vector<Polynomial>& gens, unsigned k,
                                    const std::vector<std::uint64_t>& q_list, bool based_at_origin,
                                    std::uint64_t cap = kDefaultEnumerationCap) {
  const int n = gens.at(0).nvars();
  const unsigned m = k;  // minimum allowed; independence of m is spot-checked below
  CodimEstimate out;
  std::vector<long> accepted;
  for (std::uint64_t q : q_list) {
    std::uint64_t cnt = jetdetail::count_jets(gens, k, m, q, based_at_origin, cap);
    if (cnt == 0) {
      out.reads.emplace_back(q, cnt, -1.0, false);
      continue;
    }
    double lq = std::log(static_cast<double>(cnt)) / std::log(static_cast<double>(q));
    double nearest = std::round(lq);
    bool ok = std::abs(lq - nearest) <= 0.2;
    out.reads.emplace_back(q, cnt, lq, ok);
    if (ok) accepted.push_back(static_cast<long>(n * (m + 1)) - static_cast<long>(nearest));
  }
  if (accepted.empty()) {
    out.note = "unstable: no clean power-of-q count";
    return out;
  }
  long lo = accepted[0], hi = accepted[0];
  for (long v : accepted) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (hi - lo > 1) {
    out.note = "unstable: codimension reads disagree by more than 1";
    return out;
  }
  out.has_value = true;
  out.stable = (hi == lo);
  out.lo = lo;
  out.hi = hi;
  // Spot-check m-independence at m = k+1 with the smallest field, using a
  // genuine full enumeration (no slot shortcut) so the check has teeth.
  std::uint64_t q0 = q_list.front();
  for (std::uint64_t q : q_list) q0 = std::min(q0, q);
  std::uint64_t c2 = 0;
  try {
    c2 = jetdetail::count_jets(gens, k, m + 1, q0, based_at_origin, cap, /*full_enumeration=*/true);
  } catch (const BudgetError&) {
    c2 = 0;  // over budget: leave the check vacuous rather than refuse the estimate
  }
  if (c2 > 0) {
    double lq = std::log(static_cast<double>(c2)) / std::log(static_cast<double>(q0));
    double nearest = std::round(lq);
    if (std::abs(lq - nearest) <= 0.2) {
      long codim2 = static_cast<long>(n * (m + 2)) - static_cast<long>(nearest);
      out.m_independence_ok = codim2 >= lo && codim2 <= hi;
    }
  }
  return out;
}

inline CodimEstimate codim_estimate(const Polynomial& h, unsigned k,
                                    const std::vector<std::uint64_t>& q_list, bool based_at_origin,
                                    std::uint64_t cap = kDefaultEnumerationCap) {
  return codim_estimate(std::vector<Polynomial>{h}, k, q_list, based_at_origin, cap);
}

// Upper bound on the lct from contact loci: min over k <= k_max of codim/k,
// using only stable codimension reads. Heuristic by construction; empty when
// every k is unstable.
inline std::optional<LctEstimate> lct_upper_from_jets(const Polynomial& h, unsigned k_max,
                                                      bool based_at_origin,
                                                      std::vector<std::uint64_t> q_list = {2, 3},
                                                      std::uint64_t cap = kDefaultEnumerationCap) {
  std::optional<Rat> best;
  unsigned best_k = 0;
  for (unsigned k = 1; k <= k_max; ++k) {
    CodimEstimate ce = codim_estimate(h, k, q_list, based_at_origin, cap);
    if (!ce.has_value || !ce.stable) continue;
    Rat ratio(ce.lo, static_cast<long>(k));
    if (!best || ratio < *best) {
      best = ratio;
      best_k = k;
    }
  }
  if (!best) return std::nullopt;
  LctEstimate e = LctEstimate::bracket(Rat(0), *best, LctMethod::JetUpper);
  e.heuristic = true;
  e.note = "achieved at k=" + std::to_string(best_k);
  return e;
}

inline std::optional<LctEstimate> lct_upper_from_jets_ideal(const std::vector<Polynomial>& gens,
                                                            unsigned k_max,
                                                            std::vector<std::uint64_t> q_list = {2, 3},
                                                            std::uint64_t cap = kDefaultEnumerationCap) {
  std::optional<Rat> best;
  for (unsigned k = 1; k <= k_max; ++k) {
    CodimEstimate ce = codim_estimate(gens, k, q_list, /*based_at_origin=*/false, cap);
    if (!ce.has_value || !ce.stable) continue;
    Rat ratio(ce.lo, static_cast<long>(k));
    if (!best || ratio < *best) best = ratio;
  }
  if (!best) return std::nullopt;
  LctEstimate e = LctEstimate::bracket(Rat(0), *best, LctMethod::JetUpper);
  e.heuristic = true;
  return e;
}

}  // namespace expsum
