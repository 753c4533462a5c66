#pragma once

#include <optional>
#include <string>
#include <vector>

#include "expsum/modenum.hpp"
#include "expsum/polynomial.hpp"
#include "expsum/simplex.hpp"

namespace expsum {

// Newton polyhedron conv(support) + R_{>=0}^n, kept as its generator set.
struct NewtonPolyhedron {
  int nvars = 1;
  std::vector<Monomial> support;

  static NewtonPolyhedron of(const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("NewtonPolyhedron: zero polynomial");
    return {f.nvars(), f.support()};
  }
};

// Newton distance: the smallest t with t*(1,...,1) in the polyhedron, by
// exact rational LP over convex combinations of the generators plus
// nonnegative slack. Rejects supports containing the origin (f(0) != 0).
inline Rat newton_diagonal_t0(const NewtonPolyhedron& np) {
  if (np.support.empty()) throw std::invalid_argument("newton_diagonal_t0: empty support");
  const int n = np.nvars;
  const int k = static_cast<int>(np.support.size());
  for (const auto& a : np.support)
    if (monomial_degree(a) == 0)
      throw std::invalid_argument("newton_diagonal_t0: origin in support (f(0) != 0)");

  // Variables: lambda_1..lambda_k, t, s_1..s_n.
  // sum lambda = 1;  sum_i lambda_i a_ij + s_j - t = 0;  minimize t.
  LinearProgram lp;
  const int nv = k + 1 + n;
  lp.c.assign(nv, Rat(0));
  lp.c[k] = 1;
  lp.A.assign(n + 1, std::vector<Rat>(nv, Rat(0)));
  lp.b.assign(n + 1, Rat(0));
  for (int i = 0; i < k; ++i) lp.A[0][i] = 1;
  lp.b[0] = 1;
  for (int j = 0; j < n; ++j) {
    auto& row = lp.A[j + 1];
    for (int i = 0; i < k; ++i) row[i] = Rat(np.support[i][j]);
    row[k] = -1;
    row[k + 1 + j] = 1;
  }
  LPResult r = solve_lp(lp);
  if (r.status != LPStatus::Optimal) throw std::logic_error("newton_diagonal_t0: LP not optimal");
  return r.value;
}

// Howald's formula for a monomial ideal: the lct is the largest t with
// (1,...,1) in t * (conv(gens) + R_{>=0}^n), i.e. the reciprocal of the
// Newton distance of the generator set. A zero exponent vector generates the
// unit ideal; that is reported distinctly rather than as a number.
struct MonomialIdealLct {
  bool unit_ideal = false;
  Rat value;  // meaningful only when !unit_ideal
};

inline MonomialIdealLct lct_monomial_ideal(const std::vector<Monomial>& gens, int nvars) {
  if (gens.empty()) throw std::invalid_argument("lct_monomial_ideal: empty generator list");
  for (const auto& g : gens)
    if (monomial_degree(g) == 0) return {true, Rat(0)};
  Rat t0 = newton_diagonal_t0({nvars, gens});
  return {false, Rat(1) / t0};
}

// ----- Compact faces and nondegeneracy --------------------------------------

// A compact face of the Newton polyhedron is the argmin of some strictly
// positive linear functional on the support. Each candidate subset S is
// tested by an exact feasibility LP: does some w >= 1 make <w,a> constant on
// S and at least 1 larger off S?
inline bool is_compact_face(const std::vector<Monomial>& support, const std::vector<int>& in_S,
                            int nvars) {
  int k = static_cast<int>(support.size());
  int nslack = 0;
  for (int i = 0; i < k; ++i)
    if (!in_S[i]) ++nslack;
  // Variables: w'_1..w'_n (w = 1 + w'), cp, cm (c = cp - cm), slacks.
  int nv = nvars + 2 + nslack;
  LinearProgram lp;
  lp.c.assign(nv, Rat(0));
  int slack = 0;
  for (int i = 0; i < k; ++i) {
    std::vector<Rat> row(nv, Rat(0));
    Rat rhs = 0;
    for (int j = 0; j < nvars; ++j) {
      row[j] = Rat(support[i][j]);
      rhs -= Rat(support[i][j]);
    }
    row[nvars] = -1;
    row[nvars + 1] = 1;
    if (in_S[i]) {
      // <1+w', a> = c
      lp.A.push_back(std::move(row));
      lp.b.push_back(rhs);
    } else {
      // <1+w', b> >= c + 1
      row[nvars + 2 + slack] = -1;
      ++slack;
      lp.A.push_back(std::move(row));
      lp.b.push_back(rhs + 1);
    }
  }
  return lp_feasible(lp);
}

// All compact faces, as subsets of the support. Exponential in the support
// size, which stays tiny at desk scale.
inline std::vector<std::vector<Monomial>> compact_faces(const std::vector<Monomial>& support,
                                                        int nvars) {
  int k = static_cast<int>(support.size());
  if (k > 16) throw std::invalid_argument("compact_faces: support too large");
  std::vector<std::vector<Monomial>> faces;
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::vector<int> in_S(k, 0);
    for (int i = 0; i < k; ++i) in_S[i] = (mask >> i) & 1;
    if (is_compact_face(support, in_S, nvars)) {
      std::vector<Monomial> face;
      for (int i = 0; i < k; ++i)
        if (in_S[i]) face.push_back(support[i]);
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

enum class Nondegeneracy { Pass, Fail, Indeterminate };

struct NondegeneracyResult {
  Nondegeneracy status = Nondegeneracy::Indeterminate;
  std::string note;  // heuristic status is always attached
  // Witness for a failure: face index, prime, point.
  std::vector<std::uint64_t> witness;
  std::uint64_t witness_prime = 0;
};

// Brute-force nondegeneracy with respect to the compact faces: for each face
// tau, search (F_p^*)^n for common zeros of all partials of f_tau, over each
// supplied prime. A witness anywhere means Fail; no witness over all primes
// is a Pass, heuristic by nature (the honest answer lives over C).
inline NondegeneracyResult nondegeneracy_check(const Polynomial& f,
                                               std::vector<std::uint64_t> primes = {},
                                               std::uint64_t point_budget = 10'000'000) {
  NondegeneracyResult out;
  if (f.is_zero()) {
    out.note = "zero polynomial";
    return out;
  }
  if (f.constant_term() != 0) {
    out.note = "f(0) != 0: Newton data at the origin not applicable";
    return out;
  }
  const int n = f.nvars();
  int maxdeg = f.total_degree();
  if (primes.empty()) {
    // Default probe primes; bumped above deg f so that exponents do not
    // collapse mod p.
    std::uint64_t lo = std::max<std::uint64_t>(101, static_cast<std::uint64_t>(maxdeg) + 1);
    std::uint64_t p = lo;
    while (primes.size() < 3) {
      if (is_prime_u64(p)) primes.push_back(p);
      ++p;
    }
  }
  auto faces = compact_faces(f.support(), n);
  for (const auto& prime : primes) {
    double pts = std::pow(static_cast<double>(prime - 1), n);
    if (pts > static_cast<double>(point_budget)) {
      out.status = Nondegeneracy::Indeterminate;
      out.note = "torus search over budget";
      return out;
    }
  }
  for (std::size_t fi = 0; fi < faces.size(); ++fi) {
    Polynomial ftau(n);
    for (const auto& e : faces[fi]) ftau.add_term(e, f.coefficient(e));
    std::vector<Polynomial> grads = ftau.gradient();
    for (std::uint64_t p : primes) {
      std::vector<ModPoly> gp;
      for (const auto& g : grads) gp.push_back(ModPoly::from(g, p));
      std::vector<std::uint64_t> z(n, 1);
      for (;;) {
        bool zero_all = true;
        for (const auto& g : gp)
          if (g.eval(z) != 0) { zero_all = false; break; }
        if (zero_all) {
          out.status = Nondegeneracy::Fail;
          out.note = "torus critical point of a face polynomial mod " + std::to_string(p);
          out.witness = z;
          out.witness_prime = p;
          return out;
        }
        int i = 0;
        while (i < n && ++z[i] == p) z[i++] = 1;
        if (i == n) break;
      }
    }
  }
  out.status = Nondegeneracy::Pass;
  out.note = "no torus critical point over primes; heuristic for the complex statement";
  return out;
}

}  // namespace expsum
