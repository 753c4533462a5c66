#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "expsum/numeric.hpp"

namespace expsum {

// Exponent vector, dense, length = nvars. Small dimension by design.
using Monomial = std::vector<std::uint32_t>;

constexpr int kMaxVars = 16;

inline unsigned monomial_degree(const Monomial& m) {
  unsigned d = 0;
  for (auto e : m) d += e;
  return d;
}

// Graded lexicographic, descending: higher total degree first, then
// lexicographically larger exponent vector first. Gives the canonical term
// order used for storage, printing and hashing.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = monomial_degree(a), db = monomial_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

// Sparse multivariate polynomial over Z with arbitrary-precision
// coefficients. Invariants: no stored coefficient is zero, every exponent
// vector has length nvars, terms are kept in canonical (descending grlex)
// order, so equality of polynomials is equality of representations.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Int, GrlexGreater>;

  explicit Polynomial(int nvars) : nvars_(check_nvars(nvars)) {}

  static Polynomial constant(int nvars, Int c) {
    Polynomial p(nvars);
    p.add_term(Monomial(nvars, 0), std::move(c));
    return p;
  }

  static Polynomial variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw std::invalid_argument("variable index out of range");
    Monomial m(nvars, 0);
    m[i] = 1;
    Polynomial p(nvars);
    p.add_term(std::move(m), 1);
    return p;
  }

  static Polynomial monomial(int nvars, Monomial e, Int c) {
    if (static_cast<int>(e.size()) != nvars) throw std::invalid_argument("exponent length mismatch");
    Polynomial p(nvars);
    p.add_term(std::move(e), std::move(c));
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(Monomial e, Int c) {
    if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("exponent length mismatch");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(std::move(e), std::move(c));
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial& operator+=(const Polynomial& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator-() const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same(b);
    Polynomial r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Monomial e(a.nvars_);
        for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(std::move(e), ca * cb);
      }
    return r;
  }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial& operator*=(const Int& k) {
    if (k == 0) { terms_.clear(); return *this; }
    for (auto& [e, c] : terms_) c *= k;
    return *this;
  }
  friend Polynomial operator*(Polynomial a, const Int& k) { return a *= k; }
  friend Polynomial operator*(const Int& k, Polynomial a) { return a *= k; }

  Polynomial pow(unsigned e) const {
    Polynomial r = constant(nvars_, 1);
    Polynomial b = *this;
    while (e) {
      if (e & 1) r *= b;
      if (e >>= 1) b *= b;
    }
    return r;
  }

  Int eval(const std::vector<Int>& x) const {
    if (static_cast<int>(x.size()) != nvars_) throw std::invalid_argument("point dimension mismatch");
    Int acc = 0;
    for (const auto& [e, c] : terms_) {
      Int t = c;
      for (int i = 0; i < nvars_; ++i)
        for (std::uint32_t k = 0; k < e[i]; ++k) t *= x[i];
      acc += t;
    }
    return acc;
  }

  Int eval_i64(const std::vector<long long>& x) const {
    std::vector<Int> xx(x.begin(), x.end());
    return eval(xx);
  }

  Polynomial derivative(int var) const {
    if (var < 0 || var >= nvars_) throw std::invalid_argument("variable index out of range");
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Monomial m = e;
      m[var] -= 1;
      r.add_term(std::move(m), c * e[var]);
    }
    return r;
  }

  std::vector<Polynomial> gradient() const {
    std::vector<Polynomial> g;
    g.reserve(nvars_);
    for (int i = 0; i < nvars_; ++i) g.push_back(derivative(i));
    return g;
  }

  // -1 for the zero polynomial.
  int total_degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(monomial_degree(terms_.begin()->first));
  }

  int lowest_degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(monomial_degree(terms_.rbegin()->first));
  }

  int degree_in(int var) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
    return d;
  }

  Polynomial homogeneous_part(unsigned d) const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_)
      if (monomial_degree(e) == d) r.terms_.emplace(e, c);
    return r;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    return total_degree() == lowest_degree();
  }

  Int coefficient(const Monomial& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
  }

  Int constant_term() const { return coefficient(Monomial(nvars_, 0)); }

  // F(x + y), constant term included.
  Polynomial compose_shift(const std::vector<Int>& y) const {
    if (static_cast<int>(y.size()) != nvars_) throw std::invalid_argument("shift dimension mismatch");
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
      // Expand c * prod_i (x_i + y_i)^{e_i} one variable at a time.
      std::vector<std::pair<Monomial, Int>> acc{{Monomial(nvars_, 0), c}};
      for (int i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        // Binomial row for (x_i + y_i)^{e_i}.
        std::vector<Int> row(e[i] + 1);
        row[0] = 1;
        for (std::uint32_t k = 1; k <= e[i]; ++k)
          row[k] = row[k - 1] * (e[i] - k + 1) / k;
        std::vector<Int> ypow(e[i] + 1);
        ypow[0] = 1;
        for (std::uint32_t k = 1; k <= e[i]; ++k) ypow[k] = ypow[k - 1] * y[i];
        std::vector<std::pair<Monomial, Int>> next;
        next.reserve(acc.size() * (e[i] + 1));
        for (const auto& [m, cc] : acc)
          for (std::uint32_t k = 0; k <= e[i]; ++k) {
            Monomial m2 = m;
            m2[i] = k;
            next.emplace_back(std::move(m2), cc * row[k] * ypow[e[i] - k]);
          }
        acc = std::move(next);
      }
      for (auto& [m, cc] : acc) r.add_term(std::move(m), std::move(cc));
    }
    return r;
  }

  // f_y(x) = F(x + y) - F(y); vanishes at 0 by construction.
  Polynomial taylor_shift(const std::vector<Int>& y) const {
    Polynomial r = compose_shift(y);
    Monomial zero(nvars_, 0);
    r.terms_.erase(zero);
    return r;
  }

  // Substitute x_i -> k * x_i.
  Polynomial scale_vars(const Int& k) const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
      Int f = c;
      unsigned d = monomial_degree(e);
      for (unsigned i = 0; i < d; ++i) f *= k;
      r.add_term(e, std::move(f));
    }
    return r;
  }

  std::vector<Monomial> support() const {
    std::vector<Monomial> s;
    s.reserve(terms_.size());
    for (const auto& [e, c] : terms_) s.push_back(e);
    return s;
  }

  // Canonical printer: descending grlex with explicit '*' and '^'.
  // Round-trips through parse_polynomial.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Int a = c;
      if (first) {
        if (a < 0) { os << "-"; a = -a; }
      } else {
        os << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      first = false;
      bool printed = false;
      if (a != 1 || monomial_degree(e) == 0) {
        os << a.str();
        printed = true;
      }
      for (int i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        if (printed) os << "*";
        os << var_name(i);
        if (e[i] > 1) os << "^" << e[i];
        printed = true;
      }
    }
    return os.str();
  }

  std::string var_name(int i) const {
    static const char* alias[3] = {"x", "y", "z"};
    if (nvars_ <= 3) return alias[i];
    return "x" + std::to_string(i + 1);
  }

 private:
  static int check_nvars(int n) {
    if (n < 1 || n > kMaxVars) throw std::invalid_argument("nvars must be in [1, 16]");
    return n;
  }
  void check_same(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("nvars mismatch");
  }

  int nvars_;
  TermMap terms_;
};

// f = sum of homogeneous parts, degrees strictly increasing; lowest nonzero
// degree is reported as r.
struct HomogeneousDecomposition {
  unsigned lowest_degree = 0;
  std::vector<std::pair<unsigned, Polynomial>> parts;
};

inline HomogeneousDecomposition homogeneous_parts(const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("homogeneous_parts: zero polynomial");
  HomogeneousDecomposition d;
  std::map<unsigned, Polynomial> by_deg;
  for (const auto& [e, c] : f.terms()) {
    unsigned dg = monomial_degree(e);
    auto it = by_deg.find(dg);
    if (it == by_deg.end()) it = by_deg.emplace(dg, Polynomial(f.nvars())).first;
    it->second.add_term(e, c);
  }
  d.lowest_degree = by_deg.begin()->first;
  for (auto& [dg, p] : by_deg) d.parts.emplace_back(dg, std::move(p));
  return d;
}

// Lowest degree of the Taylor expansion of f at the given point; empty
// optional encodes +infinity (zero polynomial), 0 means f(at) != 0.
inline std::optional<unsigned> order_of_vanishing(const Polynomial& f, const std::vector<Int>& at) {
  if (f.is_zero()) return std::nullopt;
  Polynomial full = f.compose_shift(at);
  if (full.is_zero()) return std::nullopt;
  return static_cast<unsigned>(full.lowest_degree());
}

}  // namespace expsum
