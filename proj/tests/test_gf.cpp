#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "expsum/gf.hpp"
#include "expsum/parser.hpp"
#include "oracle/brute_sums.hpp"
#include "oracle/gf_direct.hpp"

using namespace expsum;

namespace {
Polynomial P(const std::string& s, int n) { return parse_polynomial(s, n); }
}

TEST_CASE("bundled Conway table matches a fresh computation") {
  REQUIRE_FALSE(bundled_conway_table().empty());
  for (const auto& e : bundled_conway_table()) {
    auto c = compute_conway_polynomial(e.p, e.s);
    REQUIRE(c.size() == e.s + 1);
    for (unsigned k = 0; k <= e.s; ++k) REQUIRE(c[k] == e.coeffs[k]);
  }
}

TEST_CASE("known Conway polynomials") {
  REQUIRE(compute_conway_polynomial(2, 1) == std::vector<std::uint64_t>{1, 1});
  REQUIRE(compute_conway_polynomial(5, 1) == std::vector<std::uint64_t>{3, 1});   // x - 2
  REQUIRE(compute_conway_polynomial(7, 1) == std::vector<std::uint64_t>{4, 1});   // x - 3
  REQUIRE(compute_conway_polynomial(2, 2) == std::vector<std::uint64_t>{1, 1, 1});
  REQUIRE(compute_conway_polynomial(2, 3) == std::vector<std::uint64_t>{1, 1, 0, 1});
  REQUIRE(compute_conway_polynomial(3, 2) == std::vector<std::uint64_t>{2, 2, 1});
  REQUIRE(compute_conway_polynomial(3, 3) == std::vector<std::uint64_t>{1, 2, 0, 1});
  REQUIRE(compute_conway_polynomial(5, 2) == std::vector<std::uint64_t>{2, 4, 1});
  REQUIRE(compute_conway_polynomial(7, 2) == std::vector<std::uint64_t>{3, 6, 1});
}

TEST_CASE("Zech tables implement field arithmetic") {
  for (auto [p, s] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {2, 3}, {3, 2}, {5, 2}, {7, 1}, {3, 3}}) {
    const GFTable& gf = gf_table(p, s);
    std::uint64_t q = gf.q();
    // Additive group: a + 0 = a, a + (-a) = 0; multiplicative: a * 1 = a.
    for (std::uint64_t a = 0; a < q; ++a) {
      auto ea = static_cast<GFTable::Elem>(a);
      REQUIRE(gf.add(ea, gf.zero()) == ea);
      REQUIRE(gf.add(ea, gf.neg(ea)) == gf.zero());
      REQUIRE(gf.mul(ea, gf.one()) == ea);
    }
    // Distributivity on a sample.
    std::mt19937 rng(p * 100 + s);
    std::uniform_int_distribution<std::uint64_t> el(0, q - 1);
    for (int it = 0; it < 50; ++it) {
      auto a = static_cast<GFTable::Elem>(el(rng));
      auto b = static_cast<GFTable::Elem>(el(rng));
      auto c = static_cast<GFTable::Elem>(el(rng));
      REQUIRE(gf.mul(a, gf.add(b, c)) == gf.add(gf.mul(a, b), gf.mul(a, c)));
      REQUIRE(gf.add(a, b) == gf.add(b, a));
    }
    // Trace is F_p-linear and surjective onto F_p.
    std::vector<bool> seen(p, false);
    for (std::uint64_t a = 0; a < q; ++a) seen[gf.trace(static_cast<GFTable::Elem>(a))] = true;
    for (std::uint64_t c = 0; c < p; ++c) REQUIRE(seen[c]);
    for (int it = 0; it < 30; ++it) {
      auto a = static_cast<GFTable::Elem>(el(rng));
      auto b = static_cast<GFTable::Elem>(el(rng));
      REQUIRE((gf.trace(a) + gf.trace(b)) % p == gf.trace(gf.add(a, b)));
    }
  }
}

TEST_CASE("character sums: documented examples") {
  REQUIRE(finite_field_character_sum(P("x", 1), 5).modulus < 1e-12);
  REQUIRE(finite_field_character_sum(P("x^2", 1), 3).modulus ==
          Catch::Approx(std::sqrt(3.0)).margin(1e-12));
  // Non-reduced h = x^2 y at q = 3: enumeration gives 3 + i sqrt(3) - i sqrt(3) = 3.
  REQUIRE(finite_field_character_sum(P("x^2*y", 2), 3).modulus == Catch::Approx(3.0).margin(1e-12));
}

TEST_CASE("character sums match the direct-arithmetic oracle") {
  std::mt19937 rng(71);
  std::uniform_int_distribution<int> coeff(-9, 9), ex(0, 4);
  for (auto [p, s] : std::vector<std::pair<std::uint64_t, unsigned>>{{3, 1}, {5, 1}, {3, 2}, {2, 3}, {7, 2}}) {
    oracle::DirectGF dgf{p, s, compute_conway_polynomial(p, s)};
    for (int it = 0; it < 8; ++it) {
      int n = 1 + (it % 2);
      Polynomial h(n);
      for (int t = 0; t < 3; ++t) {
        Monomial e(n);
        for (int i = 0; i < n; ++i) e[i] = ex(rng);
        h.add_term(e, coeff(rng));
      }
      std::uint64_t q = 1;
      for (unsigned i = 0; i < s; ++i) q *= p;
      auto got = finite_field_character_sum(h, q);
      auto want = oracle::brute_char_sum_direct(h, dgf);
      REQUIRE(std::abs(got.value() - want) < 1e-9);
    }
  }
}

TEST_CASE("Gauss sums over extensions have modulus sqrt(q)") {
  for (std::uint64_t q : {3ull, 5ull, 7ull, 9ull, 25ull, 27ull}) {
    auto s = finite_field_character_sum(P("x^2", 1), q);
    REQUIRE(s.modulus == Catch::Approx(std::sqrt(static_cast<double>(q))).margin(1e-9));
  }
}

TEST_CASE("scheme character sums: documented examples") {
  auto a = scheme_character_sum({P("x", 2)}, P("y", 2), 5);
  REQUIRE(a.points == 5);
  REQUIRE(a.sum.modulus < 1e-12);

  auto b = scheme_character_sum({P("x^2 + y^2", 2)}, P("x", 2), 3);
  REQUIRE(b.points == 1);
  REQUIRE(b.sum.value().real() == Catch::Approx(1.0).margin(1e-12));
  REQUIRE(b.sum.value().imag() == Catch::Approx(0.0).margin(1e-12));

  auto c = scheme_character_sum({P("y", 2)}, P("x^2", 2), 7);
  REQUIRE(c.points == 7);
  REQUIRE(c.sum.modulus == Catch::Approx(std::sqrt(7.0)).margin(1e-12));
}

TEST_CASE("reduce_mod lands in the right field") {
  auto r = reduce_mod(P("3*x^2 + 5", 1), 3);
  REQUIRE(r.terms.size() == 1);
  REQUIRE(monomial_degree(r.terms[0].first) == 0);
  auto r2 = reduce_mod(P("x^2 + y^2", 2), 2);
  REQUIRE(r2.terms.size() == 2);
  auto r3 = reduce_mod(P("7*x", 1), 7);
  REQUIRE(r3.is_zero());
  REQUIRE_THROWS(reduce_mod(P("x", 1), 12));   // not a prime power
  REQUIRE_THROWS(reduce_mod(P("x", 1), 16));   // s > 3
}

TEST_CASE("unnormalized sums are bounded by the point count") {
  auto s = finite_field_character_sum(P("x^3 + y^3", 2), 7);
  REQUIRE(s.normalization == 1.0);
  REQUIRE(s.modulus <= 49.0 + s.abs_error_bound);
}
