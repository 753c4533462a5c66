#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace expsum {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

// "a/b" with b>0 and gcd(a,b)=1; plain "a" for integers.
inline std::string format_rational(const Rat& r) {
  Int n = rat_num(r), d = rat_den(r);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

inline Rat parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int n(s.substr(0, slash));
    Int d(s.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("zero denominator");
    return Rat(n, d);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  }
}

// Nonnegative residue of a mod m, m > 0.
inline std::uint64_t mod_reduce(const Int& a, std::uint64_t m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r.convert_to<std::uint64_t>();
}

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  std::uint64_t d = n - 1, s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  for (std::uint64_t a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
    if (a % n == 0) continue;
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (std::uint64_t i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) { comp = false; break; }
    }
    if (comp) return false;
  }
  return true;
}

// Writes q = p^s with p prime, s >= 1; false if q is not a prime power.
inline bool prime_power_split(std::uint64_t q, std::uint64_t& p, unsigned& s) {
  if (q < 2) return false;
  if (is_prime_u64(q)) { p = q; s = 1; return true; }
  for (std::uint64_t b = 2; b * b <= q; ++b) {
    if (q % b) continue;
    std::uint64_t r = q;
    unsigned e = 0;
    while (r % b == 0) { r /= b; ++e; }
    if (r != 1 || !is_prime_u64(b)) return false;
    p = b;
    s = e;
    return true;
  }
  return false;
}

// lcm(1..e); the exponent denominators this feeds are small, so uint64 suffices.
inline std::uint64_t lcm_upto(unsigned e) {
  if (e < 1) throw std::invalid_argument("lcm_upto requires e >= 1");
  if (e > 40) throw std::invalid_argument("lcm_upto: e too large");
  std::uint64_t l = 1;
  for (unsigned k = 2; k <= e; ++k) l = std::lcm(l, static_cast<std::uint64_t>(k));
  return l;
}

}  // namespace expsum
