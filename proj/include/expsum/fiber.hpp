#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "expsum/common.hpp"
#include "expsum/modenum.hpp"
#include "expsum/parser.hpp"

namespace expsum {

// Exact histogram of F over (Z/p^m)^n: counts[a] = #{x : F(x) = a mod p^m}.
// Every sum value downstream derives from this lossless core.
struct FiberCounts {
  std::uint64_t p = 2;
  unsigned m = 1;
  int nvars = 1;
  std::vector<std::uint64_t> counts;

  std::uint64_t modulus() const { return static_cast<std::uint64_t>(counts.size()); }

  std::uint64_t total() const {
    std::uint64_t s = 0;
    for (auto c : counts) s += c;
    return s;
  }
};

inline void to_json(nlohmann::json& j, const FiberCounts& fc) {
  j = nlohmann::json{{"p", fc.p}, {"m", fc.m}, {"nvars", fc.nvars}, {"counts", fc.counts}};
}

inline void from_json(const nlohmann::json& j, FiberCounts& fc) {
  j.at("p").get_to(fc.p);
  j.at("m").get_to(fc.m);
  j.at("nvars").get_to(fc.nvars);
  j.at("counts").get_to(fc.counts);
}

inline FiberCounts fiber_counts(const Polynomial& F, std::uint64_t p, unsigned m,
                                std::uint64_t cap = kDefaultEnumerationCap, unsigned threads = 0) {
  if (!is_prime_u64(p)) throw std::invalid_argument("fiber_counts: p must be prime");
  if (m < 1) throw std::invalid_argument("fiber_counts: m must be >= 1");
  const unsigned n = static_cast<unsigned>(F.nvars());
  require_budget(pow_u64_saturating(p, m * n), cap);
  const std::uint64_t M = pow_u64_saturating(p, m);

  FiberCounts fc;
  fc.p = p;
  fc.m = m;
  fc.nvars = F.nvars();
  fc.counts = value_histogram(ModPoly::from(F, M), threads);
  if (fc.total() != pow_u64_saturating(p, m * n))
    throw CheckDefect("fiber_counts: histogram does not conserve the point count");
  return fc;
}

// Disk cache of fiber counts, keyed by the canonical polynomial print and the
// (p, m) pair. Purely an optimization for repeated sweeps.
class FiberCache {
 public:
  explicit FiberCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
  }

  static std::string key(const Polynomial& F, std::uint64_t p, unsigned m) {
    return F.to_string() + "|n=" + std::to_string(F.nvars()) + "|p=" + std::to_string(p) +
           "|m=" + std::to_string(m);
  }

  std::filesystem::path path_for(const Polynomial& F, std::uint64_t p, unsigned m) const {
    return dir_ / (fnv1a64(key(F, p, m)) + ".json");
  }

  bool load(const Polynomial& F, std::uint64_t p, unsigned m, FiberCounts& out) const {
    auto path = path_for(F, p, m);
    std::ifstream in(path);
    if (!in) return false;
    nlohmann::json j;
    in >> j;
    if (j.value("key", std::string()) != key(F, p, m)) return false;
    from_json(j.at("fiber"), out);
    return true;
  }

  void store(const Polynomial& F, const FiberCounts& fc) const {
    nlohmann::json j;
    j["key"] = key(F, fc.p, fc.m);
    j["fiber"] = fc;
    std::ofstream out(path_for(F, fc.p, fc.m));
    out << j.dump();
  }

 private:
  static std::string fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
  }

  std::filesystem::path dir_;
};

}  // namespace expsum
