#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

namespace expsum {

// Hard ceiling on enumeration work, in evaluation points. Refusals are loud:
// callers get the budget that would have been needed.
constexpr std::uint64_t kDefaultEnumerationCap = 100'000'000ull;

class BudgetError : public std::runtime_error {
 public:
  BudgetError(std::uint64_t required, std::uint64_t cap)
      : std::runtime_error("enumeration budget exceeded: needs " + std::to_string(required) +
                           " points, cap is " + std::to_string(cap)),
        required_points(required),
        cap_points(cap) {}
  std::uint64_t required_points;
  std::uint64_t cap_points;
};

class CatalogError : public std::runtime_error {
 public:
  explicit CatalogError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a theorem-backed identity or inequality check fails with exact
// inputs; that is an engine defect, not new mathematics.
class CheckDefect : public std::runtime_error {
 public:
  explicit CheckDefect(const std::string& what) : std::runtime_error(what) {}
};

// p^k as a point count, saturating above any practical cap.
inline std::uint64_t pow_u64_saturating(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
    r *= base;
  }
  return r;
}

inline void require_budget(std::uint64_t required, std::uint64_t cap) {
  if (required > cap) throw BudgetError(required, cap);
}

// Worker count: EXPSUM_THREADS when set, else hardware concurrency, clamped.
inline unsigned worker_count() {
  if (const char* env = std::getenv("EXPSUM_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1 && v <= 256) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  return hw > 16 ? 16u : hw;
}

}  // namespace expsum
