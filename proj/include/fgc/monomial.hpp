#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

namespace fgc {

inline constexpr std::size_t kMaxVars = 16;
inline constexpr unsigned kMaxTrunc = 255;

/// Exponent vector packed into 16 bytes. Slots past the ambient variable
/// count stay zero, so equality and hashing ignore the arity.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};

  Monomial() = default;
  explicit Monomial(const std::vector<unsigned>& exps);

  std::uint8_t operator[](std::size_t i) const { return e[i]; }
  std::uint8_t& operator[](std::size_t i) { return e[i]; }

  unsigned degree() const {
    unsigned d = 0;
    for (auto x : e) d += x;
    return d;
  }

  /// Degree restricted to the slots whose bit is set in mask.
  unsigned degree(std::uint32_t mask) const {
    unsigned d = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (mask >> i & 1u) d += e[i];
    return d;
  }

  std::vector<unsigned> exponents(std::size_t nvars) const {
    return std::vector<unsigned>(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(nvars));
  }

  /// Caller guarantees the total degree of the product is at most kMaxTrunc.
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint8_t>(a.e[i] + b.e[i]);
    return r;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic: lower total degree first; within a degree the
/// larger exponent of the earliest variable first (x1^2 before x1*x2).
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    auto da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return b.e < a.e;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::uint64_t lo, hi;
    std::memcpy(&lo, m.e.data(), 8);
    std::memcpy(&hi, m.e.data() + 8, 8);
    std::uint64_t h = lo * 0x9E3779B97F4A7C15ull;
    h ^= (hi + 0x632BE59BD9B4E019ull + (h << 6) + (h >> 2)) * 0xC2B2AE3D27D4EB4Full;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

/// "x1^2*x3" with default names x1..xn, or the given display names.
/// The unit monomial prints as "1".
std::string monomial_to_string(const Monomial& m, std::size_t nvars,
                               const std::vector<std::string>* names = nullptr);

inline std::uint32_t all_vars_mask(std::size_t nvars) {
  return nvars >= 32 ? ~0u : ((1u << nvars) - 1u);
}

}  // namespace fgc
