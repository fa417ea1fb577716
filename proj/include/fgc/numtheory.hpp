#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace fgc {

/// A nonincreasing tuple of positive integers.
class Partition {
 public:
  Partition() = default;
  /// Sorts the parts into nonincreasing order; rejects zero parts.
  explicit Partition(std::vector<std::uint64_t> parts);
  Partition(std::initializer_list<std::uint64_t> parts)
      : Partition(std::vector<std::uint64_t>(parts)) {}

  const std::vector<std::uint64_t>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  std::uint64_t total() const { return total_; }
  std::uint64_t operator[](std::size_t i) const { return parts_[i]; }
  bool empty() const { return parts_.empty(); }

  /// "(9,2,1)"
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on the nonincreasing part lists.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<std::uint64_t> parts_;
  std::uint64_t total_ = 0;
};

/// Parses "(9,2,1)" or "9,2,1".
Partition parse_partition(const std::string& text);

/// Exponent of the largest power of p dividing n. Throws for n = 0.
std::uint64_t nu(std::uint64_t p, std::uint64_t n);
std::uint64_t nu(std::uint64_t p, const mpz_class& n);

/// Sum of the base-p digits of n.
std::uint64_t sigma(std::uint64_t p, std::uint64_t n);

bool is_power_of(std::uint64_t p, std::uint64_t n);

/// |lambda|! / prod lambda_i!
mpz_class multinomial(const Partition& lambda);

/// gcd of multinomial(lambda) over the partitions of n into exactly k parts.
mpz_class phi(std::uint64_t n, std::uint64_t k);

/// max{0, ceil((k - sigma_p(n)) / (p - 1))}
std::uint64_t nu_phi_kummer(std::uint64_t p, std::uint64_t n, std::uint64_t k);

/// max{0, min{k - sigma_p(n), nu_p(n)}}
std::uint64_t gamma(std::uint64_t p, std::uint64_t n, std::uint64_t k);

/// Partitions of n into exactly k parts, each a power of p (1 included), in
/// lexicographically descending order.
std::vector<Partition> power_p_partitions(std::uint64_t p, std::uint64_t n, std::uint64_t k);

/// Coefficient of x^n t^k in prod_{i >= 0} (1 - t x^{p^i})^{-1}.
std::uint64_t D(std::uint64_t p, std::uint64_t n, std::uint64_t k);

/// Smallest k' >= k admitting a power-of-p partition of n into k' parts.
/// Returns 0 when there is none.
std::uint64_t smallest_power_p_length(std::uint64_t p, std::uint64_t n, std::uint64_t k);

/// D(p, n, k') for k' = smallest_power_p_length(p, n, k); 0 if none.
std::uint64_t D_prime(std::uint64_t p, std::uint64_t n, std::uint64_t k);

/// Digit expansion partition of n: the unique shortest power-of-p partition.
Partition shortest_power_p_partition(std::uint64_t p, std::uint64_t n);

/// Multiplicity sequence c_i = #{j : lambda_j = 2^i} ordering (dictionary
/// order on the count sequences, lowest power first).
bool count_sequence_less(std::uint64_t p, const Partition& a, const Partition& b);

}  // namespace fgc
