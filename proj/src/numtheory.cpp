#include "fgc/numtheory.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace fgc {

Partition::Partition(std::vector<std::uint64_t> parts) : parts_(std::move(parts)) {
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  for (auto part : parts_) {
    if (part == 0) throw std::invalid_argument("partition parts must be positive");
    total_ += part;
  }
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

Partition parse_partition(const std::string& text) {
  std::vector<std::uint64_t> parts;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::size_t used = 0;
    auto value = std::stoull(token, &used);
    if (used != token.size()) throw std::invalid_argument("bad partition: " + text);
    parts.push_back(value);
    token.clear();
  };
  for (char ch : text) {
    if (ch >= '0' && ch <= '9') {
      token += ch;
    } else if (ch == ',' || ch == ' ' || ch == '(' || ch == ')' || ch == '[' || ch == ']') {
      flush();
    } else {
      throw std::invalid_argument("bad partition: " + text);
    }
  }
  flush();
  return Partition(std::move(parts));
}

std::uint64_t nu(std::uint64_t p, std::uint64_t n) {
  if (p < 2) throw std::invalid_argument("nu: p must be prime");
  if (n == 0) throw std::domain_error("nu: valuation of 0 is infinite");
  std::uint64_t e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

std::uint64_t nu(std::uint64_t p, const mpz_class& n) {
  if (p < 2) throw std::invalid_argument("nu: p must be prime");
  if (n == 0) throw std::domain_error("nu: valuation of 0 is infinite");
  mpz_class rest = abs(n);
  std::uint64_t e = 0;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    ++e;
  }
  return e;
}

std::uint64_t sigma(std::uint64_t p, std::uint64_t n) {
  if (p < 2) throw std::invalid_argument("sigma: p must be prime");
  std::uint64_t s = 0;
  while (n) {
    s += n % p;
    n /= p;
  }
  return s;
}

bool is_power_of(std::uint64_t p, std::uint64_t n) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

mpz_class multinomial(const Partition& lambda) {
  if (lambda.empty()) throw std::invalid_argument("multinomial of the empty partition");
  mpz_class result;
  mpz_fac_ui(result.get_mpz_t(), lambda.total());
  mpz_class f;
  for (auto part : lambda.parts()) {
    mpz_fac_ui(f.get_mpz_t(), part);
    mpz_divexact(result.get_mpz_t(), result.get_mpz_t(), f.get_mpz_t());
  }
  return result;
}

namespace {

// min over compositions of m into j positive parts of sum sigma_q(part),
// for all j, m <= bound. Legendre turns this into the minimal q-valuation
// of a multinomial.
struct DigitSumTable {
  std::uint64_t bound = 0;
  std::vector<std::vector<std::uint32_t>> best;
};

constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

DigitSumTable build_table(std::uint64_t q, std::uint64_t bound) {
  DigitSumTable t;
  t.bound = bound;
  t.best.assign(bound + 1, std::vector<std::uint32_t>(bound + 1, kUnreachable));
  t.best[0][0] = 0;
  std::vector<std::uint32_t> digit(bound + 1);
  for (std::uint64_t a = 0; a <= bound; ++a) digit[a] = static_cast<std::uint32_t>(sigma(q, a));
  for (std::uint64_t j = 1; j <= bound; ++j) {
    const auto& prev = t.best[j - 1];
    auto& cur = t.best[j];
    for (std::uint64_t m = j; m <= bound; ++m) {
      std::uint32_t best = kUnreachable;
      for (std::uint64_t a = 1; a + (j - 1) <= m; ++a) {
        auto rest = prev[m - a];
        if (rest == kUnreachable) continue;
        best = std::min(best, rest + digit[a]);
      }
      cur[m] = best;
    }
  }
  return t;
}

std::uint64_t min_multinomial_valuation(std::uint64_t q, std::uint64_t n, std::uint64_t k) {
  static std::mutex mutex;
  static std::map<std::uint64_t, DigitSumTable> tables;
  std::lock_guard lock(mutex);
  auto& table = tables[q];
  if (table.bound < n) table = build_table(q, std::max<std::uint64_t>(n, 2 * table.bound));
  auto best = table.best[k][n];
  return (best - sigma(q, n)) / (q - 1);
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<bool> composite(n + 1, false);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return primes;
}

}  // namespace

mpz_class phi(std::uint64_t n, std::uint64_t k) {
  if (k == 0 || n < k) throw std::invalid_argument("phi: requires n >= k >= 1");
  mpz_class result = 1;
  mpz_class factor;
  for (auto q : primes_up_to(n)) {
    auto e = min_multinomial_valuation(q, n, k);
    if (e == 0) continue;
    mpz_ui_pow_ui(factor.get_mpz_t(), q, e);
    result *= factor;
  }
  return result;
}

std::uint64_t nu_phi_kummer(std::uint64_t p, std::uint64_t n, std::uint64_t k) {
  auto s = sigma(p, n);
  if (k <= s) return 0;
  return (k - s + (p - 2)) / (p - 1);
}

std::uint64_t gamma(std::uint64_t p, std::uint64_t n, std::uint64_t k) {
  auto s = sigma(p, n);
  if (k <= s) return 0;
  return std::min(k - s, nu(p, n));
}

namespace {

void enumerate_power_p(std::uint64_t p, std::uint64_t remaining, std::uint64_t slots,
                       std::uint64_t max_part, std::vector<std::uint64_t>& current,
                       std::vector<Partition>& out) {
  if (slots == 0) {
    if (remaining == 0) out.emplace_back(current);
    return;
  }
  // Every remaining slot needs at least 1 and at most max_part.
  if (remaining < slots) return;
  for (std::uint64_t part = max_part; part >= 1; part /= p) {
    if (part <= remaining && part * slots >= remaining) {
      current.push_back(part);
      enumerate_power_p(p, remaining - part, slots - 1, part, current, out);
      current.pop_back();
    }
    if (part == 1) break;
  }
}

std::uint64_t largest_power_at_most(std::uint64_t p, std::uint64_t n) {
  std::uint64_t q = 1;
  while (q <= n / p) q *= p;
  return q;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("partition count overflow");
  return r;
}

}  // namespace

std::vector<Partition> power_p_partitions(std::uint64_t p, std::uint64_t n, std::uint64_t k) {
  std::vector<Partition> out;
  if (n == 0 || k == 0 || k > n) return out;
  std::vector<std::uint64_t> current;
  enumerate_power_p(p, n, k, largest_power_at_most(p, n), current, out);
  return out;
}

std::uint64_t D(std::uint64_t p, std::uint64_t n, std::uint64_t k) {
  if (p < 2) throw std::invalid_argument("D: p must be prime");
  if (k > n) return 0;
  // coeff[m][j] of x^m t^j, multiplied through one factor 1/(1 - t x^q) at a time.
  std::vector<std::vector<std::uint64_t>> coeff(n + 1, std::vector<std::uint64_t>(k + 1, 0));
  coeff[0][0] = 1;
  for (std::uint64_t q = 1; q <= n; q *= p) {
    for (std::uint64_t m = q; m <= n; ++m)
      for (std::uint64_t j = 1; j <= k; ++j) coeff[m][j] = checked_add(coeff[m][j], coeff[m - q][j - 1]);
    if (q > n / p) break;
  }
  return coeff[n][k];
}

std::uint64_t smallest_power_p_length(std::uint64_t p, std::uint64_t n, std::uint64_t k) {
  for (std::uint64_t len = std::max<std::uint64_t>(k, 1); len <= n; ++len)
    if (D(p, n, len) > 0) return len;
  return 0;
}

std::uint64_t D_prime(std::uint64_t p, std::uint64_t n, std::uint64_t k) {
  auto len = smallest_power_p_length(p, n, k);
  return len == 0 ? 0 : D(p, n, len);
}

Partition shortest_power_p_partition(std::uint64_t p, std::uint64_t n) {
  std::vector<std::uint64_t> parts;
  std::uint64_t place = 1;
  while (n) {
    for (std::uint64_t d = 0; d < n % p; ++d) parts.push_back(place);
    n /= p;
    place *= p;
  }
  return Partition(std::move(parts));
}

bool count_sequence_less(std::uint64_t p, const Partition& a, const Partition& b) {
  auto counts = [p](const Partition& lambda) {
    std::vector<std::uint64_t> c;
    for (auto part : lambda.parts()) {
      auto i = nu(p, part);
      if (c.size() <= i) c.resize(i + 1, 0);
      ++c[i];
    }
    return c;
  };
  return counts(a) < counts(b);
}

}  // namespace fgc
