#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>

#include "fgc/numtheory.hpp"

using namespace fgc;

namespace {

// Trial division, independent of the library's nu.
std::uint64_t naive_nu(std::uint64_t p, mpz_class v) {
  std::uint64_t e = 0;
  while (v != 0 && v % p == 0) {
    v /= p;
    ++e;
  }
  return e;
}

mpz_class factorial(std::uint64_t n) {
  mpz_class f = 1;
  for (std::uint64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

void each_partition(std::uint64_t n, std::uint64_t k, const std::function<void(const std::vector<std::uint64_t>&)>& f) {
  std::vector<std::uint64_t> parts;
  std::function<void(std::uint64_t, std::uint64_t)> rec = [&](std::uint64_t left, std::uint64_t cap) {
    if (parts.size() == k) {
      if (left == 0) f(parts);
      return;
    }
    for (std::uint64_t a = std::min(left, cap); a >= 1; --a) {
      parts.push_back(a);
      rec(left - a, a);
      parts.pop_back();
    }
  };
  rec(n, n);
}

mpz_class naive_phi(std::uint64_t n, std::uint64_t k) {
  mpz_class g = 0;
  each_partition(n, k, [&](const std::vector<std::uint64_t>& parts) {
    mpz_class m = factorial(n);
    for (auto a : parts) m /= factorial(a);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m.get_mpz_t());
  });
  return g;
}

}  // namespace

TEST_CASE("nu and sigma") {
  CHECK(nu(2, 8) == 3);
  CHECK(nu(2, 6) == 1);
  CHECK(nu(3, 10) == 0);
  CHECK(sigma(2, 6) == 2);
  CHECK(sigma(3, 12) == 2);
  for (std::uint64_t p : {2, 3, 5, 7})
    for (std::uint64_t q = p; q < 100000; q *= p) CHECK(sigma(p, q) == 1);
  CHECK(nu(3, mpz_class("1853020188851841")) == 32);
}

TEST_CASE("multinomial") {
  CHECK(multinomial(Partition{1, 1}) == 2);
  CHECK(multinomial(Partition{4, 1, 1}) == 30);
  CHECK(multinomial(Partition{2, 2, 2}) == 90);
}

TEST_CASE("phi against gcd of multinomials") {
  CHECK(phi(4, 2) == 2);
  CHECK(phi(6, 3) == 30);
  for (std::uint64_t n = 1; n <= 18; ++n) {
    CHECK(phi(n, 1) == 1);
    for (std::uint64_t k = 1; k <= n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(phi(n, k) == naive_phi(n, k));
    }
  }
}

TEST_CASE("Kummer form agrees with trial division") {
  CHECK(nu_phi_kummer(2, 6, 3) == 1);
  CHECK(nu_phi_kummer(2, 4, 2) == 1);
  for (std::uint64_t p : {2, 3, 5})
    for (std::uint64_t n = 1; n <= 60; ++n)
      for (std::uint64_t k = 1; k <= n; ++k) {
        if (k <= sigma(p, n)) CHECK(nu_phi_kummer(p, n, k) == 0);
        CHECK(nu_phi_kummer(p, n, k) == naive_nu(p, phi(n, k)));
      }
}

TEST_CASE("gamma") {
  CHECK(gamma(2, 4, 3) == 2);
  CHECK(gamma(2, 6, 2) == 0);
  for (std::uint64_t k = 1; k <= 6; ++k) CHECK(gamma(2, 1, k) == 0);
}

TEST_CASE("power-of-p partitions and D") {
  CHECK(power_p_partitions(2, 4, 2) == std::vector<Partition>{Partition{2, 2}});
  CHECK(power_p_partitions(3, 12, 4) == std::vector<Partition>{Partition{9, 1, 1, 1}, Partition{3, 3, 3, 3}});
  CHECK(power_p_partitions(3, 12, 2) == std::vector<Partition>{Partition{9, 3}});
  CHECK(D(2, 4, 2) == 1);
  CHECK(D(3, 12, 4) == 2);
  CHECK(D(2, 3, 5) == 0);
  for (std::uint64_t p : {2, 3})
    for (std::uint64_t n = 1; n <= 30; ++n)
      for (std::uint64_t k = 1; k <= n; ++k) {
        std::uint64_t count = 0;
        each_partition(n, k, [&](const std::vector<std::uint64_t>& parts) {
          count += std::all_of(parts.begin(), parts.end(), [&](auto a) { return is_power_of(p, a); });
        });
        CHECK(D(p, n, k) == count);
      }
}

TEST_CASE("D_prime") {
  CHECK(D_prime(3, 12, 2) == 1);
  CHECK(smallest_power_p_length(3, 12, 3) == 4);
  CHECK(D_prime(3, 12, 3) == 2);
  for (std::uint64_t q = 1; q <= 1024; q *= 2) CHECK(D_prime(2, q, 1) == 1);
}

TEST_CASE("partition parsing") {
  CHECK(parse_partition("(9,1,1,1)") == Partition{9, 1, 1, 1});
  CHECK(Partition{1, 3, 2}.parts() == std::vector<std::uint64_t>{3, 2, 1});
  CHECK_THROWS(Partition{2, 0});
}
