#include <doctest.h>

#include "../support.hpp"
#include "fgc/ringpres.hpp"
#include "fgc/weil.hpp"

using namespace fgc;
using fgc::testing::ms;

namespace {
const auto F2 = CoefficientRing::prime_field(2);
}

TEST_CASE("half-Weil multiplicative") {
  auto u = ModSeries::one(F2, 3, 9) + ms("x1*x2^2*x3^2", 2, 3, 9);
  // p = 2: a single factor u(x1, x1, x2).
  auto e = half_weil_multiplicative(u, 2, 0, false);
  CHECK(e == ModSeries::one(F2, 2, 9) + ms("x1^3*x2^2", 2, 2, 9));
  CHECK(half_weil_multiplicative(ModSeries::one(F2, 2, 6), 2) == ModSeries::one(F2, 1, 6));
  auto ah = ah_extension(2, 4, 2, 12);
  REQUIRE(ah.series);
  auto w = half_weil_multiplicative(*ah.series, 2, 1);
  CHECK(delta1(w, Target::Multiplicative, 1, 1) == pow(*ah.series, 2));
}

TEST_CASE("delta1") {
  CHECK(delta1(ModSeries::one(F2, 1, 5), Target::Multiplicative) == ModSeries::one(F2, 2, 5));
  for (std::uint64_t n = 2; n <= 12; ++n) {
    auto e = QSeries::monomial(CoefficientRing::integers(), 1, unsigned(n), Monomial(std::vector<unsigned>{unsigned(n)}),
                               Rational(1));
    auto expected = scalar_mul(zeta(n, 2), Rational(-phi(n, 2)));
    CHECK(delta1(e, Target::Additive) == expected);
  }
}

TEST_CASE("half-Weil additive table") {
  CHECK(half_weil_additive(ms("x1^2*x2^2", 2, 2, 4), 2) == ms("x1^4", 2, 1, 4));
  CHECK(half_weil_additive(ms("x1^4*x2^2 + x1^2*x2^4", 2, 2, 6), 2).is_zero());
  CHECK(half_weil_additive(ModSeries(F2, 2, 6), 2).is_zero());
  for (std::uint64_t p : {2, 3, 5})
    for (std::uint64_t n = 2; n <= 32; ++n) {
      auto ring = CoefficientRing::prime_field(p);
      auto e = half_weil_additive(zeta(n, 2, ring), p);
      CAPTURE(p);
      CAPTURE(n);
      if (is_power_of(p, n))
        CHECK(e == -ModSeries::monomial(ring, 1, e.trunc(), Monomial(std::vector<unsigned>{unsigned(n)}), Residue{1}));
      else
        CHECK(e.is_zero());
    }
}

TEST_CASE("half-Weil additive form is a delta1 cocycle") {
  for (std::uint64_t p : {2, 3})
    for (std::uint64_t n = 3; n <= 12; ++n)
      for (const auto& b : additive_basis(p, n, 3)) {
        auto e = half_weil_additive(b.expand(), p);
        CHECK(delta1(e, Target::Additive).is_zero());
      }
}

TEST_CASE("classical Weil form") {
  auto ah = ah_extension(2, 4, 3, 12);
  REQUIRE(ah.series);
  const auto& u = *ah.series;
  auto v = [&](std::size_t s) { return ModSeries::variable(F2, 3, 12, s); };
  auto c = v(0), x = v(1), y = v(2);
  // p = 2: u(x1, x1, x2) / u(x1, x2, x2).
  CHECK(classical_weil(u, 2, 1) == substitute(u, {c, x, x, y}) * invert(substitute(u, {c, x, y, y})));
  for (auto [p, n] : {std::pair{2ull, 4ull}, std::pair{3ull, 3ull}}) {
    auto a = ah_extension(p, n, 3, unsigned(3 * n));
    REQUIRE(a.series);
    auto w = classical_weil(*a.series, p, 1);
    CHECK(permute_active(w, {1, 0}, 1) * w == ModSeries::one(w.ring(), 3, w.trunc()));
  }
  auto F3 = CoefficientRing::prime_field(3);
  CHECK(classical_weil(ModSeries::one(F3, 3, 6), 3) == ModSeries::one(F3, 2, 6));
}

TEST_CASE("bivariate decomposition") {
  auto z = zeta(8, 2, F2);
  auto lifted = remap_variables(z.as_polynomial(11), 3, {0, 1}) * pow(ModSeries::variable(F2, 3, 11, 2), 3);
  auto d = bivariate_decompose(lifted.as_polynomial(11), 2);
  REQUIRE(d.entries.size() == 1);
  CHECK(d.entries[0].n == 8);
  CHECK(d.entries[0].m == 3);
  CHECK(d.entries[0].r.value == 1);
  CHECK(d.reassemble() == lifted.as_polynomial(11));
  CHECK(bivariate_decompose(ModSeries(F2, 2, 4), 2).entries.empty());
  for (std::uint64_t n = 3; n <= 12; ++n)
    for (const auto& b : additive_basis(3, n, 3)) {
      auto u = b.expand();
      CHECK(bivariate_decompose(u, 3).reassemble() == u);
    }
}

TEST_CASE("obstruction test") {
  for (std::uint64_t n = 3; n <= 16; ++n)
    for (std::size_t k = 3; k <= 4 && k <= n; ++k) {
      auto v = obstruction_test(zeta(n, k, F2), 2);
      CAPTURE(n);
      CAPTURE(k);
      CHECK(v.obstructed == (nu_phi_kummer(2, n, k) > nu(2, n)));
      if (v.obstructed) CHECK(v.witness.has_value());
    }
  auto v = obstruction_test(ms("x1*x2*x3*x4", 2, 4, 4), 2);
  CHECK(v.obstructed);
  REQUIRE(v.witness);
  CHECK_FALSE(v.witness->r_nm == v.witness->r_mn);
  CHECK_THROWS_AS(obstruction_test(ms("x1^2*x2", 2, 2, 3), 2), DecompositionError);
}
