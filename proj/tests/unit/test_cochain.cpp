#include <doctest.h>

#include "../support.hpp"
#include "fgc/cochain.hpp"

using namespace fgc;
using fgc::testing::ms;
using fgc::testing::qs;

namespace {

const auto F2 = CoefficientRing::prime_field(2);
const auto F3 = CoefficientRing::prime_field(3);

// ((x1+x2)^n - x1^n - x2^n) / phi(n,2) from the binomial theorem.
QSeries binomial_zeta2(std::uint64_t n) {
  mpz_class g = 0, b = 1;
  std::vector<mpz_class> coeffs;
  for (std::uint64_t i = 1; i < n; ++i) {
    b = b * (n - i + 1) / i;
    coeffs.push_back(b);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), b.get_mpz_t());
  }
  auto out = QSeries(CoefficientRing::integers(), 2, static_cast<unsigned>(n));
  for (std::uint64_t i = 1; i < n; ++i)
    out = out + QSeries::monomial(out.ring(), 2, out.trunc(),
                                  Monomial(std::vector<unsigned>{unsigned(n - i), unsigned(i)}),
                                  Rational(coeffs[i - 1] / g));
  return out;
}

}  // namespace

TEST_CASE("theta") {
  auto x = qs("x1^5", 1, 5);
  CHECK(theta_additive(x, 2) == qs("5*x1^4*x2 + 10*x1^3*x2^2 + 10*x1^2*x2^3 + 5*x1*x2^4", 2, 5));
  CHECK(theta_additive(x, 1) == -x);
  auto t3 = theta_additive(qs("x1^2", 1, 2), 3);
  CHECK(t3.is_zero());
  auto f = qs("1 + x1 - 2*x1^3", 1, 6);
  CHECK(theta_multiplicative(f, 1) == invert(f));
  CHECK(theta_multiplicative(qs("1 + x1", 1, 2), 2) == qs("1 - x1*x2", 2, 2));
}

TEST_CASE("theta_multiplicative of exp is exp of theta_additive") {
  auto L = qs("1/2*x1^2 + x1^3 - 1/3*x1^4", 1, 8);
  for (std::size_t k = 1; k <= 3; ++k)
    CHECK(theta_multiplicative(exp_series(L), k) == exp_series(theta_additive(L, k)));
}

TEST_CASE("c-linear part of theta_multiplicative") {
  auto u = qs("1 + x1*x2^4", 2, 12);
  auto lin = coefficient_of_power(theta_multiplicative(u, 3, 1), 0, 1);
  CHECK(lin == coefficient_of_power(theta_additive(qs("x1*x2^4", 2, 12), 3, 1), 0, 1));
}

TEST_CASE("delta2") {
  CHECK(delta2(zeta(6, 3), Target::Additive).is_zero());
  // Over Z the cross term -2 x0 x1 x2 survives; mod 2 it vanishes.
  CHECK(delta2(qs("x1^2*x2", 2, 3, CoefficientRing::integers()), Target::Additive) ==
        qs("-2*x1*x2*x3", 3, 3, CoefficientRing::integers()));
  CHECK(delta2(ms("x1^2*x2", 2, 2, 3), Target::Additive).is_zero());
  CHECK(delta2(ModSeries::one(F2, 2, 4), Target::Multiplicative) == ModSeries::one(F2, 3, 4));
}

TEST_CASE("symmetric cocycle test") {
  CHECK(is_symmetric_cocycle(zeta(6, 3), Target::Additive).ok);
  auto bad = is_symmetric_cocycle(ms("x1^2*x2", 2, 2, 3), Target::Additive);
  CHECK_FALSE(bad.ok);
  CHECK(bad.failure == "symmetry");
  auto node = tau(Partition{9, 2, 1}, 3, F3) - tau(Partition{10, 1, 1}, 3, F3);
  CHECK(is_symmetric_cocycle(node, Target::Additive).ok);
}

TEST_CASE("zeta") {
  CHECK(zeta(2, 2) == qs("x1*x2", 2, 2, CoefficientRing::integers()));
  CHECK(zeta(4, 2) == qs("2*x1^3*x2 + 3*x1^2*x2^2 + 2*x1*x2^3", 2, 4, CoefficientRing::integers()));
  for (std::uint64_t n = 2; n <= 40; ++n) CHECK(zeta(n, 2) == binomial_zeta2(n));
  CHECK(zeta(5, 1) == -qs("x1^5", 1, 5, CoefficientRing::integers()));
}

TEST_CASE("tau and gathering") {
  CHECK(tau(Partition{2, 1}, 2, F2) == ms("x1^2*x2 + x1*x2^2", 2, 2, 3));
  CHECK(tau(Partition{2, 2}, 2, F2) == ms("x1^2*x2^2", 2, 2, 4));
  CHECK(tau(Partition{9, 3}, 2, F3) == ms("x1^9*x2^3 + x1^3*x2^9", 3, 2, 12));
  CHECK(gather(Partition{3, 3, 3, 3}, 1, 2) == Partition{6, 3, 3});
  CHECK(gather(Partition{9, 1, 1, 1}, 2, 3) == Partition{9, 2, 1});
  CHECK(gather(Partition{4, 3}, 1, 2) == Partition{7});
  CHECK(gathered_set(Partition{9, 1, 1, 1}, 0) == std::set<Partition>{Partition{9, 1, 1, 1}});
  CHECK(gathered_set(Partition{9, 1, 1, 1}, 1) == std::set<Partition>{Partition{9, 2, 1}, Partition{10, 1, 1}});
  CHECK(gathered_set(Partition{3, 3, 3, 3}, 1) == std::set<Partition>{Partition{6, 3, 3}});
}

TEST_CASE("gathered cocycles and basis") {
  auto g = gathered_cocycle(3, Partition{9, 1, 1, 1}, 1);
  auto node = tau(Partition{9, 2, 1}, 3, F3) - tau(Partition{10, 1, 1}, 3, F3);
  auto e = g.expand();
  CHECK((e == node || e == -node));
  CHECK(gathered_cocycle(2, Partition{2, 2}, 0).expand() == ms("x1^2*x2^2", 2, 2, 4));
  CHECK(additive_basis(3, 12, 3).size() == 2);
  CHECK(additive_basis(3, 12, 2).size() == 1);
  for (std::uint64_t n = 2; n <= 12; ++n)
    for (std::size_t k = 2; k <= 3 && k <= n; ++k)
      for (const auto& b : additive_basis(2, n, k)) CHECK(is_symmetric_cocycle(b.expand(), Target::Additive).ok);
}

TEST_CASE("oracle") {
  auto o = brute_force_cocycle_space(2, 4, 2);
  CHECK(o.dimension() == 1);
  auto coords = tau_coordinates(o, ms("x1^2*x2^2", 2, 2, 4));
  CHECK(coords.has_value());
  CHECK(brute_force_cocycle_space(3, 12, 3).dimension() == 2);
}

TEST_CASE("gathering graph") {
  auto g = gathering_graph(12);
  CHECK(g.nodes[2] == std::vector<Partition>{Partition{8, 4}});
  for (std::size_t l = 2; l < g.nodes.size(); ++l) CHECK(check_level_connectivity(g, l));
  auto h = gathering_graph(16);
  CHECK(h.nodes[1] == std::vector<Partition>{Partition{16}});
  for (std::size_t l = 2; l < h.nodes.size(); ++l) CHECK(check_level_connectivity(h, l));
}
