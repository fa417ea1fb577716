#include <doctest.h>

#include "../support.hpp"
#include "fgc/ringpres.hpp"

using namespace fgc;

TEST_CASE("Artin-Hasse exponential") {
  auto e2 = artin_hasse(2, 3);
  CHECK(e2.coefficient(Monomial(std::vector<unsigned>{0})) == 1);
  CHECK(e2.coefficient(Monomial(std::vector<unsigned>{1})) == 1);
  CHECK(e2.coefficient(Monomial(std::vector<unsigned>{2})) == 1);
  CHECK(e2.coefficient(Monomial(std::vector<unsigned>{3})) == Rational(2, 3));
  for (std::uint64_t p : {2, 3, 5}) CHECK_FALSE(first_non_integral(artin_hasse(p, 64), p).has_value());
  // The plain exponential is not p-integral.
  CHECK(first_non_integral(exp_series(fgc::testing::qs("x1", 1, 4)), 2).has_value());
}

TEST_CASE("Artin-Hasse extensions") {
  for (std::uint64_t p : {2, 3})
    for (std::uint64_t n = 2; n <= 9; ++n)
      for (std::size_t k = 1; k <= 3 && k <= n; ++k) {
        if (nu_phi_kummer(p, n, k) > nu(p, n)) continue;
        auto ah = ah_extension(p, n, k, unsigned(p * (n + 1)));
        CAPTURE(p);
        CAPTURE(n);
        CAPTURE(k);
        REQUIRE(ah.integral());
        CHECK(linear_part_is_zeta(*ah.series, p, n, k));
        if (k >= 2) CHECK(is_symmetric_cocycle(*ah.series, Target::Multiplicative, 1).ok);
      }
  auto bad = ah_extension(2, 5, 3, 15);
  CHECK_FALSE(bad.integral());
  CHECK_FALSE(bad.series.has_value());
  // k = 1 is inversion of E_2(c x^4).
  auto one = ah_extension(2, 4, 1, 12);
  REQUIRE(one.series);
  auto R = CoefficientRing::rationals();
  auto cx4 = QSeries::monomial(R, 2, 12, Monomial(std::vector<unsigned>{1, 4}), Rational(1));
  auto direct = invert(substitute(artin_hasse(2, 12), {cx4}, SubstitutionMode::PowerSeries));
  CHECK(*one.series == reduce(direct, CoefficientRing::prime_field(2)));
}

TEST_CASE("generator kinds") {
  auto gens = classify_generators(2, 16, PresentationRing::F2);
  for (const auto& g : gens)
    if (g.n == 1u << nu(2, g.n) && g.power == 1)
      CHECK(g.kind == GeneratorKind::Polynomial);
  auto six = classify_generators(3, 6, PresentationRing::F2);
  bool found = false;
  for (const auto& g : six)
    if (g.n == 6 && g.power == 1 && g.kind == GeneratorKind::Polynomial) found = true;
  CHECK(found);
  for (std::size_t k = 3; k <= 4; ++k)
    for (std::uint64_t n = k; n <= 16; ++n) {
      std::size_t count = 0;
      for (const auto& g : classify_generators(k, 16, PresentationRing::F2)) count += g.n == n;
      CHECK(count == additive_basis(2, n, k).size());
    }
  for (const auto& g : classify_generators(4, 12, PresentationRing::Z2Local))
    if (g.kind == GeneratorKind::SquareZero) CHECK(g.additive_order == 2);
}

TEST_CASE("additive presentation") {
  auto count_torsion = [](const AdditivePresentation& a, std::uint64_t p, std::uint64_t n) {
    std::size_t c = 0;
    for (const auto& t : a.torsion) c += t.p == p && t.n == n;
    return c;
  };
  CHECK(count_torsion(additive_presentation(2, 12, {3}), 3, 12) == 0);
  CHECK(count_torsion(additive_presentation(4, 12, {3}), 3, 12) == 1);
  auto empty = additive_presentation(5, 4, {2, 3});
  CHECK(empty.free.empty());
  CHECK(empty.torsion.empty());
}

TEST_CASE("present_ring") {
  auto trivial = present_ring(6, 5, PresentationRing::F2);
  CHECK(trivial.generators.empty());
  CHECK(trivial.to_json()["degrees"].empty());
  auto text = present_ring(3, 8, PresentationRing::F2).to_text();
  CHECK(text.find("Gamma[") != std::string::npos);
}

TEST_CASE("strata diagram") {
  auto d = strata_diagram(3, 12, 2, 6);
  CHECK(d.nodes.size() == 7);
  bool edge = false;
  for (const auto& e : d.edges)
    if (e.from == "k4:(3,3,3,3)@0" && e.to == "k3:(3,3,3,3)@1") edge = true;
  CHECK(edge);
  const auto* node = d.find("k3:(3,3,3,3)@1");
  REQUIRE(node);
  REQUIRE(node->cocycle.terms.size() == 1);
  CHECK(node->cocycle.terms[0].first == Partition{6, 3, 3});
}
