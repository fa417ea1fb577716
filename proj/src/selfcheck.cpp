#include "fgc/selfcheck.hpp"

#include <functional>

#include "fgc/ringpres.hpp"
#include "fgc/spectral.hpp"
#include "fgc/weil.hpp"

namespace fgc {

namespace {

using Check = std::function<std::string()>;

SelfcheckItem run_one(const std::string& name, const Check& check) {
  SelfcheckItem item{name, false, ""};
  try {
    item.detail = check();
    item.ok = item.detail.empty();
    if (item.ok) item.detail = "ok";
  } catch (const std::exception& e) {
    item.detail = std::string("exception: ") + e.what();
  }
  return item;
}

std::string kummer() {
  for (std::uint64_t p : {2, 3, 5})
    for (std::uint64_t n = 1; n <= 60; ++n)
      for (std::uint64_t k = 1; k <= n; ++k)
        if (nu(p, phi(n, k)) != nu_phi_kummer(p, n, k))
          return "p=" + std::to_string(p) + " n=" + std::to_string(n) + " k=" + std::to_string(k);
  return "";
}

std::string zeta_cocycle() {
  for (std::uint64_t n = 1; n <= 10; ++n)
    for (std::size_t k = 2; k <= 3 && k <= n; ++k) {
      auto check = is_symmetric_cocycle(zeta(n, k), Target::Additive);
      if (!check.ok) return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " " + check.failure;
    }
  return "";
}

std::string basis_oracle() {
  for (auto [p, nmax, kmax] : {std::tuple{2u, 12u, 4u}, std::tuple{3u, 9u, 3u}})
    for (unsigned n = 2; n <= nmax; ++n)
      for (unsigned k = 2; k <= kmax && k <= n; ++k) {
        auto oracle = brute_force_cocycle_space(p, n, k);
        auto basis = additive_basis(p, n, k);
        if (basis.size() != oracle.dimension() || !spans_oracle_kernel(oracle, basis))
          return "p=" + std::to_string(p) + " n=" + std::to_string(n) + " k=" + std::to_string(k);
      }
  return "";
}

std::string e1_bidegrees() {
  for (auto ring : {CoefficientRing::prime_field(2), CoefficientRing::prime_field(3), CoefficientRing::rationals()}) {
    auto page = e1_page(ring, 6, 9);
    const std::uint64_t p = ring.modulus ? ring.modulus : 1;
    for (const auto& [key, classes] : page.cells)
      for (const auto& c : classes) {
        unsigned s = 0, t = 0;
        std::uint64_t q = 1;
        for (std::size_t i = 0; i < c.a.size(); ++i, q *= p) {
          if (p != 2 && c.a[i] > 1) return "exterior violated in " + ring.tag();
          s += c.a[i];
          t += c.a[i] * static_cast<unsigned>(q);
        }
        q = 1;
        for (std::size_t i = 0; i < c.b.size(); ++i, q *= p) {
          s += (p == 1 ? 1 : 2) * c.b[i];
          t += c.b[i] * static_cast<unsigned>(q);
        }
        if (p == 2 && !c.b.empty() && c.b[0]) return "b class over F2";
        if (key != std::pair{s, t}) return "bidegree of " + c.name() + " over " + ring.tag();
      }
  }
  return "";
}

std::string differentials() {
  for (unsigned i = 0; i <= 3; ++i)
    for (unsigned j = 0; j <= 3; ++j)
      if (i != j && !differential_F2(i, j).match) return "F2 i=" + std::to_string(i) + " j=" + std::to_string(j);
  for (unsigned i = 0; i <= 3; ++i)
    if (!differential_a_next(i).match) return "a_{i+1} i=" + std::to_string(i);
  for (unsigned i = 0; i <= 1; ++i)
    for (unsigned j = 0; j <= 1; ++j)
      if (i != j && !differential_odd(3, i, j).match) return "odd i=" + std::to_string(i) + " j=" + std::to_string(j);
  return "";
}

std::string artin_hasse_weil() {
  for (std::uint64_t p : {2, 3})
    for (std::uint64_t n = 2; n <= 8; ++n)
      for (std::size_t k = 2; k <= 3 && k <= n; ++k) {
        if (nu_phi_kummer(p, n, k) > nu(p, n)) continue;
        auto ah = ah_extension(p, n, k, static_cast<unsigned>(p * (n + 1)));
        auto tag = "p=" + std::to_string(p) + " n=" + std::to_string(n) + " k=" + std::to_string(k);
        if (!ah.integral()) return tag + " not integral";
        const auto& u = *ah.series;
        if (!is_symmetric_cocycle(u, Target::Multiplicative, 1).ok) return tag + " not a cocycle";
        if (!linear_part_is_zeta(u, p, n, k)) return tag + " linear part";
        auto e = half_weil_multiplicative(u, p, 1, false);
        if (!(delta1(e, Target::Multiplicative, 1, 1) == pow(u, static_cast<unsigned>(p)))) return tag + " delta1";
      }
  return "";
}

std::string weil_calculation() {
  for (std::uint64_t p : {2, 3})
    for (std::uint64_t n = 2; n <= 16; ++n) {
      auto ring = CoefficientRing::prime_field(p);
      auto e = half_weil_additive(zeta(n, 2, ring), p);
      ModSeries expected(ring, 1, e.trunc());
      if (is_power_of(p, n))
        expected = -ModSeries::monomial(ring, 1, e.trunc(), Monomial(std::vector<unsigned>{static_cast<unsigned>(n)}),
                                        Residue{1});
      if (!(e == expected)) return "p=" + std::to_string(p) + " n=" + std::to_string(n);
    }
  return "";
}

std::string decomposition() {
  for (std::uint64_t p : {2, 3})
    for (std::uint64_t n = 2; n <= 12; ++n)
      for (std::size_t k = 3; k <= 4 && k <= n; ++k)
        for (const auto& b : additive_basis(p, n, k)) {
          auto u = b.expand();
          auto dec = bivariate_decompose(u, p);
          if (!dec.residual.is_zero() || !(dec.reassemble() == u)) return b.to_string();
        }
  return "";
}

std::string obstruction() {
  for (std::uint64_t n = 3; n <= 12; ++n)
    for (std::size_t k = 3; k <= 4 && k <= n; ++k) {
      auto z = zeta(n, k, CoefficientRing::prime_field(2));
      bool zeta_obstructed = nu_phi_kummer(2, n, k) > nu(2, n);
      if (obstruction_test(z, 2).obstructed != zeta_obstructed) return "zeta n=" + std::to_string(n);
      for (const auto& b : additive_basis(2, n, k)) {
        auto u = b.expand();
        if (!(u == z) && !obstruction_test(u, 2).obstructed) return b.to_string() + " unobstructed";
      }
    }
  return "";
}

std::string graph() {
  for (std::uint64_t n = 2; n <= 32; ++n) {
    auto g = gathering_graph(n);
    for (std::size_t l = 2; l < g.nodes.size(); ++l)
      if (!check_level_connectivity(g, l)) return "n=" + std::to_string(n) + " l=" + std::to_string(l);
  }
  return "";
}

std::string generator_counts() {
  for (std::size_t k = 3; k <= 4; ++k) {
    auto gens = classify_generators(k, 16, PresentationRing::F2);
    for (std::uint64_t n = k; n <= 16; ++n) {
      std::size_t count = 0;
      for (const auto& g : gens) count += g.n == n;
      if (count != additive_basis(2, n, k).size()) return "k=" + std::to_string(k) + " n=" + std::to_string(n);
    }
  }
  return "";
}

}  // namespace

std::vector<SelfcheckItem> run_selfcheck() {
  return {
      run_one("kummer", kummer),
      run_one("zeta_cocycle", zeta_cocycle),
      run_one("basis_oracle", basis_oracle),
      run_one("e1_bidegrees", e1_bidegrees),
      run_one("differentials", differentials),
      run_one("artin_hasse_weil", artin_hasse_weil),
      run_one("weil_calculation", weil_calculation),
      run_one("decomposition", decomposition),
      run_one("obstruction", obstruction),
      run_one("graph", graph),
      run_one("generator_counts", generator_counts),
  };
}

nlohmann::json to_json(const std::vector<SelfcheckItem>& items) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& i : items) out.push_back({{"name", i.name}, {"ok", i.ok}, {"detail", i.detail}});
  return out;
}

}  // namespace fgc
