#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fgc/cochain.hpp"

namespace fgc {

/// E_p(t) = exp(sum_{p^j <= trunc} t^{p^j}/p^j) over Q in one variable.
/// Throws std::logic_error if a coefficient is not p-integral.
QSeries artin_hasse(std::uint64_t p, unsigned trunc);

struct AhExtension {
  std::uint64_t p = 0;
  std::uint64_t n = 0;
  std::size_t k = 0;
  unsigned trunc = 0;
  /// nu_p phi(n,k)
  std::uint64_t nu = 0;
  /// Integer exponent in [1, p-1] making the c-linear part exactly zeta mod p.
  std::uint64_t omega = 1;
  /// The Q-series before reduction, in (c, x1..xk).
  QSeries rational;
  /// First coefficient of `rational` that is not p-integral.
  std::optional<Monomial> non_integral;
  /// Reduction mod p; empty when non_integral is set.
  std::optional<ModSeries> series;

  bool integral() const { return !non_integral.has_value(); }
  /// nu_p phi(n,k) < nu_p n
  bool strict_hypothesis() const;
};

/// Theta^k applied to E_p(c x^n)^{omega p^{-nu}}, computed as
/// exp(theta_additive(L)) with L = omega sum_j c^{p^j} x^{n p^j} / p^{j+nu}.
/// The variable c is slot 0. Never throws on non-integrality; see non_integral.
AhExtension ah_extension(std::uint64_t p, std::uint64_t n, std::size_t k, unsigned trunc);

/// The c^1 part of an extension compared with zeta(n,k) mod p.
bool linear_part_is_zeta(const ModSeries& u, std::uint64_t p, std::uint64_t n, std::size_t k);

enum class GeneratorKind { Polynomial, DividedPower, SquareZero };
enum class PresentationRing { F2, Z2Local };

std::string to_string(GeneratorKind kind);
PresentationRing parse_presentation_ring(const std::string& tag);
std::string to_string(PresentationRing ring);

struct RingGenerator {
  std::uint64_t n = 0;
  std::uint64_t index = 0;
  GeneratorKind kind = GeneratorKind::Polynomial;
  /// 0 for free, otherwise the additive order.
  std::uint64_t additive_order = 0;
  /// For divided powers b_{m,g}^{[2^j]} landing in degree n = 2^j m: the source
  /// degree m. Equal to n for the Gamma generator itself.
  std::uint64_t source_degree = 0;
  /// 2^j for a divided power, 1 otherwise.
  std::uint64_t power = 1;

  /// "z_6", "b_{5,1}", "b_{5,1}^{[2]}", "b_{12,3}"
  std::string name() const;
  /// True for the classes b^{[2^j]}, j >= 1, which are not new generators.
  bool inherited() const { return power > 1; }
};

/// Additive classes of the 2-primary presentation in degrees k..n_max, in
/// degree order. Each degree carries exactly as many entries as the F2
/// additive cocycle space has dimension: one z_n or Gamma generator, the
/// divided powers landing in that degree, and the square-zero generators.
std::vector<RingGenerator> classify_generators(std::size_t k, std::uint64_t n_max, PresentationRing ring);

struct TorsionGenerator {
  std::uint64_t p = 0;
  std::uint64_t n = 0;
  std::uint64_t i = 0;
};

struct AdditivePresentation {
  std::size_t k = 0;
  std::uint64_t n_max = 0;
  std::vector<std::uint64_t> primes;
  /// Degrees of the free generators c_n.
  std::vector<std::uint64_t> free;
  std::vector<TorsionGenerator> torsion;

  std::string to_text() const;
  nlohmann::json to_json() const;
};

/// Free c_n for k <= n <= n_max and b_{p,n,i} for 1 <= i < D'(p,n,k).
AdditivePresentation additive_presentation(std::size_t k, std::uint64_t n_max, const std::vector<std::uint64_t>& primes);

struct RingPresentation {
  PresentationRing ring = PresentationRing::F2;
  std::size_t k = 0;
  std::uint64_t n_max = 0;
  std::vector<RingGenerator> generators;

  /// Three tensor factors, one per line.
  std::string to_text() const;
  /// {ring, k, degrees: [{n, generators: [{name, kind, order}]}]}
  nlohmann::json to_json() const;
};

RingPresentation present_ring(std::size_t k, std::uint64_t n_max, PresentationRing ring);

struct StrataNode {
  std::string id;
  std::size_t k = 0;
  Partition root;
  std::size_t depth = 0;
  GatheredCocycle cocycle;
};

enum class StrataEdgeKind { Gathering, Splitting };

struct StrataEdge {
  std::string from;
  /// Node id, or "cdots" when the split leaves the k range.
  std::string to;
  StrataEdgeKind kind = StrataEdgeKind::Gathering;
};

struct StrataDiagram {
  std::uint64_t p = 0;
  std::uint64_t n = 0;
  std::size_t kmin = 0;
  std::size_t kmax = 0;
  std::vector<StrataNode> nodes;
  std::vector<StrataEdge> edges;

  const StrataNode* find(const std::string& id) const;
  std::string to_text() const;
  nlohmann::json to_json() const;
};

/// Basis cocycles of degree n for kmin <= k <= kmax. Gathering edges join
/// (lambda, m) to (lambda, m+1); splitting edges join depth-0 nodes whose roots
/// differ by writing one part p^a as p copies of p^{a-1}.
StrataDiagram strata_diagram(std::uint64_t p, std::uint64_t n, std::size_t kmin, std::size_t kmax);

}  // namespace fgc
