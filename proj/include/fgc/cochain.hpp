#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fgc/linalg.hpp"
#include "fgc/numtheory.hpp"
#include "fgc/series.hpp"

namespace fgc {

enum class Target { Additive, Multiplicative };

// Cochain operators act on the trailing "active" variables of a series. The
// first `passive` slots (a formal coefficient c, say) ride along untouched.

/// Sum over nonempty X of {1..k} of (-1)^|X| g(sum_{i in X} x_i). The series g
/// has passive + 1 variables, the last being the one substituted.
template <class S>
Series<S> theta_additive(const Series<S>& g, std::size_t k, std::size_t passive = 0);

/// Product over nonempty X of g(sum_{i in X} x_i)^{(-1)^|X|}; g(0) = 1.
template <class S>
Series<S> theta_multiplicative(const Series<S>& g, std::size_t k, std::size_t passive = 0);

/// Four-term coboundary. The new variable x0 goes into the first active
/// slot, so a k-variate cochain becomes (k+1)-variate:
/// u(x1,x2,..) - u(x0+x1,x2,..) + u(x0,x1+x2,x3,..) - u(x0,x1,x3,..)
/// additively; T1*T3/(T2*T4) multiplicatively.
template <class S>
Series<S> delta2(const Series<S>& u, Target target, std::size_t passive = 0);

/// Image of u under the permutation of its active variables sending active
/// slot i to active slot perm[i].
template <class S>
Series<S> permute_active(const Series<S>& u, const std::vector<std::size_t>& perm, std::size_t passive = 0);

struct CocycleCheck {
  bool ok = true;
  /// "symmetry" or "coboundary" when ok is false.
  std::string failure;
  /// Offending monomial in the relevant series, rendered as text.
  std::string witness;
};

template <class S>
CocycleCheck is_symmetric_cocycle(const Series<S>& u, Target target, std::size_t passive = 0);

/// Integral zeta_{n,k} as a series over Z with trunc n.
QSeries zeta(std::uint64_t n, std::size_t k);
/// zeta_{n,k} computed over Z and then reduced into a modular ring.
ModSeries zeta(std::uint64_t n, std::size_t k, CoefficientRing ring);

/// Coefficient of x^mu in the integral zeta_{|mu|,k}: (-1)^k multinomial(mu) / phi
/// when mu has exactly k parts, 0 otherwise.
mpz_class zeta_coefficient(const Partition& mu, std::size_t k);

/// Sum of the distinct monomials with exponent multiset mu (padded with zeros
/// to k variables), each with coefficient 1.
template <class S>
Series<S> tau(const Partition& mu, std::size_t k, CoefficientRing ring, unsigned trunc);
ModSeries tau(const Partition& mu, std::size_t k, CoefficientRing ring);

/// Exponent vector of the canonical orbit representative x1^mu1 x2^mu2 ...
Monomial orbit_representative(const Partition& mu);

/// Replace parts i and j (1-based, distinct) by their sum.
Partition gather(const Partition& lambda, std::size_t i, std::size_t j);

/// Every partition reachable by exactly m gatherings.
std::set<Partition> gathered_set(const Partition& lambda, std::size_t m);

struct GatheredCocycle {
  std::uint64_t p = 0;
  Partition root;
  std::size_t depth = 0;
  /// Number of variables: length(root) - depth.
  std::size_t k = 0;
  /// Nonzero coefficients c_mu, mu in descending lexicographic order.
  std::vector<std::pair<Partition, Residue>> terms;

  ModSeries expand() const;
  std::string to_string() const;
};

/// Thrown when the hypothesis guaranteeing a cocycle does not hold.
struct HypothesisError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Requires every part of lambda to be a power of p and either m < p - 1 or
/// lambda the shortest power-of-p partition of |lambda|.
GatheredCocycle gathered_cocycle(std::uint64_t p, const Partition& lambda, std::size_t m);

/// Basis of degree-n symmetric additive 2-cocycles in k variables over F_p,
/// ordered by depth and then by root in descending lexicographic order.
std::vector<GatheredCocycle> additive_basis(std::uint64_t p, std::uint64_t n, std::size_t k);

struct OracleResult {
  std::uint64_t p = 0;
  std::uint64_t n = 0;
  std::size_t k = 0;
  /// Orbit-sum coordinates: the candidate space is spanned by tau(mu).
  std::vector<Partition> coordinates;
  /// Rows form a reduced echelon basis of the kernel, in tau coordinates.
  ModMatrix kernel;
  std::size_t dimension() const { return static_cast<std::size_t>(kernel.rows()); }
  ModSeries basis_element(std::size_t row) const;
};

struct OracleLimits {
  std::size_t max_coordinates = 4000;
  std::size_t max_columns = 4'000'000;
};

/// Solves symmetry + delta2 = 0 on homogeneous degree-n polynomials in k
/// variables over F_p by exact elimination.
OracleResult brute_force_cocycle_space(std::uint64_t p, std::uint64_t n, std::size_t k,
                                       const OracleLimits& limits = {});

/// Coordinates of a symmetric homogeneous polynomial in the tau basis of the
/// oracle; nullopt if the polynomial is not a combination of the tau(mu).
std::optional<ModVector> tau_coordinates(const OracleResult& oracle, const ModSeries& u);

/// Every basis element lies in the oracle kernel and the ranks agree.
bool spans_oracle_kernel(const OracleResult& oracle, const std::vector<GatheredCocycle>& basis);

struct GatheringGraph {
  std::uint64_t n = 0;
  /// nodes[l] = power-of-2 partitions of n of length l.
  std::vector<std::vector<Partition>> nodes;
  /// (source of length l, target of length l-1) with target a single gathering of source.
  std::vector<std::pair<Partition, Partition>> edges;
};

GatheringGraph gathering_graph(std::uint64_t n);

/// Connectivity of the subgraph on all nodes of lengths l and l-1.
bool check_level_connectivity(const GatheringGraph& g, std::size_t l);

extern template QSeries theta_additive(const QSeries&, std::size_t, std::size_t);
extern template ModSeries theta_additive(const ModSeries&, std::size_t, std::size_t);
extern template QSeries theta_multiplicative(const QSeries&, std::size_t, std::size_t);
extern template ModSeries theta_multiplicative(const ModSeries&, std::size_t, std::size_t);
extern template QSeries delta2(const QSeries&, Target, std::size_t);
extern template ModSeries delta2(const ModSeries&, Target, std::size_t);
extern template QSeries permute_active(const QSeries&, const std::vector<std::size_t>&, std::size_t);
extern template ModSeries permute_active(const ModSeries&, const std::vector<std::size_t>&, std::size_t);
extern template CocycleCheck is_symmetric_cocycle(const QSeries&, Target, std::size_t);
extern template CocycleCheck is_symmetric_cocycle(const ModSeries&, Target, std::size_t);
extern template QSeries tau(const Partition&, std::size_t, CoefficientRing, unsigned);
extern template ModSeries tau(const Partition&, std::size_t, CoefficientRing, unsigned);

}  // namespace fgc
