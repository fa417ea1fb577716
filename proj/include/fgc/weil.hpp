#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fgc/cochain.hpp"

namespace fgc {

/// prod_{i=1}^{p-1} u(i x1, x1, x2, ..., x_{k-1}) for a k-variate u.
/// With verify set, u is first checked to be a symmetric multiplicative cocycle.
ModSeries half_weil_multiplicative(const ModSeries& u, std::uint64_t p, std::size_t passive = 0, bool verify = true);

/// sum_{i=1}^{p-1} u_+(i x1, x1, x2, ..., x_{k-1}).
ModSeries half_weil_additive(const ModSeries& u_plus, std::uint64_t p, std::size_t passive = 0, bool verify = true);

/// One-variable coboundary on the given active slot (1-based). A (k-1)-variate
/// e becomes k-variate with the new variable z_k last:
/// e(.., z_s, ..) + e(.., z_k, ..) - e(.., z_s + z_k, ..) additively, the
/// corresponding product/quotient multiplicatively.
template <class S>
Series<S> delta1(const Series<S>& e, Target target, std::size_t slot = 1, std::size_t passive = 0);

/// prod_{i=1}^{p-1} u(x1, i x1, x2) / u(x1, i x2, x2) for a 3-variate u.
ModSeries classical_weil(const ModSeries& u, std::uint64_t p, std::size_t passive = 0, bool verify = true);

struct BivariateEntry {
  /// Degree of the zeta_{n,2}(x1, x2) factor.
  unsigned n = 0;
  /// Exponent of x3 (0 when k = 2).
  unsigned m = 0;
  /// Exponents of x4..xk.
  std::vector<unsigned> I;
  Residue r;
};

struct BivariateDecomposition {
  std::uint64_t p = 0;
  std::size_t k = 0;
  unsigned trunc = 0;
  /// Sorted by (n, m, I).
  std::vector<BivariateEntry> entries;
  /// Part of the input not of the form r * zeta_{n,2} x3^m x^I; zero on cocycles.
  ModSeries residual;

  /// sum r zeta_{n,2}(x1,x2) x3^m x^I + residual
  ModSeries reassemble() const;
  /// r_{n,m,I}, zero when absent.
  Residue coefficient(unsigned n, unsigned m, const std::vector<unsigned>& I) const;
};

/// Slices u_+ by (x3 exponent, x4..xk exponents, x1x2-degree) and matches each
/// bivariate slice against zeta_{d,2} mod p. Each slice has at most one
/// solution since zeta_{d,2} is nonzero mod p.
BivariateDecomposition bivariate_decompose(const ModSeries& u_plus, std::uint64_t p);

struct ObstructionWitness {
  /// r_{n,m,I} differs from r_{m,n,I}; n and m are powers of p.
  unsigned n = 0;
  unsigned m = 0;
  std::vector<unsigned> I;
  Residue r_nm;
  Residue r_mn;
};

struct ObstructionVerdict {
  bool obstructed = false;
  std::optional<ObstructionWitness> witness;
  /// Degree of the homogeneous form that was tested.
  unsigned tested_degree = 0;
  BivariateDecomposition decomposition;
};

/// Thrown when the input fails to decompose (it was not a cocycle).
struct DecompositionError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Power-pair asymmetry test. Inhomogeneous inputs are tested through their
/// leading form. The witness is the smallest (n, m, I) in lexicographic order.
ObstructionVerdict obstruction_test(const ModSeries& u_plus, std::uint64_t p);

extern template QSeries delta1(const QSeries&, Target, std::size_t, std::size_t);
extern template ModSeries delta1(const ModSeries&, Target, std::size_t, std::size_t);

}  // namespace fgc
