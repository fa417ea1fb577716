#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Core>

namespace fgc {

/// Dense matrices over F_p with entries kept in [0, p). Products are formed in
/// 64-bit integers and reduced afterwards, so p * p * inner dimension must fit.
using ModMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ModVector = Eigen::Matrix<std::int64_t, 1, Eigen::Dynamic>;

template <class Derived>
auto mod_reduce(const Eigen::MatrixBase<Derived>& a, std::int64_t p) {
  return a.unaryExpr([p](std::int64_t x) { return ((x % p) + p) % p; });
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p);

struct Echelon {
  ModMatrix rref;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form over F_p (p prime).
Echelon rref_mod(ModMatrix a, std::int64_t p);

std::size_t rank_mod(const ModMatrix& a, std::int64_t p);

/// Rows form a basis of {v : a v^T = 0}.
ModMatrix nullspace_mod(const ModMatrix& a, std::int64_t p);

/// Rows form a basis of {y : y a = 0}.
ModMatrix left_kernel_mod(const ModMatrix& a, std::int64_t p);

}  // namespace fgc
