#include "fgc/linalg.hpp"

#include <stdexcept>

namespace fgc {

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = ((a % p) + p) % p;
  while (new_r) {
    auto q = r / new_r;
    auto tmp_t = t - q * new_t;
    t = new_t;
    new_t = tmp_t;
    auto tmp_r = r - q * new_r;
    r = new_r;
    new_r = tmp_r;
  }
  if (r != 1) throw std::domain_error("inverse_mod: not invertible");
  return t < 0 ? t + p : t;
}

Echelon rref_mod(ModMatrix a, std::int64_t p) {
  Echelon out;
  const auto rows = a.rows(), cols = a.cols();
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = row; r < rows; ++r)
      if (a(r, col)) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row) a.row(pivot).swap(a.row(row));
    const auto width = cols - col;
    auto inv = inverse_mod(a(row, col), p);
    if (inv != 1) a.row(row).tail(width) = mod_reduce(a.row(row).tail(width) * inv, p);
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == row || !a(r, col)) continue;
      auto f = a(r, col);
      a.row(r).tail(width) = mod_reduce(a.row(r).tail(width) - f * a.row(row).tail(width), p);
    }
    out.pivots.push_back(static_cast<std::size_t>(col));
    ++row;
  }
  out.rref = std::move(a);
  return out;
}

std::size_t rank_mod(const ModMatrix& a, std::int64_t p) { return rref_mod(a, p).rank(); }

ModMatrix nullspace_mod(const ModMatrix& a, std::int64_t p) {
  auto e = rref_mod(a, p);
  const auto cols = static_cast<std::size_t>(a.cols());
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  ModMatrix basis(static_cast<Eigen::Index>(cols - e.rank()), static_cast<Eigen::Index>(cols));
  basis.setZero();
  Eigen::Index out = 0;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    basis(out, static_cast<Eigen::Index>(free)) = 1;
    for (std::size_t i = 0; i < e.rank(); ++i) {
      auto v = e.rref(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(free));
      if (v) basis(out, static_cast<Eigen::Index>(e.pivots[i])) = (p - v) % p;
    }
    ++out;
  }
  return basis;
}

ModMatrix left_kernel_mod(const ModMatrix& a, std::int64_t p) {
  ModMatrix t = a.transpose();
  return nullspace_mod(t, p);
}

}  // namespace fgc
