#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fgc/monomial.hpp"
#include "fgc/ring.hpp"

namespace fgc {

/// Multivariate power series truncated at a total-degree bound (inclusive).
/// Terms are kept sorted in graded-lex order with nonzero coefficients only.
template <class Scalar>
class Series {
 public:
  using scalar_type = Scalar;
  using Ops = ScalarOps<Scalar>;
  using Term = std::pair<Monomial, Scalar>;

  Series() = default;
  /// The zero series.
  Series(CoefficientRing ring, std::size_t nvars, unsigned trunc);

  static Series constant(CoefficientRing ring, std::size_t nvars, unsigned trunc, const Scalar& c);
  static Series constant(CoefficientRing ring, std::size_t nvars, unsigned trunc, long c) {
    return constant(ring, nvars, trunc, Ops::from_int(c, ring));
  }
  static Series one(CoefficientRing ring, std::size_t nvars, unsigned trunc) {
    return constant(ring, nvars, trunc, 1L);
  }
  static Series variable(CoefficientRing ring, std::size_t nvars, unsigned trunc, std::size_t slot);
  static Series monomial(CoefficientRing ring, std::size_t nvars, unsigned trunc, const Monomial& m,
                         const Scalar& c);
  /// Combines duplicate monomials, drops zeros and terms above trunc.
  static Series from_terms(CoefficientRing ring, std::size_t nvars, unsigned trunc, std::vector<Term> terms);

  const CoefficientRing& ring() const { return ring_; }
  std::size_t nvars() const { return nvars_; }
  unsigned trunc() const { return trunc_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Scalar coefficient(const Monomial& m) const;
  Scalar constant_term() const { return coefficient(Monomial{}); }
  /// Lowest total degree of a stored term; nullopt for zero.
  std::optional<unsigned> min_degree() const;
  std::optional<unsigned> max_degree() const;
  bool is_homogeneous() const;

  /// Copy with trunc lowered to t (never raised).
  Series truncated(unsigned t) const;
  /// Same terms under a new trunc, which may be larger. Only meaningful when
  /// the series is known to be an exact polynomial.
  Series as_polynomial(unsigned t) const;

  /// Throws std::logic_error when a representation invariant is broken.
  void validate() const;

  friend bool operator==(const Series& a, const Series& b) {
    return a.ring_ == b.ring_ && a.nvars_ == b.nvars_ && a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
  }

  /// Terms only, ignoring trunc differences: a and b agree up to the smaller trunc.
  bool agrees_with(const Series& other) const;

 private:
  template <class>
  friend struct SeriesAccess;

  CoefficientRing ring_{};
  std::size_t nvars_ = 0;
  unsigned trunc_ = 0;
  std::vector<Term> terms_;
};

using QSeries = Series<Rational>;
using ModSeries = Series<Residue>;

enum class SubstitutionMode {
  /// Images must have zero constant term; the source is a truncated series.
  PowerSeries,
  /// The source is an exact polynomial; images may have constant terms.
  Polynomial,
};

template <class S> Series<S> operator+(const Series<S>& a, const Series<S>& b);
template <class S> Series<S> operator-(const Series<S>& a, const Series<S>& b);
template <class S> Series<S> operator-(const Series<S>& a);
template <class S> Series<S> operator*(const Series<S>& a, const Series<S>& b);
template <class S> Series<S> scalar_mul(const Series<S>& a, const S& c);
template <class S> Series<S> scale(const Series<S>& a, long c);
template <class S> Series<S> pow(const Series<S>& a, unsigned e);
/// Inverse of a series whose constant term is a unit, by Newton doubling.
template <class S> Series<S> invert(const Series<S>& a);
/// a(images[0], ..., images[nvars-1]); all images share ring, nvars.
template <class S>
Series<S> substitute(const Series<S>& a, const std::vector<Series<S>>& images,
                     SubstitutionMode mode = SubstitutionMode::PowerSeries);
/// Variable renaming into a space of new_nvars variables: slot i goes to
/// slot targets[i]. Several slots may share a target.
template <class S>
Series<S> remap_variables(const Series<S>& a, std::size_t new_nvars, const std::vector<std::size_t>& targets);
/// Degree-d part with degree counted over the slots in mask.
template <class S> Series<S> homogeneous_part(const Series<S>& a, unsigned d, std::uint32_t mask);
template <class S> Series<S> homogeneous_part(const Series<S>& a, unsigned d) {
  return homogeneous_part(a, d, all_vars_mask(a.nvars()));
}
/// Lowest nonzero homogeneous part of a minus its constant term, graded by
/// the slots in mask. Empty optional for a constant.
template <class S> std::optional<Series<S>> leading_form(const Series<S>& a, std::uint32_t mask);
template <class S> std::optional<Series<S>> leading_form(const Series<S>& a) {
  return leading_form(a, all_vars_mask(a.nvars()));
}
/// Coefficient of v^e where v is the given slot, as a series in the same
/// variables with that slot's exponent cleared and trunc lowered by e.
template <class S> Series<S> coefficient_of_power(const Series<S>& a, std::size_t slot, unsigned e);

/// exp(a) = sum a^n/n! over Q; a must have zero constant term.
QSeries exp_series(const QSeries& a);
/// Natural log of a series with constant term 1, over Q.
QSeries log_series(const QSeries& a);

/// First coefficient that is not p-integral, if any.
std::optional<Monomial> first_non_integral(const QSeries& a, std::uint64_t p);
/// Coefficientwise image in a modular target; throws naming the monomial when
/// a denominator is not invertible mod the target modulus.
ModSeries reduce(const QSeries& a, CoefficientRing target);
/// Z/m to Z/d (d | m) or F_p to F_p.
ModSeries reduce(const ModSeries& a, CoefficientRing target);
/// Between Z and Q; throws when leaving Q would drop a non-integral coefficient.
QSeries change_ring(const QSeries& a, CoefficientRing target);

extern template class Series<Rational>;
extern template class Series<Residue>;

}  // namespace fgc
