#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fgc/cochain.hpp"

namespace fgc {

/// A monomial on the E1 page. Over F_p the generators are a_i (s = 1,
/// t = p^i) and, for odd p, b_i (s = 2, t = p^i). Over Q the only generator is
/// b (s = 1, t = 1), recorded as b_0.
struct E1Class {
  std::vector<unsigned> a;
  std::vector<unsigned> b;
  unsigned s = 0;
  unsigned t = 0;

  /// "a_0^2 a_1 a_2", a factors before b factors; "b" over Q.
  std::string name(bool rational = false) const;
};

struct E1Page {
  CoefficientRing ring;
  unsigned smax = 0;
  unsigned tmax = 0;
  /// (s, t) -> classes sorted by name; only nonempty cells are stored.
  std::map<std::pair<unsigned, unsigned>, std::vector<E1Class>> cells;

  std::vector<std::string> names(unsigned s, unsigned t) const;
  /// Rows t = tmax..1, columns s = 1..smax, laid out as a spectral sequence chart.
  std::string to_table() const;
  nlohmann::json to_json() const;
};

/// Enumerates the E1 page for F_p (p prime) or Q within 1 <= s <= smax,
/// 1 <= t <= tmax.
E1Page e1_page(CoefficientRing ring, unsigned smax, unsigned tmax);

/// delta2(u_bud, multiplicative) with the first `passive` variables (the
/// formal coefficient c) carried along.
ModSeries bud_coboundary(const ModSeries& u_bud, std::size_t passive = 1);

/// Coefficient of c^r, c being slot 0.
ModSeries c_part(const ModSeries& u, unsigned r);

struct DifferentialCheck {
  bool match = false;
  /// c^r part of the computed coboundary, in (c, w, x, y) or (c, x, y).
  ModSeries computed;
  /// Closed form realized as a polynomial in the same variables.
  ModSeries expected;
  /// computed - expected
  ModSeries difference;
  std::string to_string() const;
};

/// Polynomial realization of a product of a-classes, one per variable:
/// w^{p^e0} x^{p^e1} y^{p^e2} for indices (e0, e1, e2).
ModSeries realize_a_monomial(std::uint64_t p, const std::vector<unsigned>& indices, std::size_t passive,
                             unsigned trunc);

/// c^2 part of bud_coboundary(1 + c x^{2^i} y^{2^j}) over F2 against
/// c^2 (a_i^2 a_{j+1} - a_{i+1} a_j^2).
DifferentialCheck differential_F2(unsigned i, unsigned j);

/// c^2 part of C/(AB) for delta1 of the 1-cochain 1 + c x^N, N = 2^{i+1},
/// against x^N y^N.
DifferentialCheck differential_a_next(unsigned i);

/// sum_{n<p} z^n/n! over F_p.
ModSeries texp(const ModSeries& z, std::uint64_t p);

/// c^p part of the four-factor texp product against
/// w^{p^{i+1}} zeta_{p^{j+1},2}(x,y) - zeta_{p^{i+1},2}(w,x) y^{p^{j+1}}.
DifferentialCheck differential_odd(std::uint64_t p, unsigned i, unsigned j);

}  // namespace fgc
