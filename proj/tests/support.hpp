#pragma once

#include <string>

#include "fgc/series_io.hpp"

namespace fgc::testing {

inline QSeries qs(const std::string& body, std::size_t nvars, unsigned trunc,
                  CoefficientRing ring = CoefficientRing::rationals()) {
  return std::get<QSeries>(parse_series_body(body, ring, nvars, trunc));
}

inline ModSeries ms(const std::string& body, std::uint64_t p, std::size_t nvars, unsigned trunc) {
  return std::get<ModSeries>(parse_series_body(body, CoefficientRing::prime_field(p), nvars, trunc));
}

}  // namespace fgc::testing
