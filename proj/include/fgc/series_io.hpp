#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "fgc/series.hpp"

namespace fgc {

/// A series over any supported ring, as produced by the parsers.
using AnySeries = std::variant<QSeries, ModSeries>;

/// Body only: "2*x1^3*x2 + 3*x1^2*x2^2 + 2*x1*x2^3", or "0".
template <class S>
std::string to_text(const Series<S>& a, const std::vector<std::string>* names = nullptr);

/// Header line "series ring=Z nvars=2 trunc=4" followed by the body.
template <class S>
std::string to_canonical_text(const Series<S>& a);

/// Parses a body in the variables x1..x{nvars} (or the given names).
AnySeries parse_series_body(const std::string& body, CoefficientRing ring, std::size_t nvars, unsigned trunc,
                            const std::vector<std::string>* names = nullptr);

/// Inverse of to_canonical_text.
AnySeries parse_canonical_text(const std::string& text);

template <class S>
nlohmann::json to_json(const Series<S>& a);

AnySeries series_from_json(const nlohmann::json& j);

std::string any_to_canonical_text(const AnySeries& a);
nlohmann::json any_to_json(const AnySeries& a);

}  // namespace fgc
