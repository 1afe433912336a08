#pragma once

#include "guchar/class_types.hpp"
#include "guchar/poly.hpp"
#include "guchar/series.hpp"

#include "json.hpp"

namespace guchar {

// Polynomials serialize as arrays of decimal coefficient strings, lowest
// degree first, no trailing zeros ("0" never appears as a coefficient array
// entry; the zero polynomial is []). Rationals use "num/den" with positive
// denominator, plain "num" when the denominator is 1.

nlohmann::json poly_to_json(const RatPoly& p);
nlohmann::json poly_to_json(const IntPoly& p);
RatPoly ratpoly_from_json(const nlohmann::json& j);
IntPoly intpoly_from_json(const nlohmann::json& j);

// a series serializes as the array of its coefficient polynomials
nlohmann::json series_to_json(const TruncSeries& s);
TruncSeries series_from_json(const nlohmann::json& j);

// {"minus": [[m,d,e],...], "plus": [[m,d,e],...]}, entries sorted
nlohmann::json classtype_to_json(const ClassType& t);
ClassType classtype_from_json(const nlohmann::json& j);

}  // namespace guchar
