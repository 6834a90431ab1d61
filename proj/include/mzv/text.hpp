#pragma once

#include <string>
#include <string_view>

#include "mzv/bipoly.hpp"

namespace mzv {

/// Text forms. Coefficients print as their integer element codes, so over a
/// prime field "3*t^2+1" reads as expected; terms run from high to low degree.
std::string to_string(const Poly& f);
/// "(num)/(den)".
std::string to_string(const RatFunc& r);
/// Terms "T^e*(num)/(den)" joined by " + ", highest T-power first; "0" if empty.
std::string to_string(const BiPoly& h);

Poly parse_poly(const Field& f, std::string_view s);
RatFunc parse_ratfunc(const Field& f, std::string_view s);
BiPoly parse_bipoly(const Field& f, std::string_view s);

/// Compact common-denominator form used by the on-disk cache:
/// one line "den <poly>", then one line "T<e> <poly>" per numerator.
std::string to_storage(const BiPoly& h);
BiPoly from_storage(const Field& f, std::string_view s);

}  // namespace mzv
