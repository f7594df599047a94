#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace cables {

// Every integer in this library is exact and unbounded. Iterated cabling
// multiplies winding numbers into tb-scale values, which outgrow 64 bits
// after a handful of steps, so fixed-width arithmetic is not an option.
using Int = boost::multiprecision::cpp_int;

// Division with the quotient rounded toward -infinity / +infinity.
// (cpp_int's operator/ truncates toward zero, which is the wrong tool for
// locating a rational between consecutive integers.)
Int floor_div(const Int& num, const Int& den);
Int ceil_div(const Int& num, const Int& den);

bool fits_int64(const Int& x);

// Strict decimal parse: optional leading '-', then digits, nothing else.
Int parse_int(std::string_view text);

std::string to_string(const Int& x);

}  // namespace cables
