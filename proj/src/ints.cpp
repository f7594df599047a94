#include "cables/ints.hpp"

#include <limits>
#include <stdexcept>

namespace cables {

Int floor_div(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("floor_div: division by zero");
  Int q = num / den;
  if ((num % den) != 0 && ((num < 0) != (den < 0))) --q;
  return q;
}

Int ceil_div(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("ceil_div: division by zero");
  Int q = num / den;
  if ((num % den) != 0 && ((num < 0) == (den < 0))) ++q;
  return q;
}

bool fits_int64(const Int& x) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  return lo <= x && x <= hi;
}

Int parse_int(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty())
    throw std::invalid_argument("not an integer: \"" + std::string(text) + "\"");
  for (char c : digits)
    if (c < '0' || c > '9')
      throw std::invalid_argument("not an integer: \"" + std::string(text) + "\"");
  return Int(std::string(text));
}

std::string to_string(const Int& x) { return x.str(); }

}  // namespace cables
