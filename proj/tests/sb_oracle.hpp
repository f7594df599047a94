#pragma once

// Test-only oracle for the circular order of slopes.
//
// The Stern-Brocot tree enumerates every reduced fraction exactly once, and
// an in-order traversal of it emits the positive rationals in increasing
// order.  Gluing two such traversals around 0 and infinity therefore gives
// the full counterclockwise boundary order
//
//     0, (positives ascending), infinity, (negatives ascending), back to 0
//
// without ever comparing two slopes -- the order falls out of the traversal
// alone.  That independence is the point: tests compare circle_less and
// arc_contains against positions in this list.
//
// Pruning is sound because mediants grow componentwise: once |numerator| or
// denominator exceeds the bound it can never shrink again further down that
// subtree.

#include <vector>

#include "cables/ints.hpp"
#include "cables/slope.hpp"

namespace cables::testing {

namespace detail {

struct Frac {
  Int num;
  Int den;
};

inline void sb_walk(const Frac& lo, const Frac& hi, const Int& bound,
                    std::vector<Slope>& out) {
  Frac mid{lo.num + hi.num, lo.den + hi.den};
  Int num_abs = abs(mid.num);
  if (num_abs > bound || mid.den > bound) return;
  sb_walk(lo, mid, bound, out);
  out.push_back(Slope(mid.num, mid.den));
  sb_walk(mid, hi, bound, out);
}

}  // namespace detail

// Every reduced slope with |numerator| <= bound and denominator <= bound
// (infinity included), in counterclockwise circle order starting at 0.
inline std::vector<Slope> circle_ordered_slopes(const Int& bound) {
  std::vector<Slope> out;
  out.push_back(Slope(0, 1));
  detail::sb_walk({Int(0), Int(1)}, {Int(1), Int(0)}, bound, out);
  out.push_back(Slope::infinity());
  detail::sb_walk({Int(-1), Int(0)}, {Int(0), Int(1)}, bound, out);
  return out;
}

}  // namespace cables::testing
