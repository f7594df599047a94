#include "cables/farey.hpp"

#include <stdexcept>
#include <utility>

namespace cables {

namespace {

// Strict counterclockwise order of three distinct points on the circle:
// walking counterclockwise from a, we meet b before c. Expressed through
// the linear order that circle_less induces by cutting the circle at 0.
bool ccw_ordered(const Slope& a, const Slope& b, const Slope& c) {
  bool ab = circle_less(a, b);
  bool bc = circle_less(b, c);
  bool ca = circle_less(c, a);
  return (ab && bc) || (bc && ca) || (ca && ab);
}

// Beats-comparison for oracle candidates: is `challenger` strictly closer
// to the ruling slope than `incumbent`? On the Front side the search arc
// starts at the ruling slope, so closer means earlier in ccw order from
// it; on the Back side the arc ends there, so closer means later.
bool closer_to(const Slope& ruling, const Slope& challenger,
               const Slope& incumbent, AttachmentSide side) {
  if (challenger == incumbent) return false;
  return side == AttachmentSide::Front
             ? ccw_ordered(ruling, challenger, incumbent)
             : ccw_ordered(ruling, incumbent, challenger);
}

// edge_path helper once the start has been moved to infinity. Descends by
// nearest-integer steps: the neighbors of infinity are exactly the
// integers, and rounding x to the nearest integer b0 leaves a remainder
// slope whose denominator at most halves, so the recursion terminates and
// the resulting path is as short as possible.
std::vector<Slope> path_from_infinity(const Slope& x) {
  if (x.den() == 1) return {Slope::infinity(), x};
  // Nearest integer to x, rounding halves up: floor((2n + d) / (2d)).
  Int b0 = floor_div(2 * x.num() + x.den(), 2 * x.den());
  // x = b0 - 1/x' with x' = -d / (n - b0*d); recurse on x'.
  Slope xp(-x.den(), x.num() - b0 * x.den());
  std::vector<Slope> tail = path_from_infinity(xp);
  // Map the tail back through z -> b0 - 1/z, which fixes the edge
  // (infinity, b0): infinity -> b0, so the concatenation stays a path.
  UnimodularMap back(b0, -1, 1, 0);
  std::vector<Slope> path;
  path.reserve(tail.size() + 1);
  path.push_back(Slope::infinity());
  for (const Slope& s : tail) path.push_back(back.apply(s));
  return path;
}

}  // namespace

FareyArc::FareyArc(Slope from, Slope to)
    : from_(std::move(from)), to_(std::move(to)) {
  if (from_ == to_)
    throw std::invalid_argument("arc endpoints must differ, got " +
                                from_.str() + " twice");
}

bool is_edge(const Slope& a, const Slope& b) {
  return intersection_number(a, b) == 1;
}

Slope mediant(const Slope& a, const Slope& b) {
  if (!is_edge(a, b))
    throw std::invalid_argument("mediant requires an edge, but " + a.str() +
                                " and " + b.str() + " intersect " +
                                intersection_number(a, b).str() + " times");
  // The triangle over (a, b) is completed by a vertex with representative
  // +-(a + b) or +-(a - b); exactly one of the two normalized results lies
  // on the open arc from a to b, and argument order selects it.
  Slope sum(a.num() + b.num(), a.den() + b.den());
  if (ccw_ordered(a, sum, b)) return sum;
  Slope diff(a.num() - b.num(), a.den() - b.den());
  if (!ccw_ordered(a, diff, b))
    throw std::logic_error("no triangle completion inside arc (" + a.str() +
                           ", " + b.str() + ")");
  return diff;
}

bool arc_contains(const FareyArc& arc, const Slope& x) {
  if (x == arc.from() || x == arc.to()) return true;
  return ccw_ordered(arc.from(), x, arc.to());
}

Slope bypass_slope(const Slope& dividing, const Slope& ruling,
                   AttachmentSide side) {
  if (ruling == dividing)
    throw std::invalid_argument(
        "bypass requires distinct ruling and dividing slopes, got " +
        dividing.str() + " twice");
  // Move the dividing slope to infinity. The search arc becomes a closed
  // half-line of finite slopes plus infinity itself, where "closest to the
  // ruling slope" is simply the nearest integer on the appropriate side:
  // rounding up when the arc runs from the ruling image toward infinity
  // (Front), down when it runs from infinity back (Back). Integers are
  // exactly the neighbors of infinity, so that integer is the answer; an
  // oracle sweep in the test suite validates the shortcut.
  UnimodularMap to_inf = UnimodularMap::sending_to_infinity(dividing);
  Slope image = to_inf.apply(ruling);
  Int k = side == AttachmentSide::Front
              ? ceil_div(image.num(), image.den())
              : floor_div(image.num(), image.den());
  return to_inf.inverse().apply(Slope(k, 1));
}

Slope bypass_slope_oracle(const Slope& dividing, const Slope& ruling,
                          AttachmentSide side, const Int& denom_bound) {
  if (ruling == dividing)
    throw std::invalid_argument(
        "bypass requires distinct ruling and dividing slopes, got " +
        dividing.str() + " twice");
  if (denom_bound < 1)
    throw std::invalid_argument("oracle denominator bound must be >= 1, got " +
                                denom_bound.str());
  FareyArc search = side == AttachmentSide::Front
                        ? FareyArc(ruling, dividing)
                        : FareyArc(dividing, ruling);

  // Candidates: solutions of |n*den(s) - d*num(s)| = 1 with 0 <= d <=
  // denom_bound. For finite s each denominator admits at most two
  // numerators; for s at infinity the neighbors are all the integers, and
  // a window around the ruling slope covers every one that can win.
  std::vector<Slope> candidates;
  if (dividing.is_infinite()) {
    Int window = abs(ruling.num()) + ruling.den() + 2;
    for (Int n = -window; n <= window; ++n) candidates.push_back(Slope(n, 1));
  } else {
    for (Int d = 0; d <= denom_bound; ++d) {
      for (int sign : {1, -1}) {
        Int t = d * dividing.num() + sign;
        if (t % dividing.den() != 0) continue;
        candidates.push_back(Slope(t / dividing.den(), d));
      }
    }
  }

  bool found = false;
  Slope best = Slope::infinity();
  for (const Slope& c : candidates) {
    if (c == dividing || !is_edge(c, dividing)) continue;
    if (!arc_contains(search, c)) continue;
    if (c == ruling) return c;  // distance zero, nothing beats it
    if (!found || closer_to(ruling, c, best, side)) {
      best = c;
      found = true;
    }
  }
  if (!found)
    throw std::invalid_argument(
        "no bypass candidate with denominator <= " + denom_bound.str() +
        "; increase the bound (denominator(dividing) + denominator(ruling) "
        "always suffices)");
  return best;
}

std::vector<Slope> edge_path(const Slope& a, const Slope& b) {
  if (a == b)
    throw std::invalid_argument("edge path endpoints must differ, got " +
                                a.str() + " twice");
  // Normalize so the path starts at infinity, build it there, then map
  // back. Unimodular maps act on the tessellation by graph isomorphisms,
  // so minimality transports along with the path.
  UnimodularMap to_inf = UnimodularMap::sending_to_infinity(a);
  std::vector<Slope> raw = path_from_infinity(to_inf.apply(b));
  UnimodularMap back = to_inf.inverse();
  std::vector<Slope> path;
  path.reserve(raw.size());
  for (const Slope& s : raw) path.push_back(back.apply(s));
  return path;
}

}  // namespace cables
