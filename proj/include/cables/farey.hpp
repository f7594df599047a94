#pragma once

#include <vector>

#include "cables/slope.hpp"

namespace cables {

// Which side of the attaching arc a bypass is glued on. The two sides
// select opposite search directions along the circle of slopes.
enum class AttachmentSide { Front, Back };

// A closed counterclockwise arc of the circle of slopes, from `from` to
// `to`. Both endpoints belong to the arc. The two endpoints must differ;
// the complement arc is FareyArc(to, from).
class FareyArc {
 public:
  FareyArc(Slope from, Slope to);

  const Slope& from() const { return from_; }
  const Slope& to() const { return to_; }

 private:
  Slope from_, to_;
};

// Two slopes cobound an edge of the tessellation exactly when their
// integral representatives intersect once.
bool is_edge(const Slope& a, const Slope& b);

// The third vertex of the tessellation triangle adjacent to edge (a, b)
// on the side swept out counterclockwise from a to b. Requires
// is_edge(a, b); argument order picks one of the two candidates, so
// mediant(a, b) and mediant(b, a) are the two distinct triangle
// completions.
Slope mediant(const Slope& a, const Slope& b);

// Whether x lies on the closed arc.
bool arc_contains(const FareyArc& arc, const Slope& x);

// Dividing slope after attaching a bypass along a ruling curve: the point
// of the arc from r to s (Front) or from s to r (Back) closest to r that
// cobounds an edge with s. Requires r != s. If r itself cobounds an edge
// with s the answer is r.
Slope bypass_slope(const Slope& dividing, const Slope& ruling,
                   AttachmentSide side);

// Reference implementation of bypass_slope by bounded enumeration: list
// every slope with denominator in [0, denom_bound] that cobounds an edge
// with `dividing` (fixing the denominator pins the numerator through the
// edge equation, so no numerator cutoff is needed), keep those in the
// search arc, and return the one closest to `ruling` by circular
// comparison. A bound of denominator(dividing) + denominator(ruling)
// always suffices for the answer to be in range. Throws if
// denom_bound < 1 or if no candidate exists at the given bound.
Slope bypass_slope_oracle(const Slope& dividing, const Slope& ruling,
                          AttachmentSide side, const Int& denom_bound);

// Shortest path from a to b through edges of the tessellation, endpoints
// included. Requires a != b; adjacent entries always cobound an edge, and
// no shorter edge path joins the endpoints.
std::vector<Slope> edge_path(const Slope& a, const Slope& b);

}  // namespace cables
