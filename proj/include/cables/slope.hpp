#pragma once

// Exact slopes on a torus boundary, cabling parameters, and the integer
// 2x2 coordinate changes that act on slopes. A slope is a point of the
// boundary circle of the tessellated disk: a reduced fraction n/d together
// with the single point at infinity. All arithmetic is exact.

#include "cables/ints.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace cables {

// A slope in lowest terms. The denominator is non-negative and the sign
// lives in the numerator; the unique infinite slope is stored as 1/0
// (every n/0 with n != 0 names the same boundary point). 0/0 is rejected.
class Slope {
 public:
  Slope(Int numerator, Int denominator);

  static Slope infinity() { return Slope(1, 0); }

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }
  bool is_infinite() const { return den_ == 0; }

  // "n/d" (infinity prints as "1/0"). parse() also accepts "inf" and a
  // bare integer "n"; non-reduced input is normalized.
  std::string str() const;
  static Slope parse(std::string_view text);

  friend bool operator==(const Slope& a, const Slope& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Slope& a, const Slope& b) { return !(a == b); }

 private:
  Int num_, den_;
};

std::ostream& operator<<(std::ostream& os, const Slope& s);

// Strict total order realizing the counterclockwise walk around the
// boundary circle starting at 0: first 0, then the positive slopes in
// increasing order, then infinity, then the negative slopes in increasing
// order. Usable as a comparator for ordered containers of slopes.
bool circle_less(const Slope& a, const Slope& b);

struct CircleLess {
  bool operator()(const Slope& a, const Slope& b) const { return circle_less(a, b); }
};

// Geometric intersection number |n1*d2 - d1*n2| of two slopes.
Int intersection_number(const Slope& a, const Slope& b);

// Dividing slope 1/tb of a standard neighborhood of a Legendrian knot with
// the given Thurston-Bennequin number. tb = 0 has no standard neighborhood
// slope and is rejected.
Slope tb_to_dividing_slope(const Int& tb);

// Cabling parameters: the (p,q)-curve winds p times around the meridian
// and q >= 2 times around the longitude, gcd(|p|, q) = 1. q = 1 would name
// the underlying knot itself and is rejected rather than treated as an
// identity, so that typos surface. Construction validates; parse() reads
// the "P/Q" command-line form and rejects non-reduced input outright.
class CableSpec {
 public:
  CableSpec(Int p, Int q);

  const Int& p() const { return p_; }
  const Int& q() const { return q_; }
  Slope slope() const { return Slope(p_, q_); }  // the comparison slope p/q
  Int product() const { return p_ * q_; }

  std::string str() const;
  static CableSpec parse(std::string_view text);

  friend bool operator==(const CableSpec& a, const CableSpec& b) {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }

 private:
  Int p_, q_;
};

std::ostream& operator<<(std::ostream& os, const CableSpec& spec);

// Conversion between the twisting of a cable curve measured against the
// torus framing and the same number measured against the Seifert framing:
// the two differ by exactly p*q.
Int framing_shift(const Int& twisting, const CableSpec& spec);

// An integer 2x2 matrix [[a, b], [c, d]] with determinant +-1, acting on
// slopes by (n, d) -> (a*n + b*d, c*n + d*d). Such maps permute the
// tessellation vertices and preserve intersection numbers; determinant +1
// additionally preserves the counterclockwise circle order.
class UnimodularMap {
 public:
  UnimodularMap(Int a, Int b, Int c, Int d);

  static UnimodularMap identity() { return UnimodularMap(1, 0, 0, 1); }

  // Determinant +1 map sending the given slope to infinity (extended
  // Euclid on the slope's components).
  static UnimodularMap sending_to_infinity(const Slope& s);

  Slope apply(const Slope& s) const;
  UnimodularMap inverse() const;
  Int det() const { return a_ * d_ - b_ * c_; }

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  const Int& c() const { return c_; }
  const Int& d() const { return d_; }

 private:
  Int a_, b_, c_, d_;
};

Slope apply_unimodular(const UnimodularMap& m, const Slope& s);

}  // namespace cables
