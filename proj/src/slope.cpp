#include "cables/slope.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace cables {

namespace {

Int gcd_abs(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

// Position class for the circle order: 0, positives, infinity, negatives.
int circle_class(const Slope& s) {
  if (s.is_infinite()) return 2;
  if (s.num() == 0) return 0;
  return s.num() > 0 ? 1 : 3;
}

}  // namespace

Slope::Slope(Int numerator, Int denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (num_ == 0 && den_ == 0)
    throw std::invalid_argument("slope 0/0 is undefined");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Int g = gcd_abs(num_, den_);
  num_ /= g;
  den_ /= g;
  if (den_ == 0) num_ = 1;  // one point at infinity, not two
}

std::string Slope::str() const { return num_.str() + "/" + den_.str(); }

Slope Slope::parse(std::string_view text) {
  if (text == "inf") return infinity();
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Slope(parse_int(text), 1);
  Int n = parse_int(text.substr(0, slash));
  Int d = parse_int(text.substr(slash + 1));
  if (n == 0 && d == 0)
    throw std::invalid_argument("slope 0/0 is undefined");
  return Slope(std::move(n), std::move(d));
}

std::ostream& operator<<(std::ostream& os, const Slope& s) {
  return os << s.str();
}

bool circle_less(const Slope& a, const Slope& b) {
  int ca = circle_class(a), cb = circle_class(b);
  if (ca != cb) return ca < cb;
  if (ca == 0 || ca == 2) return false;  // 0 and infinity are singletons
  // Same sign class, both finite with positive denominators: exact compare.
  return a.num() * b.den() < b.num() * a.den();
}

Int intersection_number(const Slope& a, const Slope& b) {
  return abs(a.num() * b.den() - a.den() * b.num());
}

Slope tb_to_dividing_slope(const Int& tb) {
  if (tb == 0)
    throw std::invalid_argument(
        "tb = 0 has no standard-neighborhood dividing slope");
  return Slope(1, tb);
}

CableSpec::CableSpec(Int p, Int q) : p_(std::move(p)), q_(std::move(q)) {
  if (q_ < 2)
    throw std::invalid_argument("cable spec requires q >= 2, got q = " +
                                q_.str());
  if (gcd_abs(p_, q_) != 1)
    throw std::invalid_argument("cable spec requires gcd(|p|, q) = 1, got " +
                                p_.str() + "/" + q_.str());
}

std::string CableSpec::str() const { return p_.str() + "/" + q_.str(); }

CableSpec CableSpec::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    throw std::invalid_argument("cable spec must be written P/Q, got \"" +
                                std::string(text) + "\"");
  return CableSpec(parse_int(text.substr(0, slash)),
                   parse_int(text.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const CableSpec& spec) {
  return os << spec.str();
}

Int framing_shift(const Int& twisting, const CableSpec& spec) {
  return twisting + spec.product();
}

UnimodularMap::UnimodularMap(Int a, Int b, Int c, Int d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  Int det = a_ * d_ - b_ * c_;
  if (det != 1 && det != -1)
    throw std::invalid_argument("matrix is not unimodular (det = " +
                                det.str() + ")");
}

UnimodularMap UnimodularMap::sending_to_infinity(const Slope& s) {
  // Extended Euclid: u*n + v*d = 1 (the components are coprime by
  // construction). Rows (u, v) and (-d, n) give determinant
  // u*n + v*d = +1 and send (n, d) to (1, 0).
  Int old_r = s.num(), r = s.den();
  Int old_u = 1, u = 0;
  Int old_v = 0, v = 1;
  while (r != 0) {
    Int q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_u -= q * u;
    std::swap(old_u, u);
    old_v -= q * v;
    std::swap(old_v, v);
  }
  if (old_r < 0) {
    old_u = -old_u;
    old_v = -old_v;
  }
  return UnimodularMap(old_u, old_v, -s.den(), s.num());
}

Slope UnimodularMap::apply(const Slope& s) const {
  return Slope(a_ * s.num() + b_ * s.den(), c_ * s.num() + d_ * s.den());
}

UnimodularMap UnimodularMap::inverse() const {
  // adj / det, and det is +-1, so the inverse stays integral.
  if (det() == 1) return UnimodularMap(d_, -b_, -c_, a_);
  return UnimodularMap(-d_, b_, c_, -a_);
}

Slope apply_unimodular(const UnimodularMap& m, const Slope& s) {
  return m.apply(s);
}

}  // namespace cables
