#include "posetdim/rational.hpp"

#include <algorithm>
#include <stdexcept>

#include "posetdim/errors.hpp"

namespace posetdim {

Point pt(long long x, long long y) { return {Rational(x), Rational(y)}; }
Point pt(const Rational& x, const Rational& y) { return {x, y}; }

int orientation(const Point& a, const Point& b, const Point& c) {
  Rational v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
  if (orientation(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

SegmentIntersection intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
  SegmentIntersection r;
  int o1 = orientation(a, b, c), o2 = orientation(a, b, d);
  int o3 = orientation(c, d, a), o4 = orientation(c, d, b);
  if (o1 == 0 && o2 == 0) {
    // Collinear: compare the lexicographic extents.
    Point lo1 = std::min(a, b), hi1 = std::max(a, b);
    Point lo2 = std::min(c, d), hi2 = std::max(c, d);
    Point lo = std::max(lo1, lo2), hi = std::min(hi1, hi2);
    if (hi < lo) return r;
    if (lo == hi) {
      r.kind = SegmentIntersection::point;
      r.at = lo;
    } else {
      r.kind = SegmentIntersection::overlap;
    }
    return r;
  }
  if (o1 * o2 > 0 || o3 * o4 > 0) return r;
  Rational den = (b.x - a.x) * (d.y - c.y) - (b.y - a.y) * (d.x - c.x);
  Rational t = ((c.x - a.x) * (d.y - c.y) - (c.y - a.y) * (d.x - c.x)) / den;
  r.kind = SegmentIntersection::point;
  r.at = {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
  return r;
}

std::string to_string(const Rational& r) {
  auto num = boost::multiprecision::numerator(r);
  auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& s) {
  auto digits = [](const std::string& t) {
    return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  const bool negative = !num.empty() && num[0] == '-';
  if (!digits(negative ? num.substr(1) : num) || !digits(den)) throw ParseError("malformed rational '" + s + "'");
  boost::multiprecision::cpp_int n(num), d(den);
  if (d == 0) throw ParseError("zero denominator in '" + s + "'");
  return Rational(n, d);
}

}  // namespace posetdim
