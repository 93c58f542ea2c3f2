#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace posetdim {

using Rational = boost::multiprecision::cpp_rational;

struct Point {
  Rational x;
  Rational y;
  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator<(const Point& o) const { return x < o.x || (x == o.x && y < o.y); }
};

Point pt(long long x, long long y);
Point pt(const Rational& x, const Rational& y);

// Sign of the cross product (b - a) x (c - a).
int orientation(const Point& a, const Point& b, const Point& c);
bool on_segment(const Point& p, const Point& a, const Point& b);

struct SegmentIntersection {
  enum Kind { none, point, overlap } kind = none;
  Point at;  // meaningful for point
};

SegmentIntersection intersect(const Point& a, const Point& b, const Point& c, const Point& d);

// "num/den" in lowest terms, or "num" for integers.
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& s);

}  // namespace posetdim
