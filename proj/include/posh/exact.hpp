#pragma once

#include <array>

#include <boost/multiprecision/cpp_int.hpp>

namespace posh {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct IntPoint {
    BigInt x;
    BigInt y;
    friend bool operator==(const IntPoint&, const IntPoint&) = default;
};

struct RatPoint {
    Rational x;
    Rational y;
    friend bool operator==(const RatPoint&, const RatPoint&) = default;
};

inline RatPoint to_rational(const IntPoint& p) { return {Rational(p.x), Rational(p.y)}; }

// Sign of the orientation determinant of (a, b, c): +1 if c lies left of the
// directed line a->b, -1 if right, 0 if collinear.
int orientation(const IntPoint& a, const IntPoint& b, const IntPoint& c);

// Strict counter-clockwise order of direction vectors starting at angle 0.
bool angle_less(const BigInt& ax, const BigInt& ay, const BigInt& bx, const BigInt& by);

// True if the closed segments ab and cd share a point that is not an endpoint
// common to both. Collinear overlap of positive length always counts.
bool segments_conflict(const IntPoint& a, const IntPoint& b, const IntPoint& c, const IntPoint& d);

// Same predicate on machine integers; callers guarantee |coordinates| < 2^62.
using SmallPoint = std::array<__int128, 2>;
bool segments_conflict_small(const SmallPoint& a, const SmallPoint& b, const SmallPoint& c, const SmallPoint& d);

}  // namespace posh
