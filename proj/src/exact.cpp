#include "posh/exact.hpp"

#include <algorithm>

namespace posh {

namespace {

template <class T>
struct P {
    const T& x;
    const T& y;
};

template <class T>
int sign_of(const T& v) {
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

template <class T>
int orient(P<T> a, P<T> b, P<T> c) {
    T det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return sign_of(det);
}

// c is collinear with ab; is it inside the closed segment?
template <class T>
bool within(P<T> a, P<T> b, P<T> c) {
    return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= c.y &&
           c.y <= std::max(a.y, b.y);
}

template <class T>
bool same(P<T> a, P<T> b) {
    return a.x == b.x && a.y == b.y;
}

template <class T>
bool conflict(P<T> a, P<T> b, P<T> c, P<T> d) {
    int o1 = orient(a, b, c), o2 = orient(a, b, d);
    int o3 = orient(c, d, a), o4 = orient(c, d, b);
    bool shared = same(a, c) || same(a, d) || same(b, c) || same(b, d);
    if (o1 == 0 && o2 == 0) {
        // project on x unless ab is vertical
        bool use_x = a.x != b.x;
        const T& a1 = use_x ? a.x : a.y;
        const T& b1 = use_x ? b.x : b.y;
        const T& c1 = use_x ? c.x : c.y;
        const T& d1 = use_x ? d.x : d.y;
        T lo = std::max(std::min(a1, b1), std::min(c1, d1));
        T hi = std::min(std::max(a1, b1), std::max(c1, d1));
        if (lo > hi) return false;
        if (lo < hi) return true;
        return !shared;
    }
    if (shared) return false;
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    if (o1 == 0 && within(a, b, c)) return true;
    if (o2 == 0 && within(a, b, d)) return true;
    if (o3 == 0 && within(c, d, a)) return true;
    if (o4 == 0 && within(c, d, b)) return true;
    return false;
}

}  // namespace

int orientation(const IntPoint& a, const IntPoint& b, const IntPoint& c) {
    return orient<BigInt>({a.x, a.y}, {b.x, b.y}, {c.x, c.y});
}

bool angle_less(const BigInt& ax, const BigInt& ay, const BigInt& bx, const BigInt& by) {
    auto half = [](const BigInt& x, const BigInt& y) { return (y > 0 || (y == 0 && x > 0)) ? 0 : 1; };
    int ha = half(ax, ay), hb = half(bx, by);
    if (ha != hb) return ha < hb;
    return ax * by - ay * bx > 0;
}

bool segments_conflict(const IntPoint& a, const IntPoint& b, const IntPoint& c, const IntPoint& d) {
    return conflict<BigInt>({a.x, a.y}, {b.x, b.y}, {c.x, c.y}, {d.x, d.y});
}

bool segments_conflict_small(const SmallPoint& a, const SmallPoint& b, const SmallPoint& c, const SmallPoint& d) {
    return conflict<__int128>({a[0], a[1]}, {b[0], b[1]}, {c[0], c[1]}, {d[0], d[1]});
}

}  // namespace posh
