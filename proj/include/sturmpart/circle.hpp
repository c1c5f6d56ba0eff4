#pragma once

#include <optional>

#include "sturmpart/alpha.hpp"

namespace sturmpart {

// Point frac(a + b*alpha) on the circle R/Z. Canonical form keeps a in [0,1),
// which makes equality structural: two canonical points are equal iff their
// coordinate pairs match (forced by irrationality of alpha).
struct CirclePoint {
    Rational a, b;

    CirclePoint() = default;
    CirclePoint(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {
        a = a - Rational(a.floor());
    }

    friend bool operator==(const CirclePoint& x, const CirclePoint& y) {
        return x.a == y.a && x.b == y.b;
    }

    std::string str() const;
};

// <i> = T^{-i}(0) = frac(-i*alpha).
CirclePoint orbit_point(long long i);

// Orbit index if the point is some <i> with i >= 0.
std::optional<long long> orbit_index(const CirclePoint& x);

// T^j(x): the rotation applied j times (j may be negative).
CirclePoint apply_rotation(const CirclePoint& x, long long j);

// Value of the point in the fundamental domain [0, 1).
QAlpha point_value(const CirclePoint& x, const AlphaSpec& alpha);

std::strong_ordering compare_points(const CirclePoint& x, const CirclePoint& y,
                                    const AlphaSpec& alpha);

// Half-open arc [start, end) travelled in the increasing circle direction;
// may wrap 0. start == end is not allowed (no empty/full arcs).
struct Arc {
    CirclePoint start, end;

    friend bool operator==(const Arc& a, const Arc& b) {
        return a.start == b.start && a.end == b.end;
    }

    std::string str() const;
};

QAlpha arc_length(const Arc& arc, const AlphaSpec& alpha);

bool arc_contains(const Arc& arc, const CirclePoint& x, const AlphaSpec& alpha);

// [inner] subset of [outer], both as circular half-open arcs.
bool arc_contains_arc(const Arc& outer, const Arc& inner, const AlphaSpec& alpha);

bool arcs_disjoint(const Arc& a, const Arc& b, const AlphaSpec& alpha);

Arc shift_arc(const Arc& arc, long long j);

} // namespace sturmpart
