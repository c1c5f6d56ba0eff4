#include "sturmpart/circle.hpp"

namespace sturmpart {

std::string CirclePoint::str() const {
    auto idx = orbit_index(*this);
    if (idx) return "<" + std::to_string(*idx) + ">";
    return "frac(" + a.str() + (b.sign() >= 0 ? "+" : "") + b.str() + "*alpha)";
}

CirclePoint orbit_point(long long i) {
    if (i < 0) throw input_error("orbit_point: index must be non-negative");
    return CirclePoint(Rational(0), Rational(-(i128)i));
}

std::optional<long long> orbit_index(const CirclePoint& x) {
    if (!(x.a == Rational(0)) || !x.b.is_integer() || x.b.sign() > 0) return std::nullopt;
    i128 i = -x.b.num();
    if (i > (i128)9'000'000'000'000'000'000LL) return std::nullopt;
    return (long long)i;
}

CirclePoint apply_rotation(const CirclePoint& x, long long j) {
    return CirclePoint(x.a, x.b + Rational((i128)j));
}

QAlpha point_value(const CirclePoint& x, const AlphaSpec& alpha) {
    return frac_of(QAlpha(x.a, x.b), alpha);
}

std::strong_ordering compare_points(const CirclePoint& x, const CirclePoint& y,
                                    const AlphaSpec& alpha) {
    if (x == y) return std::strong_ordering::equal;
    return compare_values(point_value(x, alpha), point_value(y, alpha), alpha);
}

std::string Arc::str() const { return "[" + start.str() + "," + end.str() + ")"; }

QAlpha arc_length(const Arc& arc, const AlphaSpec& alpha) {
    if (arc.start == arc.end) throw input_error("arc with coinciding endpoints");
    QAlpha diff = point_value(arc.end, alpha) - point_value(arc.start, alpha);
    if (sign_of(diff, alpha) <= 0) diff = diff + QAlpha(Rational(1), Rational(0));
    return diff;
}

namespace {

// Position of x relative to the arc start, as a value in [0, 1).
QAlpha offset_from(const CirclePoint& origin, const CirclePoint& x, const AlphaSpec& alpha) {
    return frac_of(QAlpha(x.a - origin.a, x.b - origin.b), alpha);
}

} // namespace

bool arc_contains(const Arc& arc, const CirclePoint& x, const AlphaSpec& alpha) {
    QAlpha pos = offset_from(arc.start, x, alpha);
    QAlpha len = arc_length(arc, alpha);
    return compare_values(pos, len, alpha) == std::strong_ordering::less;
}

bool arc_contains_arc(const Arc& outer, const Arc& inner, const AlphaSpec& alpha) {
    QAlpha pos = offset_from(outer.start, inner.start, alpha);
    QAlpha inner_len = arc_length(inner, alpha);
    QAlpha outer_len = arc_length(outer, alpha);
    return compare_values(pos + inner_len, outer_len, alpha) != std::strong_ordering::greater;
}

bool arcs_disjoint(const Arc& a, const Arc& b, const AlphaSpec& alpha) {
    QAlpha pos = offset_from(a.start, b.start, alpha);
    QAlpha len_a = arc_length(a, alpha);
    QAlpha len_b = arc_length(b, alpha);
    // In coordinates where a = [0, len_a): b = [pos, pos + len_b) must fit
    // inside [len_a, 1).
    if (compare_values(pos, len_a, alpha) == std::strong_ordering::less) return false;
    return compare_values(pos + len_b, QAlpha(Rational(1), Rational(0)), alpha) !=
           std::strong_ordering::greater;
}

Arc shift_arc(const Arc& arc, long long j) {
    return Arc{apply_rotation(arc.start, j), apply_rotation(arc.end, j)};
}

} // namespace sturmpart
