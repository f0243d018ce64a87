#include "lifeline/geometry.hpp"

namespace lifeline {

Point2 frame_apply(const Frame& f, const Point2& p) {
    const double mx = p.x;
    const double my = f.reflect ? -p.y : p.y;
    const double c = std::cos(f.rotation);
    const double s = std::sin(f.rotation);
    return {c * mx - s * my + f.translation.x, s * mx + c * my + f.translation.y};
}

Frame frame_inverse(const Frame& f) {
    // x -> R M x + t inverts to y -> M R^-1 (y - t).
    // Without mirror that is R(-a) y - R(-a) t; with mirror, M R(-a) = R(a) M,
    // so the inverse is again "rotate a, mirror" with translation -R(a) M t.
    Frame inv;
    inv.reflect = f.reflect;
    inv.rotation = f.reflect ? f.rotation : -f.rotation;
    const Point2 moved = frame_apply(Frame{inv.rotation, inv.reflect, kOrigin}, f.translation);
    inv.translation = -moved;
    return inv;
}

Point2 move_toward(const Point2& from, const Point2& to, double max_step) {
    const double d = dist(from, to);
    if (d <= max_step) {
        return to;
    }
    const double k = max_step / d;
    return {from.x + (to.x - from.x) * k, from.y + (to.y - from.y) * k};
}

}  // namespace lifeline
