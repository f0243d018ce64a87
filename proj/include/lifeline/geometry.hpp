#pragma once
/**
 * @file geometry.hpp
 * @brief Planar Euclidean primitives used by the simulator.
 *
 * Frames are rigid isometries (rotation, optional mirror, translation).
 * Scale is fixed to 1 so that sensing radii keep the same value in every
 * local frame.
 */

#include <cmath>

namespace lifeline {

struct Point2 {
    double x{0.0};
    double y{0.0};

    constexpr Point2() = default;
    constexpr Point2(double X, double Y) : x(X), y(Y) {}

    constexpr Point2 operator+(const Point2& r) const { return {x + r.x, y + r.y}; }
    constexpr Point2 operator-(const Point2& r) const { return {x - r.x, y - r.y}; }
    constexpr Point2 operator-() const { return {-x, -y}; }
    constexpr Point2 operator*(double s) const { return {x * s, y * s}; }
    friend constexpr Point2 operator*(double s, const Point2& p) { return {p.x * s, p.y * s}; }

    // Bitwise-style equality (no tolerance); -0.0 == 0.0 as in IEEE.
    constexpr bool operator==(const Point2&) const = default;

    double norm() const { return std::hypot(x, y); }
    bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

inline constexpr Point2 kOrigin{0.0, 0.0};

/// Euclidean distance.
inline double dist(const Point2& p, const Point2& q) { return std::hypot(q.x - p.x, q.y - p.y); }

/// Change of reference frame: p -> R(rotation) * M * p + translation, where M
/// mirrors about the x-axis when `reflect` is set.
struct Frame {
    double rotation{0.0};
    bool reflect{false};
    Point2 translation{};
};

Point2 frame_apply(const Frame& f, const Point2& p);

/// The frame g such that frame_apply(g, frame_apply(f, p)) == p (up to rounding).
Frame frame_inverse(const Frame& f);

/// Point on [from, to] at distance at most `max_step` from `from`; returns `to`
/// itself when it is already within reach.
Point2 move_toward(const Point2& from, const Point2& to, double max_step);

}  // namespace lifeline
