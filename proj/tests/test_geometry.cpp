#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lifeline/geometry.hpp"
#include "lifeline/scenario.hpp"

using namespace lifeline;

namespace {

// Independent reference: the frame as an explicit 2x2 matrix plus offset.
Point2 matrix_apply(double theta, bool mirror, Point2 t, Point2 p) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const double m = mirror ? -1.0 : 1.0;
    const double a11 = c, a12 = -s * m, a21 = s, a22 = c * m;
    return {a11 * p.x + a12 * p.y + t.x, a21 * p.x + a22 * p.y + t.y};
}

}  // namespace

TEST_SUITE("geometry") {
    TEST_CASE("dist examples") {
        CHECK(dist({0, 0}, {3, 4}) == 5.0);
        CHECK(dist({1, 1}, {1, 1}) == 0.0);
        CHECK(dist({-4, -4}, {-3, 0}) == doctest::Approx(std::sqrt(17.0)).epsilon(1e-15));
        CHECK(dist({-4, -4}, {-3, 0}) == doctest::Approx(4.1231).epsilon(1e-4));
    }

    TEST_CASE("frame_apply examples") {
        const Point2 a = frame_apply(Frame{}, {2, 3});
        CHECK(a == Point2{2, 3});

        const Point2 b = frame_apply(Frame{std::numbers::pi / 2, false, {}}, {1, 0});
        CHECK(std::abs(b.x) < 1e-15);
        CHECK(b.y == doctest::Approx(1.0));

        const Point2 c = frame_apply(Frame{0.0, true, {1, 1}}, {2, 3});
        CHECK(c == Point2{3, -2});
    }

    TEST_CASE("frame_apply agrees with an explicit matrix") {
        Rng rng(11);
        for (int i = 0; i < 1000; ++i) {
            const double th = rng.uniform(-10, 10);
            const bool mir = rng.coin();
            const Point2 t{rng.uniform(-50, 50), rng.uniform(-50, 50)};
            const Point2 p{rng.uniform(-50, 50), rng.uniform(-50, 50)};
            const Point2 got = frame_apply(Frame{th, mir, t}, p);
            const Point2 want = matrix_apply(th, mir, t, p);
            CHECK(std::abs(got.x - want.x) <= 1e-12);
            CHECK(std::abs(got.y - want.y) <= 1e-12);
        }
    }

    TEST_CASE("frame inverse and isometry over random frames") {
        Rng rng(2024);
        int bad_inverse = 0;
        int bad_distance = 0;
        for (int i = 0; i < 10000; ++i) {
            const Frame f{rng.uniform(0, 2 * std::numbers::pi), rng.coin(),
                          {rng.uniform(-20, 20), rng.uniform(-20, 20)}};
            const Point2 p{rng.uniform(-20, 20), rng.uniform(-20, 20)};
            const Point2 q{rng.uniform(-20, 20), rng.uniform(-20, 20)};
            const Point2 back = frame_apply(frame_inverse(f), frame_apply(f, p));
            if (std::abs(back.x - p.x) > 1e-12 || std::abs(back.y - p.y) > 1e-12) {
                ++bad_inverse;
            }
            const double d0 = dist(p, q);
            const double d1 = dist(frame_apply(f, p), frame_apply(f, q));
            if (std::abs(d0 - d1) > 1e-12) {
                ++bad_distance;
            }
        }
        CHECK(bad_inverse == 0);
        CHECK(bad_distance == 0);
    }

    TEST_CASE("inverse keeps the mirror flag") {
        const Frame f{0.3, true, {1, 2}};
        CHECK(frame_inverse(f).reflect);
        CHECK_FALSE(frame_inverse(Frame{0.3, false, {1, 2}}).reflect);
    }

    TEST_CASE("move_toward examples") {
        CHECK(move_toward({0, 0}, {10, 0}, 1) == Point2{1, 0});
        CHECK(move_toward({0, 0}, {0.5, 0}, 1) == Point2{0.5, 0});
        const Point2 m = move_toward({0, 0}, {3, 4}, 1);
        CHECK(m.x == doctest::Approx(0.6).epsilon(1e-15));
        CHECK(m.y == doctest::Approx(0.8).epsilon(1e-15));
        CHECK(move_toward({2, 2}, {2, 2}, 1) == Point2{2, 2});
    }

    TEST_CASE("move_toward bounds") {
        Rng rng(5);
        for (int i = 0; i < 10000; ++i) {
            const Point2 a{rng.uniform(-30, 30), rng.uniform(-30, 30)};
            const Point2 b{rng.uniform(-30, 30), rng.uniform(-30, 30)};
            const double s = rng.uniform(0, 5);
            const Point2 m = move_toward(a, b, s);
            const double total = dist(a, b);
            CHECK(dist(a, m) <= s + 1e-12);
            // The result lies on the segment: the two legs add up to the whole.
            CHECK(std::abs(dist(a, m) + dist(m, b) - total) <= 1e-9);
            CHECK(dist(a, m) == doctest::Approx(std::min(s, total)).epsilon(1e-12));
        }
    }
}
