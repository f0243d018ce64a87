#pragma once
// Small builders shared by the unit tests.

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <vector>

#include "lifeline/model.hpp"
#include "lifeline/scenario.hpp"

namespace lifeline::test {

inline RobotState robot(Ident id, Point2 loc, bool light = false, bool alive = true, bool launched = true) {
    return {loc, {id, light, alive, launched}};
}

// Configuration of n robots; the listed ones are placed as given, every other
// identifier is a withdrawn robot parked far away.
inline Configuration scene(std::size_t n, std::initializer_list<RobotState> placed) {
    Configuration cf;
    for (std::size_t i = 0; i < n; ++i) {
        cf.robots.push_back(robot(i, {1000.0 + 10.0 * static_cast<double>(i), -1000.0}, false, false, true));
    }
    for (const RobotState& r : placed) {
        cf[r.info.ident] = r;
    }
    return cf;
}

inline Params params(std::size_t n, double D = 1.0, double Dmax = 7.5, double threshold = 3.5) {
    return Params{n, D, Dmax, threshold, {}};
}

inline DemonicAction identity_action(const Configuration& cf, Point2 companion_move = {}) {
    Rng unused(0);
    return {next_frames(FramePolicy::identity, cf, unused), companion_move};
}

inline DemonicAction random_action(const Configuration& cf, std::uint64_t seed, Point2 companion_move = {}) {
    Rng rng(seed);
    return {next_frames(FramePolicy::random_isometry, cf, rng), companion_move};
}

inline double max_coord_diff(const Configuration& a, const Configuration& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i].loc.x - b[i].loc.x));
        m = std::max(m, std::abs(a[i].loc.y - b[i].loc.y));
    }
    return m;
}

inline bool same_infos(const Configuration& a, const Configuration& b) {
    if (a.size() != b.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(a[i].info == b[i].info)) {
            return false;
        }
    }
    return true;
}

}  // namespace lifeline::test
