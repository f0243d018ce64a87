#include "lifeline/oracle.hpp"

#include <algorithm>
#include <numbers>

namespace lifeline {

Observation random_observation(const Params& p, Rng& rng) {
    constexpr Ident kMaxIdent = 40;
    Observation obs;
    obs.self = {static_cast<Ident>(1 + rng.below(kMaxIdent)), rng.coin(), true, true};

    const std::size_t count = 1 + rng.below(20);
    std::vector<Ident> pool;
    for (Ident i = 0; i <= kMaxIdent; ++i) {
        if (i != obs.self.ident) {
            pool.push_back(i);
        }
    }
    // Fisher-Yates with our own draws (std::shuffle is not portable).
    for (std::size_t i = pool.size(); i > 1; --i) {
        std::swap(pool[i - 1], pool[rng.below(i)]);
    }
    std::vector<Ident> idents(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(count));
    if (std::none_of(idents.begin(), idents.end(), [&](Ident id) { return id < obs.self.ident; })) {
        idents.front() = rng.below(obs.self.ident);
    }
    std::sort(idents.begin(), idents.end());

    const double snaps[] = {p.D, p.danger_radius(), p.pursuit_distance()};
    for (Ident id : idents) {
        double r = p.Dmax * std::sqrt(rng.uniform01());
        if (rng.uniform01() < 0.15) {
            r = snaps[rng.below(3)];
        }
        const double a = rng.uniform(0.0, 2.0 * std::numbers::pi);
        Point2 loc{r * std::cos(a), r * std::sin(a)};
        if (loc.norm() > p.Dmax) {
            loc = loc * (p.Dmax / loc.norm());
        }
        obs.others.push_back({loc, {id, rng.coin(), true, true}});
    }
    return obs;
}

OracleResult run_oracle(const Params& p, const ProtocolFns& fns, std::size_t samples, std::uint64_t seed) {
    OracleResult res;
    Rng rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        const Observation obs = random_observation(p, rng);
        const AxiomReport rep = check_axioms(p, fns, obs);
        ++res.samples;
        if (rep.all_hold()) {
            continue;
        }
        ++res.failures;
        for (std::size_t c = 0; c < kClauseCount; ++c) {
            res.clause_failures[c] += rep.clauses[c].holds ? 0 : 1;
        }
        if (!res.first_counterexample) {
            res.first_counterexample = obs;
            res.first_report = rep;
        }
    }
    return res;
}

}  // namespace lifeline
