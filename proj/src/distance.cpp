#include "wfa/distance.hpp"

#include <future>

#include "wfa/algebra.hpp"

namespace wfa {

namespace {

DirectionEstimate estimate_direction(const Wfa& diff, const GaConfig& cfg, std::size_t witness_count) {
    GaResult r = run_ga(diff, cfg);
    DirectionEstimate out;
    out.best = r.best.fitness;
    for (auto& ind : r.stats.ranked_observed(witness_count)) {
        out.witnesses.push_back({std::move(ind.word), std::move(ind.fitness)});
    }
    out.stats = std::move(r.stats);
    return out;
}

} // namespace

DistanceEstimate distance_estimate(const Wfa& a, const Wfa& b, const GaConfig& cfg, std::size_t witness_count,
                                   unsigned jobs) {
    const Wfa ab = subtract(a, b);
    const Wfa ba = subtract(b, a);
    DistanceEstimate out;
    if (jobs > 1) {
        auto pending = std::async(std::launch::async, [&] { return estimate_direction(ba, cfg, witness_count); });
        out.a_minus_b = estimate_direction(ab, cfg, witness_count);
        out.b_minus_a = pending.get();
    } else {
        out.a_minus_b = estimate_direction(ab, cfg, witness_count);
        out.b_minus_a = estimate_direction(ba, cfg, witness_count);
    }
    out.estimate = std::max(out.a_minus_b.best, out.b_minus_a.best);
    return out;
}

DistanceExact distance_exact(const Wfa& a, const Wfa& b, std::size_t k, std::uint64_t budget) {
    const auto ab = exhaustive_search(subtract(a, b), k, 1, budget);
    const auto ba = exhaustive_search(subtract(b, a), k, 1, budget);
    const ScoredWord& top = ranks_before(ba.front(), ab.front()) ? ba.front() : ab.front();
    return {top.weight, top.word};
}

} // namespace wfa
