#include "wfa/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace wfa::report {

ObservedSummary summarize(const RunStats& stats) {
    ObservedSummary s;
    s.distinct = stats.observed.size();
    if (s.distinct == 0) {
        return s;
    }
    Rational total;
    bool first = true;
    for (const auto& [word, w] : stats.observed) {
        total += w;
        if (first || w > s.max) {
            s.max = w;
            first = false;
        }
    }
    s.mean = total / Rational(static_cast<long>(s.distinct));
    if (s.distinct > 1) {
        Rational squares;
        for (const auto& [word, w] : stats.observed) {
            const Rational d = w - s.mean;
            squares.add_product(d, d);
        }
        const double var = (squares / Rational(static_cast<long>(s.distinct - 1))).to_double();
        s.sd = std::sqrt(var);
        s.ci95_half_width = 1.96 * s.sd / std::sqrt(static_cast<double>(s.distinct));
    }
    return s;
}

Json weight(const Rational& w, int places) {
    Json j;
    j["rational"] = w.to_string();
    j["decimal"] = w.to_decimal(places);
    return j;
}

namespace {

std::string fixed(double x, int places) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", places, x);
    return buf;
}

} // namespace

Json config(const GaConfig& cfg) {
    Json j;
    j["k"] = cfg.max_length;
    j["population_size"] = cfg.population_size;
    j["selection_bias"] = cfg.selection_bias;
    j["children_rate"] = cfg.children_rate;
    j["mutation_prob"] = cfg.mutation_prob;
    j["per_symbol_rate"] = cfg.per_symbol_rate;
    j["timeout_seconds"] = cfg.timeout_seconds;
    j["stagnation_threshold"] = cfg.stagnation_threshold;
    j["mp_boost_factor"] = cfg.mp_boost_factor;
    j["init"] = cfg.init == InitMethod::nbest ? "nbest" : "random";
    j["block_size_override"] = cfg.block_size_override ? Json(*cfg.block_size_override) : Json(nullptr);
    j["max_generations"] = cfg.max_generations ? Json(*cfg.max_generations) : Json(nullptr);
    j["max_evaluations"] = cfg.max_evaluations ? Json(*cfg.max_evaluations) : Json(nullptr);
    j["memo_budget"] = cfg.memo_budget;
    return j;
}

Json run(const Wfa& wfa, const RunStats& stats, std::uint64_t seed, const Options& opts) {
    Json j;
    j["seed"] = seed;
    if (stats.best) {
        j["best"] = {{"word", format_word(wfa, stats.best->word)},
                     {"length", stats.best->word.size()},
                     {"weight", weight(stats.best->fitness, opts.places)}};
    } else {
        j["best"] = nullptr;
    }
    const ObservedSummary s = summarize(stats);
    j["observed"] = {{"distinct", s.distinct},
                     {"mean", weight(s.mean, opts.places)},
                     {"sd", fixed(s.sd, opts.places)},
                     {"ci95_half_width", fixed(s.ci95_half_width, opts.places)},
                     {"max", weight(s.max, opts.places)}};
    j["total_evals"] = stats.total_evals;
    j["generations"] = stats.generations;
    if (opts.timing) {
        j["wall_time_seconds"] = stats.wall_time;
        j["evals_per_second"] = stats.evals_per_second();
    }
    return j;
}

Json aggregate(const std::vector<const RunStats*>& runs, int places) {
    Json j;
    j["runs"] = runs.size();
    if (runs.empty()) {
        return j;
    }
    Rational sum_means;
    Rational sum_max;
    std::optional<Rational> max_of_max;
    std::size_t best_run = 0;
    for (std::size_t r = 0; r < runs.size(); ++r) {
        const ObservedSummary s = summarize(*runs[r]);
        sum_means += s.mean;
        sum_max += s.max;
        if (!max_of_max || s.max > *max_of_max) {
            max_of_max = s.max;
            best_run = r;
        }
    }
    const Rational n(static_cast<long>(runs.size()));
    j["mean_of_means"] = weight(sum_means / n, places);
    j["mean_of_max"] = weight(sum_max / n, places);
    j["max_of_max"] = weight(*max_of_max, places);
    j["best_run"] = best_run;
    return j;
}

std::string histogram_csv(const RunStats& stats, int places) {
    std::vector<Individual> rows = stats.ranked_observed();
    std::sort(rows.begin(), rows.end(), fitness_less);
    std::string out;
    for (const auto& ind : rows) {
        out += ind.fitness.to_string() + "," + ind.fitness.to_decimal(places) + "\n";
    }
    return out;
}

std::string indexed_path(const std::string& path, std::size_t index) {
    const std::string tag = ".run" + std::to_string(index);
    const auto slash = path.find_last_of('/');
    const auto dot = path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash) || dot == 0 ||
        (slash != std::string::npos && dot == slash + 1)) {
        return path + tag;
    }
    return path.substr(0, dot) + tag + path.substr(dot);
}

} // namespace wfa::report
