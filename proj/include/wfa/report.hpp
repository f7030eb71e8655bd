#pragma once

/// @file report.hpp
/// @brief JSON run reports, aggregates over repeated runs, and histograms.
///
/// Weights appear as {"rational": "p/q", "decimal": "0.5000"}; the decimal
/// is for reading only. Observed-weight statistics are taken over distinct
/// words, each counted once. Timing fields are the only non-deterministic
/// content and can be left out.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wfa/ga.hpp"
#include "wfa/search.hpp"

namespace wfa::report {

using Json = nlohmann::ordered_json;

struct Options {
    int places = 4;
    bool timing = true;
};

struct ObservedSummary {
    std::size_t distinct = 0;
    Rational mean;
    Rational max;
    double sd = 0.0;              // sample standard deviation
    double ci95_half_width = 0.0; // 1.96 * sd / sqrt(n), normal approximation
};

ObservedSummary summarize(const RunStats& stats);

Json weight(const Rational& w, int places);
Json config(const GaConfig& cfg);

/// One run: best word and weight, observed summary, counters, timing.
Json run(const Wfa& wfa, const RunStats& stats, std::uint64_t seed, const Options& opts);

/// Mean of per-run means, mean of per-run maxima, maximum of maxima and the
/// first run index attaining it.
Json aggregate(const std::vector<const RunStats*>& runs, int places);

/// One line per distinct observed word, "rational,decimal", ascending by
/// weight and then shortlex by word.
std::string histogram_csv(const RunStats& stats, int places);

/// `path` with ".run<i>" inserted before its extension.
std::string indexed_path(const std::string& path, std::size_t index);

} // namespace wfa::report
