// wfa-ga: command-line front end for the WFA toolkit.
//
// Exit codes: 0 success, 1 usage, 2 input or parse error, 3 budget refusal.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wfa/algebra.hpp"
#include "wfa/casestudy.hpp"
#include "wfa/distance.hpp"
#include "wfa/ga.hpp"
#include "wfa/io.hpp"
#include "wfa/parallel.hpp"
#include "wfa/reductions.hpp"
#include "wfa/report.hpp"
#include "wfa/search.hpp"

namespace {

using wfa::report::Json;

enum Exit : int { kOk = 0, kUsage = 1, kInput = 2, kBudget = 3 };

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GaFlags {
    wfa::GaConfig cfg;
    std::string init = "random";
    std::optional<std::size_t> block_size;
    std::optional<std::size_t> gens;
    std::optional<std::uint64_t> max_evals;
};

void add_ga_flags(CLI::App* app, GaFlags& f) {
    auto& c = f.cfg;
    app->add_option("--k", c.max_length, "Maximum word length")->capture_default_str();
    app->add_option("--pop", c.population_size, "Population size N")->capture_default_str();
    app->add_option("--beta", c.selection_bias, "Rank selection bias (> 1)")->capture_default_str();
    app->add_option("--cr", c.children_rate, "Children rate")->capture_default_str();
    app->add_option("--mp", c.mutation_prob, "Mutation probability")->capture_default_str();
    app->add_option("--lambda", c.per_symbol_rate, "Per-symbol mutation rate")->capture_default_str();
    app->add_option("--timeout", c.timeout_seconds, "Wall-clock limit in seconds")->capture_default_str();
    app->add_option("--gens", f.gens, "Generation cap");
    app->add_option("--max-evals", f.max_evals, "Evaluation cap (checked between generations)");
    app->add_option("--seed", c.rng_seed, "Random seed")->capture_default_str();
    app->add_option("--init", f.init, "Initial population")
        ->check(CLI::IsMember({"random", "nbest"}))
        ->capture_default_str();
    app->add_option("--block-size", f.block_size, "Memo table block size");
    app->add_option("--memo-budget", c.memo_budget, "Memo table budget in rational cells")->capture_default_str();
}

wfa::GaConfig finish(const GaFlags& f) {
    wfa::GaConfig c = f.cfg;
    c.init = f.init == "nbest" ? wfa::InitMethod::nbest : wfa::InitMethod::random;
    c.block_size_override = f.block_size;
    c.max_generations = f.gens;
    c.max_evaluations = f.max_evals;
    try {
        wfa::validate_config(c);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return c;
}

struct OutputFlags {
    std::string out;
    std::string hist;
    int places = 4;
    bool no_timing = false;
    std::size_t repeats = 1;
    unsigned jobs = wfa::default_jobs();
};

void add_output_flags(CLI::App* app, OutputFlags& o, bool with_runs) {
    app->add_option("-o,--out", o.out, "Report path (stdout when omitted)");
    app->add_option("--places", o.places, "Decimal places in renderings")->capture_default_str();
    if (with_runs) {
        app->add_option("--hist", o.hist, "Histogram CSV path (.runN inserted when repeating)");
        app->add_flag("--no-timing", o.no_timing, "Leave wall time and throughput out of the report");
        app->add_option("--repeats", o.repeats, "Independent runs with seeds seed, seed+1, ...")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        app->add_option("--jobs", o.jobs, "Worker threads for repeats (default from WFA_GA_JOBS)")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    }
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
    } else {
        wfa::io::write_file_atomic(path, text);
    }
}

void write_histograms(const OutputFlags& o, const std::vector<const wfa::RunStats*>& runs) {
    if (o.hist.empty()) {
        return;
    }
    for (std::size_t r = 0; r < runs.size(); ++r) {
        const std::string path = runs.size() == 1 ? o.hist : wfa::report::indexed_path(o.hist, r);
        wfa::io::write_file_atomic(path, wfa::report::histogram_csv(*runs[r], o.places));
    }
}

/// Positions of each run's best within an exhaustive top-n table.
void add_positions(Json& report, const wfa::Wfa& a, std::size_t k, std::size_t top_n, std::uint64_t budget,
                   const std::vector<const wfa::RunStats*>& runs) {
    const auto table = wfa::exhaustive_search(a, k, top_n, budget);
    report["exhaustive"] = {{"top_n", table.size()},
                            {"maximum", wfa::report::weight(table.front().weight, 4)}};
    for (std::size_t r = 0; r < runs.size(); ++r) {
        report["runs"][r]["position"] = wfa::position_in(table, runs[r]->best->fitness);
    }
}

int cmd_eval(const std::string& file, const std::string& word_text, int places, bool paths) {
    const wfa::Wfa a = wfa::io::read_wfa_file(file);
    const wfa::Word w = wfa::parse_word(a, word_text);
    const wfa::Rational weight = paths ? wfa::eval_weight_paths(a, w) : wfa::eval_weight(a, w);
    std::cout << weight.to_string() << " (" << weight.to_decimal(places) << ")\n";
    return kOk;
}

int cmd_validate(const std::string& file) {
    const wfa::WfaParts parts = wfa::io::parse_wfa_parts(wfa::io::read_file(file));
    const auto violations = wfa::validate(parts);
    if (violations.empty()) {
        std::cout << "ok\n";
        return kOk;
    }
    for (const auto& v : violations) {
        std::cout << v << "\n";
    }
    return kInput;
}

struct PositionFlags {
    std::optional<std::size_t> top_n;
    std::uint64_t budget = wfa::kDefaultEnumerationBudget;
};

int cmd_maximize(const std::string& file, const GaFlags& gf, const OutputFlags& o, const PositionFlags& pf) {
    const wfa::Wfa a = wfa::io::read_wfa_file(file);
    const wfa::GaConfig base = finish(gf);
    const wfa::MemoTable table = wfa::build_table_for(a, base);

    std::vector<wfa::GaResult> results(o.repeats);
    wfa::parallel_for(o.repeats, o.jobs, [&](std::size_t r) {
        wfa::GaConfig cfg = base;
        cfg.rng_seed = base.rng_seed + r;
        results[r] = wfa::run_ga(a, table, cfg);
    });

    const wfa::report::Options ropts{o.places, !o.no_timing};
    Json report;
    report["command"] = "maximize";
    report["config"] = wfa::report::config(base);
    report["block_size"] = table.block_size();
    std::vector<const wfa::RunStats*> runs;
    report["runs"] = Json::array();
    for (std::size_t r = 0; r < results.size(); ++r) {
        Json run = wfa::report::run(a, results[r].stats, base.rng_seed + r, ropts);
        run["padded"] = results[r].padded;
        report["runs"].push_back(std::move(run));
        runs.push_back(&results[r].stats);
    }
    report["aggregate"] = wfa::report::aggregate(runs, o.places);
    if (pf.top_n) {
        add_positions(report, a, base.max_length, *pf.top_n, pf.budget, runs);
    }
    emit(o.out, report.dump(2) + "\n");
    write_histograms(o, runs);
    return kOk;
}

int cmd_random(const std::string& file, std::size_t k, const wfa::SearchBudget& budget, std::uint64_t seed,
               std::optional<std::size_t> block_size, const OutputFlags& o) {
    const wfa::Wfa a = wfa::io::read_wfa_file(file);
    if (k < 1) {
        throw UsageError("k must be at least 1");
    }
    if (!budget.max_evaluations && !budget.timeout_seconds) {
        throw UsageError("random search needs --evals or --timeout");
    }
    wfa::GaConfig table_cfg;
    table_cfg.block_size_override = block_size;
    const wfa::MemoTable table = wfa::build_table_for(a, table_cfg);

    std::vector<wfa::SearchResult> results(o.repeats);
    wfa::parallel_for(o.repeats, o.jobs,
                      [&](std::size_t r) { results[r] = wfa::random_search(a, table, k, budget, seed + r); });

    const wfa::report::Options ropts{o.places, !o.no_timing};
    Json report;
    report["command"] = "random";
    report["config"] = {{"k", k},
                        {"max_evaluations", budget.max_evaluations ? Json(*budget.max_evaluations) : Json(nullptr)},
                        {"timeout_seconds", budget.timeout_seconds ? Json(*budget.timeout_seconds) : Json(nullptr)}};
    report["block_size"] = table.block_size();
    std::vector<const wfa::RunStats*> runs;
    report["runs"] = Json::array();
    for (std::size_t r = 0; r < results.size(); ++r) {
        report["runs"].push_back(wfa::report::run(a, results[r].stats, seed + r, ropts));
        runs.push_back(&results[r].stats);
    }
    report["aggregate"] = wfa::report::aggregate(runs, o.places);
    emit(o.out, report.dump(2) + "\n");
    write_histograms(o, runs);
    return kOk;
}

int cmd_exhaustive(const std::string& file, std::size_t k, std::size_t top_n, std::uint64_t budget,
                   const std::vector<std::string>& locate, const std::string& locate_report, int places,
                   const std::string& out) {
    const wfa::Wfa a = wfa::io::read_wfa_file(file);
    if (k < 1) {
        throw UsageError("k must be at least 1");
    }
    const auto table = wfa::exhaustive_search(a, k, top_n, budget);
    Json report;
    report["command"] = "exhaustive";
    report["k"] = k;
    report["table"] = Json::array();
    for (std::size_t i = 0; i < table.size(); ++i) {
        report["table"].push_back({{"position", i + 1},
                                   {"word", wfa::format_word(a, table[i].word)},
                                   {"weight", wfa::report::weight(table[i].weight, places)}});
    }
    std::vector<std::pair<std::string, wfa::Rational>> lookups;
    for (const auto& text : locate) {
        const wfa::Word w = wfa::parse_word(a, text);
        if (w.empty() || w.size() > k) {
            throw wfa::InvalidWord("located word '" + text + "' has length outside 1.." + std::to_string(k));
        }
        lookups.emplace_back(text, wfa::eval_weight(a, w));
    }
    if (!locate_report.empty()) {
        Json ga;
        try {
            ga = Json::parse(wfa::io::read_file(locate_report));
            for (const auto& run : ga.at("runs")) {
                lookups.emplace_back(run.at("best").at("word").get<std::string>(),
                                     wfa::Rational::parse(run.at("best").at("weight").at("rational").get<std::string>()));
            }
        } catch (const nlohmann::json::exception& e) {
            throw wfa::io::ParseError(locate_report + ": not a run report (" + e.what() + ")");
        }
    }
    if (!lookups.empty()) {
        report["located"] = Json::array();
        for (const auto& [word, weight] : lookups) {
            report["located"].push_back({{"word", word},
                                         {"weight", wfa::report::weight(weight, places)},
                                         {"position", wfa::position_in(table, weight)}});
        }
    }

    if (!out.empty()) {
        emit(out, report.dump(2) + "\n");
        return kOk;
    }
    std::printf("%-8s %-24s %s\n", "position", "weight", "word");
    for (std::size_t i = 0; i < table.size(); ++i) {
        const std::string w = table[i].weight.to_string() + " (" + table[i].weight.to_decimal(places) + ")";
        std::printf("%-8zu %-24s %s\n", i + 1, w.c_str(), wfa::format_word(a, table[i].word).c_str());
    }
    for (const auto& [word, weight] : lookups) {
        std::printf("located %s weight %s at position %zu\n", word.c_str(), weight.to_string().c_str(),
                    wfa::position_in(table, weight));
    }
    return kOk;
}

Json witnesses_json(const wfa::Wfa& a, const wfa::DirectionEstimate& d, int places) {
    Json j;
    j["best"] = wfa::report::weight(d.best, places);
    j["witnesses"] = Json::array();
    for (const auto& w : d.witnesses) {
        j["witnesses"].push_back({{"word", wfa::format_word(a, w.word)}, {"error", wfa::report::weight(w.error, places)}});
    }
    j["total_evals"] = d.stats.total_evals;
    return j;
}

int cmd_distance(const std::string& file_a, const std::string& file_b, const GaFlags& gf, bool exact,
                 std::uint64_t budget, std::size_t witnesses, unsigned jobs, int places, const std::string& out) {
    const wfa::Wfa a = wfa::io::read_wfa_file(file_a);
    const wfa::Wfa b = wfa::io::read_wfa_file(file_b);
    Json report;
    report["command"] = "distance";
    if (exact) {
        if (gf.cfg.max_length < 1) {
            throw UsageError("k must be at least 1");
        }
        const auto d = wfa::distance_exact(a, b, gf.cfg.max_length, budget);
        report["mode"] = "exact";
        report["k"] = gf.cfg.max_length;
        report["distance"] = wfa::report::weight(d.value, places);
        report["witness"] = wfa::format_word(a, d.witness);
    } else {
        const wfa::GaConfig cfg = finish(gf);
        const auto d = wfa::distance_estimate(a, b, cfg, witnesses, jobs);
        report["mode"] = "estimate";
        report["config"] = wfa::report::config(cfg);
        report["seed"] = cfg.rng_seed;
        report["estimate"] = wfa::report::weight(d.estimate, places);
        report["a_minus_b"] = witnesses_json(a, d.a_minus_b, places);
        report["b_minus_a"] = witnesses_json(a, d.b_minus_a, places);
    }
    emit(out, report.dump(2) + "\n");
    return kOk;
}

std::string sibling_meta_path(const std::string& out) {
    const auto dot = out.find_last_of('.');
    const auto slash = out.find_last_of('/');
    if (dot != std::string::npos && (slash == std::string::npos || dot > slash + 1)) {
        return out.substr(0, dot) + ".meta.json";
    }
    return out + ".meta.json";
}

int cmd_reduce(const std::string& graph_file, bool two_symbols, bool to_threshold, const std::string& out,
               std::string meta) {
    const wfa::DiGraph g = wfa::io::parse_graph(wfa::io::read_file(graph_file));
    wfa::BerpInstance berp = wfa::hcp_to_berp(g);
    if (two_symbols) {
        if (g.edges.size() < 2) {
            throw wfa::io::ParseError(graph_file + ": two-symbol encoding needs at least two edges");
        }
        berp = wfa::to_two_symbols(berp);
    }
    std::optional<wfa::Wfa> result;
    Json sidecar;
    if (to_threshold) {
        wfa::BtrpInstance btrp = wfa::berp_to_btrp(berp);
        sidecar = {{"k", btrp.length_bound}, {"target", btrp.threshold.to_string()}, {"mode", "threshold"}};
        result.emplace(std::move(btrp.wfa));
    } else {
        sidecar = {{"k", berp.length_bound}, {"target", berp.target.to_string()}, {"mode", "equality"}};
        result.emplace(std::move(berp.wfa));
    }
    if (meta.empty()) {
        meta = sibling_meta_path(out);
    }
    wfa::io::write_file_atomic(out, wfa::io::serialize_wfa(*result));
    wfa::io::write_file_atomic(meta, sidecar.dump(2) + "\n");
    std::cout << sidecar.dump() << "\n";
    return kOk;
}

int cmd_gen(std::size_t states, std::size_t alphabet, std::uint64_t seed, const std::string& profile,
            const std::string& out) {
    if (states < 1 || alphabet < 1) {
        throw UsageError("--states and --alphabet must be at least 1");
    }
    wfa::GenOptions opts;
    opts.profile = profile == "dense" ? wfa::WeightProfile::dense : wfa::WeightProfile::sparse;
    emit(out, wfa::io::serialize_wfa(wfa::gen_random_wfa(states, alphabet, seed, opts)));
    return kOk;
}

int cmd_casestudy(const std::string& out) {
    emit(out, wfa::io::serialize_wfa(wfa::build_paren_spec()));
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weighted automata toolkit: evaluation, weight maximization, baselines and reductions"};
    app.require_subcommand(1);

    // eval
    std::string file, file_b, word_text;
    int places = 4;
    bool use_paths = false;
    auto* eval = app.add_subcommand("eval", "Weight of a word (exact and decimal)");
    eval->add_option("file", file, "Automaton document")->required();
    eval->add_option("word", word_text, "Word; single-character symbols may be written run together")
        ->required()
        ->allow_extra_args(false);
    eval->add_option("--places", places, "Decimal places")->capture_default_str();
    eval->add_flag("--paths", use_paths, "Evaluate by summing over accepting paths");

    // validate
    auto* validate = app.add_subcommand("validate", "Check an automaton document");
    validate->add_option("file", file)->required();

    // maximize
    GaFlags ga_flags;
    OutputFlags out_flags;
    PositionFlags pos_flags;
    auto* maximize = app.add_subcommand("maximize", "Genetic algorithm for the bounded weight maximization problem");
    maximize->add_option("file", file)->required();
    add_ga_flags(maximize, ga_flags);
    add_output_flags(maximize, out_flags, true);
    maximize->add_option("--position", pos_flags.top_n,
                         "Locate each run's best in an exhaustive top-N table over the same k");
    maximize->add_option("--enum-budget", pos_flags.budget, "Enumeration budget for --position")
        ->capture_default_str();

    // random
    std::size_t rs_k = 20;
    std::optional<std::uint64_t> rs_evals;
    std::optional<double> rs_timeout;
    std::uint64_t rs_seed = 0;
    std::optional<std::size_t> rs_block;
    auto* random = app.add_subcommand("random", "Uniform random search baseline");
    random->add_option("file", file)->required();
    random->add_option("--k", rs_k, "Maximum word length")->capture_default_str();
    random->add_option("--evals", rs_evals, "Evaluation budget");
    random->add_option("--timeout", rs_timeout, "Wall-clock budget in seconds");
    random->add_option("--seed", rs_seed)->capture_default_str();
    random->add_option("--block-size", rs_block, "Memo table block size");
    add_output_flags(random, out_flags, true);

    // exhaustive
    std::size_t ex_k = 1;
    std::size_t ex_top = 20;
    std::uint64_t ex_budget = wfa::kDefaultEnumerationBudget;
    std::vector<std::string> ex_locate;
    std::string ex_report;
    auto* exhaustive = app.add_subcommand("exhaustive", "Exact top-n words of length 1..k");
    exhaustive->add_option("file", file)->required();
    exhaustive->add_option("--k", ex_k, "Maximum word length")->required();
    exhaustive->add_option("--top", ex_top, "Table size")->capture_default_str();
    exhaustive->add_option("--budget", ex_budget, "Refuse above this many words")->capture_default_str();
    exhaustive->add_option("--locate", ex_locate, "Report the position of these words' weights");
    exhaustive->add_option("--locate-report", ex_report, "Report the position of every run's best in a run report");
    exhaustive->add_option("--places", places)->capture_default_str();
    exhaustive->add_option("-o,--out", out_flags.out, "Write the table as JSON");

    // distance
    GaFlags dist_flags;
    bool dist_exact = false;
    std::uint64_t dist_budget = wfa::kDefaultEnumerationBudget;
    std::size_t dist_witnesses = 5;
    unsigned dist_jobs = wfa::default_jobs();
    auto* distance = app.add_subcommand("distance", "Worst-case weight difference over words of length 1..k");
    distance->add_option("file_a", file)->required();
    distance->add_option("file_b", file_b)->required();
    add_ga_flags(distance, dist_flags);
    distance->add_flag("--exact", dist_exact, "Exhaustive computation instead of the GA estimate");
    distance->add_option("--budget", dist_budget, "Enumeration budget for --exact")->capture_default_str();
    distance->add_option("--witnesses", dist_witnesses, "Witness words per direction")->capture_default_str();
    distance->add_option("--jobs", dist_jobs, "Run both directions concurrently when > 1")->capture_default_str();
    distance->add_option("--places", places)->capture_default_str();
    distance->add_option("-o,--out", out_flags.out);

    // reduce
    bool two_symbols = false;
    bool to_threshold = false;
    std::string reduce_out, reduce_meta;
    auto* reduce = app.add_subcommand("reduce", "Hamiltonian cycle graph to a reachability instance");
    reduce->add_option("graph", file, "Edge list: vertex count, then 'u v' per line")->required();
    reduce->add_flag("--two-symbols", two_symbols, "Re-encode over the alphabet {a, b}");
    reduce->add_flag("--to-threshold", to_threshold, "Emit the threshold instance (target 1)");
    reduce->add_option("-o,--out", reduce_out, "Automaton document path")->required();
    reduce->add_option("--meta", reduce_meta, "Instance metadata path (default: <out>.meta.json)");

    // gen
    std::size_t gen_states = 10, gen_alphabet = 4;
    std::uint64_t gen_seed = 0;
    std::string gen_profile = "sparse";
    auto* gen = app.add_subcommand("gen", "Seeded random automaton");
    gen->add_option("--states", gen_states)->capture_default_str();
    gen->add_option("--alphabet", gen_alphabet)->capture_default_str();
    gen->add_option("--seed", gen_seed)->capture_default_str();
    gen->add_option("--profile", gen_profile)->check(CLI::IsMember({"sparse", "dense"}))->capture_default_str();
    gen->add_option("-o,--out", out_flags.out);

    // casestudy
    auto* casestudy = app.add_subcommand("casestudy", "The 8-state parenthesis specification automaton");
    casestudy->add_option("-o,--out", out_flags.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*eval) {
            return cmd_eval(file, word_text, places, use_paths);
        }
        if (*validate) {
            return cmd_validate(file);
        }
        if (*maximize) {
            return cmd_maximize(file, ga_flags, out_flags, pos_flags);
        }
        if (*random) {
            return cmd_random(file, rs_k, wfa::SearchBudget{rs_evals, rs_timeout}, rs_seed, rs_block, out_flags);
        }
        if (*exhaustive) {
            return cmd_exhaustive(file, ex_k, ex_top, ex_budget, ex_locate, ex_report, places, out_flags.out);
        }
        if (*distance) {
            return cmd_distance(file, file_b, dist_flags, dist_exact, dist_budget, dist_witnesses, dist_jobs, places,
                                out_flags.out);
        }
        if (*reduce) {
            return cmd_reduce(file, two_symbols, to_threshold, reduce_out, reduce_meta);
        }
        if (*gen) {
            return cmd_gen(gen_states, gen_alphabet, gen_seed, gen_profile, out_flags.out);
        }
        if (*casestudy) {
            return cmd_casestudy(out_flags.out);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    } catch (const wfa::MemoBudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBudget;
    } catch (const wfa::EnumerationBudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBudget;
    } catch (const wfa::InvalidWfa& e) {
        std::cerr << "error: invalid automaton\n";
        for (const auto& v : e.violations()) {
            std::cerr << "  " << v << "\n";
        }
        return kInput;
    } catch (const wfa::io::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    } catch (const std::invalid_argument& e) {
        // InvalidWord, CompositionError, RationalParseError.
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    }
    return kUsage;
}
