// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any fails. Optional argument: path to the wfa-ga binary, which
// enables the command-line half of criterion 9.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <unistd.h>

#include "support.hpp"
#include "wfa/algebra.hpp"
#include "wfa/casestudy.hpp"
#include "wfa/ga.hpp"
#include "wfa/io.hpp"
#include "wfa/memo.hpp"
#include "wfa/parallel.hpp"
#include "wfa/reductions.hpp"
#include "wfa/report.hpp"
#include "wfa/search.hpp"

using namespace wfa;
using wfa::test::all_words;
using wfa::test::random_wfa;

namespace {

// Pinned thresholds.
constexpr int kSemanticsAutomata = 50;
constexpr double kSemanticsSeconds = 60;
constexpr int kMemoCases = 500;
constexpr double kMemoGain = 2.0;
constexpr double kMemoSeconds = 60;
constexpr int kAlgebraTriples = 200;
constexpr std::size_t kParenWords = 4096;
constexpr double kParenSeconds = 10;
constexpr int kRandomDigraphs = 30;
constexpr double kReductionSeconds = 300;
constexpr std::uint64_t kTwoSymbolThresholdWords = std::uint64_t{1} << 22;
constexpr int kOracleAutomata = 60;
constexpr int kQualityInstances = 10;
constexpr std::uint64_t kQualityEvals = 50000;
constexpr int kGaBeatsRandomNeeded = 8;
constexpr int kGaFindsMaxNeeded = 6;
constexpr double kGaFindsMaxSeconds = 10;
constexpr double kBeta = 30;
constexpr std::uint64_t kSelectionDraws = 1000000;
constexpr int kRoundTripDocuments = 100;

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(double x, int places = 2) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(places);
    out << x;
    return out.str();
}

Outcome semantics_equivalence() {
    const auto start = std::chrono::steady_clock::now();
    Rng rng(101);
    std::size_t pairs = 0;
    for (int n = 0; n < kSemanticsAutomata; ++n) {
        const std::size_t states = 1 + uniform_below(rng, 5);
        const std::size_t sigma = 1 + uniform_below(rng, 3);
        const Wfa a = random_wfa(rng, states, sigma);
        for (const auto& w : all_words(sigma, 0, 6)) {
            if (eval_weight(a, w) != eval_weight_paths(a, w)) {
                return {false, "mismatch on automaton " + std::to_string(n)};
            }
            ++pairs;
        }
    }
    const double t = seconds_since(start);
    return {t < kSemanticsSeconds, std::to_string(kSemanticsAutomata) + " automata, " + std::to_string(pairs) +
                                       " words, " + fmt(t) + " s"};
}

Outcome memo_correctness_and_gain() {
    const auto start = std::chrono::steady_clock::now();
    Rng rng(202);
    for (int n = 0; n < kMemoCases; ++n) {
        const std::size_t sigma = 1 + uniform_below(rng, 4);
        const Wfa a = random_wfa(rng, 1 + uniform_below(rng, 5), sigma);
        const MemoTable t = MemoTable::build(a, 1 + uniform_below(rng, 4));
        const Word w = random_word(rng, sigma, 1 + uniform_below(rng, 15));
        if (eval_weight_memo(a, t, w) != eval_weight(a, w)) {
            return {false, "mismatch on case " + std::to_string(n)};
        }
    }
    const Wfa a = gen_random_wfa(10, 4, 202, {WeightProfile::dense});
    const MemoTable t = MemoTable::build(a, 4);
    std::vector<Word> words;
    for (int n = 0; n < 1000; ++n) {
        Word w(20);
        for (auto& s : w) {
            s = static_cast<Symbol>(uniform_below(rng, 4));
        }
        words.push_back(std::move(w));
    }
    instrument::reset_multiplications();
    for (const auto& w : words) {
        (void)eval_weight(a, w);
    }
    const double direct = static_cast<double>(instrument::multiplications());
    instrument::reset_multiplications();
    for (const auto& w : words) {
        (void)eval_weight_memo(a, t, w);
    }
    const double memo = static_cast<double>(instrument::multiplications());
    const double gain = direct / memo;
    const double secs = seconds_since(start);
    return {gain >= kMemoGain && secs < kMemoSeconds, std::to_string(kMemoCases) + " equal, gain " + fmt(gain) +
                                                          "x at |Q|=10 |S|=4 B=4 |w|=20, " + fmt(secs) + " s"};
}

// alpha as a fresh initial entry and on the fresh diagonal.
Wfa scalar_on_diagonal(const Wfa& a, const Rational& c) {
    const std::size_t n = a.n_states();
    WfaParts p;
    p.alphabet = a.alphabet();
    p.n_states = n + 1;
    p.initial = a.initial_weights();
    p.initial.push_back(c);
    p.final = a.final_weights();
    p.final.push_back(1);
    for (Symbol s = 0; s < a.alphabet_size(); ++s) {
        Matrix m(n + 1, n + 1);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t col = 0; col < n; ++col) {
                m(r, col) = a.transition(s)(r, col);
            }
        }
        m(n, n) = c;
        p.transitions.push_back(std::move(m));
    }
    return Wfa(std::move(p));
}

Outcome algebra_identities() {
    Rng rng(303);
    for (int n = 0; n < kAlgebraTriples; ++n) {
        const std::size_t sigma = 1 + uniform_below(rng, 3);
        const Wfa a = random_wfa(rng, 1 + uniform_below(rng, 3), sigma);
        const Wfa b = random_wfa(rng, 1 + uniform_below(rng, 3), sigma);
        const Word w = random_word(rng, sigma, 8);
        const Rational wa = eval_weight(a, w);
        const Rational wb = eval_weight(b, w);
        if (eval_weight(sum(a, b), w) != wa + wb || eval_weight(subtract(a, b), w) != wa - wb ||
            eval_weight(product(a, b), w) != wa * wb || eval_weight(negate(a), w) != -wa) {
            return {false, "identity fails on triple " + std::to_string(n)};
        }
    }
    int diagonal_failures = 0;
    int checks = 0;
    for (int n = 0; n < 50; ++n) {
        const Wfa a = random_wfa(rng, 1 + uniform_below(rng, 3), 2);
        Rational alpha = wfa::test::small_rational(rng);
        if (alpha.is_zero() || alpha == 1 || alpha == -1) {
            alpha = 2;
        }
        const Wfa shifted = add_scalar(a, alpha);
        const Wfa diag = scalar_on_diagonal(a, alpha);
        for (std::size_t len = 1; len <= 3; ++len) {
            for (const auto& w : all_words(2, len, len)) {
                ++checks;
                if (eval_weight(shifted, w) != eval_weight(a, w) + alpha) {
                    return {false, "add_scalar contract fails at |w| = " + std::to_string(len)};
                }
                if (eval_weight(diag, w) != eval_weight(a, w) + alpha) {
                    ++diagonal_failures;
                }
            }
        }
    }
    return {diagonal_failures == checks,
            std::to_string(kAlgebraTriples) + " triples; add_scalar holds on " + std::to_string(checks) +
                " words at |w| in {1,2,3}, diagonal variant fails on " + std::to_string(diagonal_failures)};
}

Outcome paren_conformance() {
    const auto start = std::chrono::steady_clock::now();
    const Wfa ae = build_paren_spec();
    const std::vector<Symbol> sub = {0, 1, 10, 11};
    std::size_t checked = 0;
    for (const auto& idx : all_words(4, 1, 6)) {
        Word w;
        for (Symbol s : idx) {
            w.push_back(sub[s]);
        }
        if (eval_weight(ae, w) != paren_oracle(w)) {
            return {false, "mismatch on " + format_word(ae, w)};
        }
        ++checked;
    }
    const bool displayed = eval_weight(ae, parse_word(ae, "(1)(2)")) == Rational(1, 2) &&
                           eval_weight(ae, parse_word(ae, "((1))(2)")) == Rational(3, 4) &&
                           eval_weight(ae, parse_word(ae, "((1(2)")) == 0 &&
                           eval_weight(ae, parse_word(ae, "(((1)))")) == 0;
    const double t = seconds_since(start);
    return {displayed && checked >= kParenWords && t < kParenSeconds,
            std::to_string(checked) + " words of length 1..6, displayed values " + (displayed ? "ok" : "WRONG") +
                ", " + fmt(t) + " s"};
}

bool berp_yes(const BerpInstance& inst) {
    const auto hit = find_word(inst.wfa, inst.length_bound, [&](const Rational& w) { return w == inst.target; });
    return hit && verify_certificate(inst.wfa, hit->word, inst.length_bound, inst.target, CertificateMode::equality);
}

bool btrp_yes(const BtrpInstance& inst) {
    const auto hit = find_word(inst.wfa, inst.length_bound, [&](const Rational& w) { return w >= inst.threshold; });
    return hit &&
           verify_certificate(inst.wfa, hit->word, inst.length_bound, inst.threshold, CertificateMode::threshold);
}

Outcome reductions_end_to_end() {
    const auto start = std::chrono::steady_clock::now();
    std::vector<DiGraph> graphs;
    for (std::uint64_t mask = 0; mask < (1U << 9); ++mask) {
        graphs.push_back(wfa::test::digraph_from_mask(3, mask));
    }
    Rng rng(505);
    for (int n = 0; n < kRandomDigraphs; ++n) {
        graphs.push_back(wfa::test::random_digraph(rng, 4 + static_cast<std::size_t>(n % 2), 0.45));
    }
    std::size_t yes = 0, two_symbol = 0, two_symbol_threshold = 0;
    for (std::size_t g = 0; g < graphs.size(); ++g) {
        const bool ham = wfa::test::has_hamiltonian_cycle(graphs[g]);
        const BerpInstance inst = hcp_to_berp(graphs[g]);
        if (berp_yes(inst) != ham || btrp_yes(berp_to_btrp(inst)) != ham) {
            return {false, "disagreement on graph " + std::to_string(g)};
        }
        yes += ham;
        if (graphs[g].edges.size() < 2) {
            continue;
        }
        const BerpInstance two = to_two_symbols(inst);
        if (berp_yes(two) != ham) {
            return {false, "two-symbol disagreement on graph " + std::to_string(g)};
        }
        ++two_symbol;
        if (memo_entry_count(2, two.length_bound) <= kTwoSymbolThresholdWords) {
            if (btrp_yes(berp_to_btrp(two)) != ham) {
                return {false, "two-symbol threshold disagreement on graph " + std::to_string(g)};
            }
            ++two_symbol_threshold;
        }
    }
    const double t = seconds_since(start);
    return {t < kReductionSeconds,
            std::to_string(graphs.size()) + " graphs (" + std::to_string(yes) + " Hamiltonian), two-symbol BERP on " +
                std::to_string(two_symbol) + ", two-symbol BTRP on " + std::to_string(two_symbol_threshold) + ", " +
                fmt(t) + " s"};
}

Outcome exhaustive_oracle() {
    Rng rng(606);
    for (int n = 0; n < kOracleAutomata; ++n) {
        const std::size_t sigma = 1 + uniform_below(rng, 3);
        const std::size_t k = 1 + uniform_below(rng, 6);
        const Wfa a = random_wfa(rng, 1 + uniform_below(rng, 4), sigma, n % 2 ? 0.3 : 0.7);
        std::optional<ScoredWord> best;
        for (const auto& w : all_words(sigma, 1, k)) {
            ScoredWord s{w, eval_weight(a, w)};
            if (!best || ranks_before(s, *best)) {
                best = s;
            }
        }
        const auto top = exhaustive_search(a, k, 1);
        if (top.size() != 1 || top.front() != *best) {
            return {false, "top-1 differs on automaton " + std::to_string(n)};
        }
        GaConfig cfg;
        cfg.max_length = k;
        cfg.population_size = 20;
        cfg.max_generations = 20;
        cfg.rng_seed = static_cast<std::uint64_t>(n);
        const GaResult r = run_ga(a, cfg);
        if (r.best.fitness > top.front().weight || position_in(top, r.best.fitness) < 1) {
            return {false, "GA exceeds the exhaustive maximum on automaton " + std::to_string(n)};
        }
    }
    return {true, std::to_string(kOracleAutomata) + " automata with |S| <= 3, k <= 6"};
}

struct QualityRound {
    int ga_beats_random = 0;
    int ga_finds_max = 0;
    std::string detail;
};

QualityRound quality_round(std::uint64_t seed_base) {
    QualityRound out;
    std::ostringstream per;
    for (int n = 0; n < kQualityInstances; ++n) {
        const std::uint64_t seed = seed_base + static_cast<std::uint64_t>(n);
        const Wfa a = gen_random_wfa(8 + static_cast<std::size_t>(n % 5), 4, seed);

        GaConfig cfg;
        cfg.rng_seed = seed;
        cfg.max_evaluations = kQualityEvals;
        cfg.timeout_seconds = 600;
        const MemoTable table = build_table_for(a, cfg);
        const GaResult ga = run_ga(a, table, cfg);
        const SearchResult rs =
            random_search(a, table, cfg.max_length, {ga.stats.total_evals, std::nullopt}, seed + 1000);
        const bool beats = ga.best.fitness >= rs.best.fitness;
        out.ga_beats_random += beats;

        GaConfig timed;
        timed.rng_seed = seed;
        timed.max_length = 10;
        timed.timeout_seconds = kGaFindsMaxSeconds;
        const GaResult ga10 = run_ga(a, timed);
        const auto top = exhaustive_search(a, 10, 1);
        const bool found = ga10.best.fitness == top.front().weight;
        out.ga_finds_max += found;
        per << (beats ? 'B' : '-') << (found ? 'M' : '-') << ' ';
    }
    out.detail = per.str();
    return out;
}

Outcome ga_quality() {
    std::string detail;
    for (std::uint64_t seed_base : {700, 900}) {
        const QualityRound r = quality_round(seed_base);
        const bool pass = r.ga_beats_random >= kGaBeatsRandomNeeded && r.ga_finds_max >= kGaFindsMaxNeeded;
        detail += "seeds " + std::to_string(seed_base) + ": GA >= random " + std::to_string(r.ga_beats_random) +
                  "/10, exact k=10 max " + std::to_string(r.ga_finds_max) + "/10 [" + r.detail + "]";
        if (pass) {
            return {true, detail};
        }
        detail += "; retry ";
    }
    return {false, detail};
}

Outcome selection_law() {
    Rng rng(808);
    const std::size_t n = 20;
    std::uint64_t bottom = 0, top = 0;
    for (std::uint64_t d = 0; d < kSelectionDraws; ++d) {
        const std::size_t i = select_index(n, kBeta, rng);
        bottom += i == 0;
        top += i == n - 1;
    }
    const double ratio = static_cast<double>(top) / static_cast<double>(bottom);
    const bool bounds = rank_index(n, kBeta, 0.0) == 0 && rank_index(n, kBeta, std::nextafter(1.0, 0.0)) == n - 1;
    return {bounds && ratio >= 0.8 * kBeta && ratio <= 1.2 * kBeta,
            "top/bottom ratio " + fmt(ratio) + " (beta " + fmt(kBeta, 0) + "), boundaries " + (bounds ? "ok" : "WRONG")};
}

std::string repeated_report(const Wfa& a, const GaConfig& base, std::size_t repeats, unsigned jobs) {
    const MemoTable table = build_table_for(a, base);
    std::vector<GaResult> results(repeats);
    parallel_for(repeats, jobs, [&](std::size_t r) {
        GaConfig cfg = base;
        cfg.rng_seed = base.rng_seed + r;
        results[r] = run_ga(a, table, cfg);
    });
    report::Json out;
    out["runs"] = report::Json::array();
    std::vector<const RunStats*> runs;
    for (std::size_t r = 0; r < repeats; ++r) {
        out["runs"].push_back(report::run(a, results[r].stats, base.rng_seed + r, {4, false}));
        runs.push_back(&results[r].stats);
    }
    out["aggregate"] = report::aggregate(runs, 4);
    return out.dump(2);
}

int run_command(const std::string& cmd) {
    return std::system((cmd + " > /dev/null 2>&1").c_str());
}

std::string cli_determinism(const std::string& binary) {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / ("wfa_accept_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const fs::path a = dir / "a.json";
    const fs::path b = dir / "b.json";
    io::write_file_atomic(a, io::serialize_wfa(gen_random_wfa(6, 3, 11)));
    io::write_file_atomic(b, io::serialize_wfa(gen_random_wfa(5, 3, 12)));
    const std::string bin = "'" + binary + "' ";
    const std::vector<std::pair<std::string, std::string>> commands = {
        {"maximize", "maximize '" + a.string() + "' --k 8 --pop 30 --gens 15 --seed 7 --repeats 3 --no-timing"},
        {"random", "random '" + a.string() + "' --k 8 --evals 2000 --seed 7 --repeats 3 --no-timing"},
        {"distance", "distance '" + a.string() + "' '" + b.string() + "' --k 6 --pop 20 --gens 10 --seed 3"},
        {"exhaustive", "exhaustive '" + a.string() + "' --k 5 --top 10"},
    };
    std::string failed;
    for (const auto& [name, args] : commands) {
        std::vector<std::string> outputs;
        for (const std::string jobs : {"1", "1", "4"}) {
            const fs::path out = dir / (name + "_" + std::to_string(outputs.size()) + ".json");
            const bool takes_jobs = name != "exhaustive";
            const int rc = run_command(bin + args + (takes_jobs ? " --jobs " + jobs : "") + " -o '" + out.string() + "'");
            outputs.push_back(rc == 0 ? io::read_file(out) : "exit " + std::to_string(rc));
        }
        if (outputs[0].rfind("exit", 0) == 0 || outputs[0] != outputs[1] || outputs[0] != outputs[2]) {
            failed += " " + name;
        }
    }
    fs::remove_all(dir);
    return failed;
}

Outcome determinism(const std::string& binary) {
    const Wfa a = gen_random_wfa(8, 4, 909);
    GaConfig cfg;
    cfg.max_length = 12;
    cfg.population_size = 40;
    cfg.max_generations = 30;
    cfg.rng_seed = 5;
    const std::string first = repeated_report(a, cfg, 4, 1);
    const bool library_ok = first == repeated_report(a, cfg, 4, 1) && first == repeated_report(a, cfg, 4, 4);
    GaConfig capped = cfg;
    capped.max_generations.reset();
    capped.max_evaluations = 1500;
    const bool capped_ok = repeated_report(a, capped, 4, 1) == repeated_report(a, capped, 4, 4);
    std::string detail = std::string("library repeats 1 vs 4 jobs ") + (library_ok && capped_ok ? "identical" : "DIFFER");
    bool pass = library_ok && capped_ok;
    if (!binary.empty()) {
        const std::string failed = cli_determinism(binary);
        pass = pass && failed.empty();
        detail += failed.empty() ? "; cli maximize/random/distance/exhaustive identical" : "; cli differs:" + failed;
    } else {
        detail += "; cli not checked (no binary given)";
    }
    return {pass, detail};
}

Outcome format_round_trip() {
    std::vector<Wfa> docs;
    for (int n = 0; n < kRoundTripDocuments; ++n) {
        const auto seed = static_cast<std::uint64_t>(n);
        docs.push_back(gen_random_wfa(1 + n % 12, 1 + n % 6, seed,
                                      {n % 2 ? WeightProfile::dense : WeightProfile::sparse}));
    }
    docs.push_back(build_paren_spec());
    for (std::size_t n = 0; n < docs.size(); ++n) {
        const std::string text = io::serialize_wfa(docs[n]);
        const Wfa back = io::parse_wfa(text);
        const WfaParts& x = docs[n].parts();
        const WfaParts& y = back.parts();
        if (x.alphabet != y.alphabet || x.initial != y.initial || x.final != y.final ||
            x.transitions != y.transitions || io::serialize_wfa(back) != text) {
            return {false, "document " + std::to_string(n) + " changed"};
        }
    }
    return {true, std::to_string(docs.size()) + " documents"};
}

} // namespace

int main(int argc, char** argv) {
    const std::string binary = argc > 1 ? argv[1] : "";
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"semantics equivalence", semantics_equivalence},
        {"memoization correctness and gain", memo_correctness_and_gain},
        {"algebra identities", algebra_identities},
        {"parenthesis automaton conformance", paren_conformance},
        {"reductions end to end", reductions_end_to_end},
        {"exhaustive oracle", exhaustive_oracle},
        {"GA quality", ga_quality},
        {"selection law", selection_law},
        {"determinism", [&] { return determinism(binary); }},
        {"format round trip", format_round_trip},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  " << i + 1 << ". " << criteria[i].first << ": " << o.detail
                  << std::endl;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
    return failures == 0 ? 0 : 1;
}
