#pragma once

/// @file casestudy.hpp
/// @brief The parenthesis specification automaton, its reference function,
/// and a seeded generator of random benchmark automata.

#include <cstdint>
#include <string>

#include "wfa/core.hpp"

namespace wfa {

/// Alphabet "0".."9", "(", ")" in that order.
std::vector<std::string> paren_alphabet();

/// 8-state automaton over paren_alphabet(). All digits share one matrix.
/// Its weight equals paren_oracle on every non-empty word; on the empty word
/// it gives -1/2 while the oracle gives 0.
Wfa build_paren_spec();

/// 1 - 2^-d for a balanced word whose deepest pair sits at depth d <= 2,
/// 0 otherwise (unbalanced, deeper than 2, or no parentheses at all).
/// Symbols are indices into paren_alphabet().
Rational paren_oracle(const Word& word);

enum class WeightProfile {
    sparse, // each matrix entry nonzero with probability min(1, 2/|Q|)
    dense,  // every matrix entry drawn
};

struct GenOptions {
    WeightProfile profile = WeightProfile::sparse;
    std::size_t sample_words = 1000; // words used to normalize the output scale
    std::size_t sample_max_length = 20;
};

/// Random automaton with dyadic entries m/256, m uniform in [-256, 256].
/// Each matrix is scaled by a power of two so its largest absolute row sum
/// lies in (1/2, 1]; the final vector is then scaled by a power of two so
/// the largest |W| over a sample of random words lies in (1/2, 1].
/// Deterministic in `seed`.
Wfa gen_random_wfa(std::size_t n_states, std::size_t alphabet_size, std::uint64_t seed, const GenOptions& opts = {});

/// Symbol names for generated automata: "a".."z" while they suffice, then
/// "s0", "s1", ...
std::vector<std::string> generated_alphabet(std::size_t alphabet_size);

} // namespace wfa
