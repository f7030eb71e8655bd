#pragma once

/// @file io.hpp
/// @brief Automaton documents, graph edge lists and atomic file output.
///
/// Automaton document (JSON, rationals always as strings):
///
///     {"format_version": "1",
///      "alphabet": ["a", "b"],
///      "initial": ["1", "0"],
///      "final": ["0", "1/2"],
///      "transitions": {"a": [["0", "1"], ["0", "0"]], "b": [...]}}
///
/// Graph edge list: the vertex count on the first line, then one "u v" pair
/// per line. Blank lines and text after '#' are ignored.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "wfa/core.hpp"
#include "wfa/reductions.hpp"

namespace wfa::io {

/// Malformed input. what() starts with the location of the problem.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::string_view kFormatVersion = "1";

/// Structural parse only; semantic checks are left to wfa::validate so the
/// caller can report every violation.
WfaParts parse_wfa_parts(std::string_view text);

/// parse_wfa_parts followed by construction (throws InvalidWfa).
Wfa parse_wfa(std::string_view text);

/// Canonical document text: fixed key order, canonical rationals, one
/// matrix row per line, trailing newline.
std::string serialize_wfa(const Wfa& wfa);

DiGraph parse_graph(std::string_view text);
std::string serialize_graph(const DiGraph& g);

/// Throws ParseError naming the path when it cannot be read.
std::string read_file(const std::filesystem::path& path);

/// Writes to a temporary sibling and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

Wfa read_wfa_file(const std::filesystem::path& path);

} // namespace wfa::io
