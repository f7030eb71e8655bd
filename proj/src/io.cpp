#include "wfa/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

namespace wfa::io {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw ParseError(where + ": " + what); }

Rational parse_cell(const json& j, const std::string& where) {
    if (!j.is_string()) {
        fail(where, "expected a rational string, got " + j.dump());
    }
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const RationalParseError& e) {
        fail(where, e.what());
    }
}

Vector parse_vector(const json& doc, const std::string& key) {
    if (!doc.contains(key)) {
        fail(key, "missing");
    }
    const json& arr = doc.at(key);
    if (!arr.is_array()) {
        fail(key, "expected an array");
    }
    Vector out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        out.push_back(parse_cell(arr[i], key + "[" + std::to_string(i) + "]"));
    }
    return out;
}

Matrix parse_matrix(const json& arr, const std::string& where) {
    if (!arr.is_array()) {
        fail(where, "expected an array of rows");
    }
    const std::size_t rows = arr.size();
    std::size_t cols = 0;
    for (std::size_t r = 0; r < rows; ++r) {
        const std::string row_where = where + "[" + std::to_string(r) + "]";
        if (!arr[r].is_array()) {
            fail(row_where, "expected a row array");
        }
        if (r == 0) {
            cols = arr[r].size();
        } else if (arr[r].size() != cols) {
            fail(row_where, "row has " + std::to_string(arr[r].size()) + " entries, expected " +
                                std::to_string(cols));
        }
    }
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            m(r, c) = parse_cell(arr[r][c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
        }
    }
    return m;
}

std::string quote(const std::string& s) { return json(s).dump(); }

void append_list(std::string& out, const Vector& v) {
    out += "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? ", " : "") + quote(v[i].to_string());
    }
    out += "]";
}

std::size_t parse_index(std::string_view token, std::size_t line_no) {
    std::size_t value = 0;
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc() || ptr != end) {
        fail("line " + std::to_string(line_no), "expected a non-negative integer, got '" + std::string(token) + "'");
    }
    return value;
}

} // namespace

WfaParts parse_wfa_parts(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail("byte " + std::to_string(e.byte), "invalid JSON");
    }
    if (!doc.is_object()) {
        fail("document", "expected a JSON object");
    }
    if (!doc.contains("format_version") || !doc["format_version"].is_string()) {
        fail("format_version", "missing or not a string");
    }
    if (doc["format_version"].get<std::string>() != kFormatVersion) {
        fail("format_version", "unsupported version " + doc["format_version"].dump());
    }

    WfaParts p;
    if (!doc.contains("alphabet") || !doc["alphabet"].is_array()) {
        fail("alphabet", "missing or not an array");
    }
    for (std::size_t i = 0; i < doc["alphabet"].size(); ++i) {
        const json& s = doc["alphabet"][i];
        if (!s.is_string()) {
            fail("alphabet[" + std::to_string(i) + "]", "expected a string");
        }
        p.alphabet.push_back(s.get<std::string>());
    }
    p.initial = parse_vector(doc, "initial");
    p.final = parse_vector(doc, "final");
    p.n_states = p.initial.size();

    if (!doc.contains("transitions") || !doc["transitions"].is_object()) {
        fail("transitions", "missing or not an object");
    }
    const json& tr = doc["transitions"];
    for (const auto& [name, _] : tr.items()) {
        if (std::find(p.alphabet.begin(), p.alphabet.end(), name) == p.alphabet.end()) {
            fail("transitions." + name, "symbol not in the alphabet");
        }
    }
    for (const auto& name : p.alphabet) {
        if (!tr.contains(name)) {
            fail("transitions", "missing matrix for symbol '" + name + "'");
        }
        p.transitions.push_back(parse_matrix(tr[name], "transitions." + name));
    }
    return p;
}

Wfa parse_wfa(std::string_view text) { return Wfa(parse_wfa_parts(text)); }

std::string serialize_wfa(const Wfa& wfa) {
    std::string out = "{\n  \"format_version\": " + quote(std::string(kFormatVersion)) + ",\n  \"alphabet\": [";
    for (std::size_t i = 0; i < wfa.alphabet_size(); ++i) {
        out += (i ? ", " : "") + quote(wfa.alphabet()[i]);
    }
    out += "],\n  \"initial\": ";
    append_list(out, wfa.initial_weights());
    out += ",\n  \"final\": ";
    append_list(out, wfa.final_weights());
    out += ",\n  \"transitions\": {";
    const std::size_t n = wfa.n_states();
    for (Symbol s = 0; s < wfa.alphabet_size(); ++s) {
        out += (s ? ",\n    " : "\n    ") + quote(wfa.alphabet()[s]) + ": [";
        const Matrix& m = wfa.transition(s);
        for (std::size_t r = 0; r < n; ++r) {
            out += r ? ",\n      [" : "\n      [";
            for (std::size_t c = 0; c < n; ++c) {
                out += (c ? ", " : "") + quote(m(r, c).to_string());
            }
            out += "]";
        }
        out += "\n    ]";
    }
    out += "\n  }\n}\n";
    return out;
}

DiGraph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    bool have_count = false;
    DiGraph g;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        for (std::string t; fields >> t;) {
            tokens.push_back(t);
        }
        if (tokens.empty()) {
            continue;
        }
        const std::string where = "line " + std::to_string(line_no);
        if (!have_count) {
            if (tokens.size() != 1) {
                fail(where, "expected the vertex count alone");
            }
            g.n_vertices = parse_index(tokens[0], line_no);
            if (g.n_vertices < 1) {
                fail(where, "graph needs at least one vertex");
            }
            have_count = true;
            continue;
        }
        if (tokens.size() != 2) {
            fail(where, "expected 'u v'");
        }
        const std::size_t u = parse_index(tokens[0], line_no);
        const std::size_t v = parse_index(tokens[1], line_no);
        if (u >= g.n_vertices || v >= g.n_vertices) {
            fail(where, "vertex out of range 0.." + std::to_string(g.n_vertices - 1));
        }
        if (!g.edges.emplace(u, v).second) {
            fail(where, "duplicate edge " + tokens[0] + " " + tokens[1]);
        }
    }
    if (!have_count) {
        fail("line 1", "missing vertex count");
    }
    return g;
}

std::string serialize_graph(const DiGraph& g) {
    std::string out = std::to_string(g.n_vertices) + "\n";
    for (const auto& [u, v] : g.edges) {
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    }
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError(path.string() + ": cannot open");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error(tmp.string() + ": cannot open for writing");
        }
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            throw std::runtime_error(tmp.string() + ": write failed");
        }
    }
    std::filesystem::rename(tmp, path);
}

Wfa read_wfa_file(const std::filesystem::path& path) {
    const std::string text = read_file(path);
    try {
        return parse_wfa(text);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

} // namespace wfa::io
