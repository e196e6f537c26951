#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "kgh/errors.hpp"
#include "kgh/hypergraph.hpp"
#include "kgh/kneser.hpp"

namespace kgh::io {

using nlohmann::json;

struct ParsedHypergraph {
    Hypergraph graph;
    /// Edge lines repeating an earlier edge; they are dropped.
    std::size_t duplicate_edges = 0;
};

namespace detail {

inline std::vector<std::string> split_words(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string w; in >> w;)
        out.push_back(w);
    return out;
}

inline long long parse_int(const std::string& word, int line_no) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(word, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != word.size() || word.empty())
        throw ParseError("line " + std::to_string(line_no) + ": expected an integer, got '" + word + "'");
    return v;
}

} // namespace detail

/// Reads the ".hg" text format:
///   H <n> <m>
///   e v1 v2 ... vk      (m lines, 1-based, strictly increasing)
/// Lines starting with '#' and blank lines are ignored.
inline ParsedHypergraph read_hg(std::istream& in) {
    int line_no = 0;
    bool have_header = false;
    long long n = 0, m = 0;
    std::vector<VertexSet> edges;
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        auto words = detail::split_words(line);
        if (words.empty() || words[0][0] == '#')
            continue;
        const std::string where = "line " + std::to_string(line_no) + ": ";
        if (!have_header) {
            if (words[0] != "H" || words.size() != 3)
                throw ParseError(where + "expected header 'H <n> <m>'");
            n = detail::parse_int(words[1], line_no);
            m = detail::parse_int(words[2], line_no);
            if (n < 0 || n > kMaxVertices)
                throw ParseError(where + "vertex count must lie in 0..63");
            if (m < 0)
                throw ParseError(where + "edge count must be nonnegative");
            have_header = true;
            continue;
        }
        if (words[0] != "e")
            throw ParseError(where + "expected an edge line 'e v1 v2 ...'");
        if (words.size() < 2)
            throw ParseError(where + "edges must be nonempty");
        VertexSet e;
        long long prev = 0;
        for (std::size_t i = 1; i < words.size(); ++i) {
            const long long v = detail::parse_int(words[i], line_no);
            if (v < 1 || v > n)
                throw ParseError(where + "vertex " + words[i] + " outside 1.." + std::to_string(n));
            if (v <= prev)
                throw ParseError(where + "vertices must be strictly increasing");
            prev = v;
            e.insert(static_cast<int>(v));
        }
        edges.push_back(e);
    }
    if (!have_header)
        throw ParseError("missing header 'H <n> <m>'");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError("header declares " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));
    Hypergraph h(static_cast<int>(n), std::move(edges));
    const std::size_t dups = h.duplicates_dropped();
    return {std::move(h), dups};
}

inline ParsedHypergraph read_hg_string(const std::string& text) {
    std::istringstream in(text);
    return read_hg(in);
}

inline void write_hg(std::ostream& out, const Hypergraph& h) {
    out << "H " << h.n() << ' ' << h.edge_count() << '\n';
    for (VertexSet e : h.edges()) {
        out << 'e';
        for (int v : e)
            out << ' ' << v;
        out << '\n';
    }
}

inline std::string to_hg_string(const Hypergraph& h) {
    std::ostringstream out;
    write_hg(out, h);
    return out.str();
}

inline json edges_json(const std::vector<VertexSet>& sets) {
    json arr = json::array();
    for (VertexSet e : sets)
        arr.push_back(e.to_vector());
    return arr;
}

inline json to_json(const Hypergraph& h) { return {{"n", h.n()}, {"edges", edges_json(h.edges())}}; }

/// Accepts the {n, edges} mirror of the text format.
inline ParsedHypergraph from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError("hypergraph JSON needs fields 'n' and 'edges'");
    if (!j["n"].is_number_integer() || !j["edges"].is_array())
        throw ParseError("hypergraph JSON: 'n' must be an integer and 'edges' an array");
    const long long n = j["n"].get<long long>();
    if (n < 0 || n > kMaxVertices)
        throw ParseError("vertex count must lie in 0..63");
    std::vector<VertexSet> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.empty())
            throw ParseError("each edge must be a nonempty array");
        VertexSet set;
        for (const auto& v : e) {
            if (!v.is_number_integer())
                throw ParseError("edge entries must be integers");
            const long long id = v.get<long long>();
            if (id < 1 || id > n)
                throw ParseError("vertex " + std::to_string(id) + " outside 1.." + std::to_string(n));
            if (set.contains(static_cast<int>(id)))
                throw ParseError("edge repeats vertex " + std::to_string(id));
            set.insert(static_cast<int>(id));
        }
        edges.push_back(set);
    }
    Hypergraph h(static_cast<int>(n), std::move(edges));
    const std::size_t dups = h.duplicates_dropped();
    return {std::move(h), dups};
}

/// Picks the format from the first non-blank character: '{' means JSON.
inline ParsedHypergraph read_any(std::istream& in) {
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::parse_error& e) {
            throw ParseError(std::string("invalid JSON: ") + e.what());
        }
        return from_json(j);
    }
    return read_hg_string(text);
}

/// Kneser output: header `K <vertex_count> <edge_count> r=<r>`, a comment with s,
/// then one line per edge with 1-based vertex indices (repeats allowed).
inline void write_kneser(std::ostream& out, const MultiHypergraph& kg) {
    out << "K " << kg.vertex_count() << ' ' << kg.edge_count() << " r=" << kg.r() << '\n';
    out << "# s=";
    const auto& s = kg.s().entries();
    for (std::size_t i = 0; i < s.size(); ++i)
        out << (i ? "," : "") << s[i];
    out << '\n';
    for (const auto& e : kg.edges()) {
        out << 'e';
        for (int i : e)
            out << ' ' << i + 1;
        out << '\n';
    }
}

inline std::string to_kneser_string(const MultiHypergraph& kg) {
    std::ostringstream out;
    write_kneser(out, kg);
    return out.str();
}

/// Kneser vertex index (1-based) to its ground edge.
inline json kneser_map(const MultiHypergraph& kg) {
    json arr = json::array();
    for (int i = 0; i < kg.vertex_count(); ++i)
        arr.push_back({{"vertex", i + 1}, {"ground_edge", kg.ground_edge(i).to_vector()}});
    return arr;
}

/// FNV-1a, 64 bit.
inline std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char ch : data) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, v >>= 4)
        s[static_cast<std::size_t>(i)] = digits[v & 0xF];
    return s;
}

/// Hash of the canonical text form, so formatting differences in the input do not matter.
inline std::string input_hash(const Hypergraph& h) { return "fnv1a:" + hex64(fnv1a(to_hg_string(h))); }

} // namespace kgh::io
