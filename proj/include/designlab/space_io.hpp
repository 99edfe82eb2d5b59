#pragma once

// Space specification strings and the plain-text space file format.
//
//   scheme <N> <m>          graph <N>
//   rel <u> <v> <c>         edge <u> <v>
//
// Vertices are 0-indexed; scheme files list every unordered pair once with a
// class in 1..m. Blank lines and lines starting with '#' are ignored.

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "designlab/errors.hpp"
#include "designlab/space.hpp"

namespace designlab {

namespace detail {

inline long parse_integer(std::string_view token, const std::string& context) {
    long value = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc() || ptr != end)
        throw Error(ErrorKind::Parse, context + ": expected an integer, got '" + std::string(token) + "'");
    return value;
}

inline std::vector<std::string> split_words(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> words;
    for (std::string w; in >> w;) words.push_back(w);
    return words;
}

inline bool skip_line(const std::vector<std::string>& words) { return words.empty() || words[0].starts_with('#'); }

inline std::map<std::string, long> parse_params(std::string_view body, const std::string& spec) {
    std::map<std::string, long> out;
    std::size_t pos = 0;
    while (pos <= body.size()) {
        const auto comma = body.find(',', pos);
        const auto item = body.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) throw Error(ErrorKind::Parse, "bad parameter '" + std::string(item) + "' in " + spec);
        out[std::string(item.substr(0, eq))] = parse_integer(item.substr(eq + 1), spec);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

inline long require_param(const std::map<std::string, long>& p, const std::string& key, const std::string& spec) {
    auto it = p.find(key);
    if (it == p.end()) throw Error(ErrorKind::Parse, "missing parameter '" + key + "' in " + spec);
    return it->second;
}

}  // namespace detail

/// Parses a space description. Schemes are validated; axiom violations throw
/// ErrorKind::SchemeAxiom with the witness in the message.
inline Space read_space(std::istream& in, std::size_t laplacian_class = 1, unsigned threads = 1) {
    std::string line;
    std::size_t line_no = 0;
    std::vector<std::string> header;
    while (std::getline(in, line)) {
        ++line_no;
        header = detail::split_words(line);
        if (!detail::skip_line(header)) break;
        header.clear();
    }
    if (header.empty()) throw Error(ErrorKind::Parse, "empty space file");
    const auto where = [&] { return "line " + std::to_string(line_no); };

    if (header[0] == "graph") {
        if (header.size() != 2) throw Error(ErrorKind::Parse, where() + ": expected 'graph <N>'");
        const long n = detail::parse_integer(header[1], where());
        if (n < 1) throw Error(ErrorKind::Parse, where() + ": vertex count must be positive");
        if (static_cast<std::size_t>(n) > kMaxVertices)
            throw Error(ErrorKind::SizeCap, "graph has " + std::to_string(n) + " vertices; cap is " +
                                                std::to_string(kMaxVertices));
        const auto size = static_cast<std::size_t>(n);
        std::vector<ClassIndex> cls(size * size, 2);
        for (std::size_t x = 0; x < size; ++x) cls[x * size + x] = 0;
        while (std::getline(in, line)) {
            ++line_no;
            const auto w = detail::split_words(line);
            if (detail::skip_line(w)) continue;
            if (w.size() != 3 || w[0] != "edge") throw Error(ErrorKind::Parse, where() + ": expected 'edge <u> <v>'");
            const long u = detail::parse_integer(w[1], where());
            const long v = detail::parse_integer(w[2], where());
            if (u < 0 || v < 0 || u >= n || v >= n) throw Error(ErrorKind::Parse, where() + ": vertex out of range");
            if (u == v) throw Error(ErrorKind::Parse, where() + ": self-loop");
            cls[static_cast<std::size_t>(u) * size + static_cast<std::size_t>(v)] = 1;
            cls[static_cast<std::size_t>(v) * size + static_cast<std::size_t>(u)] = 1;
        }
        return Space(size, 2, std::move(cls), SpaceKind::Graph, {}, laplacian_class);
    }

    if (header[0] != "scheme" || header.size() != 3)
        throw Error(ErrorKind::Parse, where() + ": expected 'scheme <N> <m>' or 'graph <N>'");
    const long n = detail::parse_integer(header[1], where());
    const long m = detail::parse_integer(header[2], where());
    if (n < 1 || m < 1 || m > 65535) throw Error(ErrorKind::Parse, where() + ": bad scheme dimensions");
    if (static_cast<std::size_t>(n) > kMaxVertices)
        throw Error(ErrorKind::SizeCap, "scheme has " + std::to_string(n) + " vertices; cap is " +
                                            std::to_string(kMaxVertices));
    const auto size = static_cast<std::size_t>(n);
    constexpr ClassIndex unset = 0xFFFF;
    std::vector<ClassIndex> cls(size * size, unset);
    for (std::size_t x = 0; x < size; ++x) cls[x * size + x] = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto w = detail::split_words(line);
        if (detail::skip_line(w)) continue;
        if (w.size() != 4 || w[0] != "rel") throw Error(ErrorKind::Parse, where() + ": expected 'rel <u> <v> <c>'");
        const long u = detail::parse_integer(w[1], where());
        const long v = detail::parse_integer(w[2], where());
        const long c = detail::parse_integer(w[3], where());
        if (u < 0 || v < 0 || u >= n || v >= n) throw Error(ErrorKind::Parse, where() + ": vertex out of range");
        if (u == v) throw Error(ErrorKind::Parse, where() + ": diagonal pairs are implicitly class 0");
        if (c < 1 || c > m) throw Error(ErrorKind::Parse, where() + ": class out of range 1.." + std::to_string(m));
        const auto a = static_cast<std::size_t>(u) * size + static_cast<std::size_t>(v);
        const auto b = static_cast<std::size_t>(v) * size + static_cast<std::size_t>(u);
        if (cls[a] != unset && cls[a] != c)
            throw Error(ErrorKind::Parse, where() + ": conflicting class for pair (" + w[1] + "," + w[2] + ")");
        cls[a] = cls[b] = static_cast<ClassIndex>(c);
    }
    for (std::size_t x = 0; x < size; ++x)
        for (std::size_t y = x + 1; y < size; ++y)
            if (cls[x * size + y] == unset)
                throw Error(ErrorKind::Parse,
                            "missing pair classification for (" + std::to_string(x) + "," + std::to_string(y) + ")");

    const auto report = validate_classification(ClassTableView(size, static_cast<std::size_t>(m), cls), threads);
    if (!report.valid) {
        const auto& v = report.violations.front();
        throw Error(ErrorKind::SchemeAxiom, "scheme axiom violated (" + v.axiom + "): " + v.witness);
    }
    Space s(size, static_cast<std::size_t>(m), std::move(cls), SpaceKind::Scheme, {}, laplacian_class);
    return s.with_intersection_numbers(*report.intersection_numbers);
}

inline Space load_space(const std::string& path, std::size_t laplacian_class = 1, unsigned threads = 1) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open space file '" + path + "'");
    return read_space(in, laplacian_class, threads);
}

/// Builds a space from `hamming:n=<n>,q=<q>`, `johnson:n=<n>,w=<w>`,
/// `cycle:n=<N>` or `file:<path>`.
inline Space make_space(const std::string& spec, std::size_t laplacian_class = 1, unsigned threads = 1) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw Error(ErrorKind::Parse, "space spec '" + spec + "' has no family prefix");
    const std::string family = spec.substr(0, colon);
    const std::string_view body = std::string_view(spec).substr(colon + 1);
    if (family == "file") return load_space(std::string(body), laplacian_class, threads);
    const auto params = detail::parse_params(body, spec);
    const auto expect_keys = [&](std::initializer_list<const char*> keys) {
        if (params.size() != keys.size()) throw Error(ErrorKind::Parse, "unexpected parameters in " + spec);
        for (const char* k : keys) detail::require_param(params, k, spec);
    };
    const auto as_int = [&](const char* key) -> int {
        const long v = detail::require_param(params, key, spec);
        if (v < -1000000 || v > 1000000) throw Error(ErrorKind::InvalidArgument, "parameter out of range in " + spec);
        return static_cast<int>(v);
    };
    if (family == "hamming") {
        expect_keys({"n", "q"});
        return hamming_space(as_int("n"), as_int("q"), laplacian_class);
    }
    if (family == "johnson") {
        expect_keys({"n", "w"});
        return johnson_space(as_int("n"), as_int("w"), laplacian_class);
    }
    if (family == "cycle") {
        expect_keys({"n"});
        return cycle_space(as_int("n"), laplacian_class);
    }
    throw Error(ErrorKind::Parse, "unknown space family '" + family + "'");
}

/// Writes the space in the scheme file format (graph format for graphs).
inline void write_space(std::ostream& out, const Space& s) {
    const std::size_t n = s.vertex_count();
    if (s.kind() == SpaceKind::Graph) {
        out << "graph " << n << '\n';
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = x + 1; y < n; ++y)
                if (s.classify(x, y) == 1) out << "edge " << x << ' ' << y << '\n';
        return;
    }
    out << "scheme " << n << ' ' << s.class_count() << '\n';
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y) out << "rel " << x << ' ' << y << ' ' << s.classify(x, y) << '\n';
}

}  // namespace designlab
