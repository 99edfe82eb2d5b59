#pragma once

// Text formats for designs, vertex subsets and isometry actions.
//
//   design file:    <vertex-id> [weight]      one point per line
//   subset file:    <vertex-id>               one vertex per line
//   isometry file:  perm <N>                  then N lines, line i = image of
//                                             vertex i; one block per design
//                                             point, in design order

#include <fstream>
#include <istream>
#include <string>
#include <vector>

#include "designlab/designs.hpp"
#include "designlab/errors.hpp"
#include "designlab/space_io.hpp"

namespace designlab {

inline Design read_design(std::istream& in, std::size_t vertex_count) {
    std::vector<Vertex> points;
    std::vector<std::uint32_t> weights;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto w = detail::split_words(line);
        if (detail::skip_line(w)) continue;
        const std::string where = "design line " + std::to_string(line_no);
        if (w.size() > 2) throw Error(ErrorKind::Parse, where + ": expected '<vertex-id> [weight]'");
        const long v = detail::parse_integer(w[0], where);
        if (v < 0 || static_cast<std::size_t>(v) >= vertex_count)
            throw Error(ErrorKind::Parse, where + ": vertex out of range");
        long weight = 1;
        if (w.size() == 2) weight = detail::parse_integer(w[1], where);
        if (weight < 1 || weight > 0xFFFFFFFFL) throw Error(ErrorKind::Parse, where + ": weight must be a positive integer");
        points.push_back(static_cast<Vertex>(v));
        weights.push_back(static_cast<std::uint32_t>(weight));
    }
    return Design(std::move(points), std::move(weights), vertex_count);
}

inline std::vector<Vertex> read_subset(std::istream& in, std::size_t vertex_count) {
    std::vector<Vertex> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto w = detail::split_words(line);
        if (detail::skip_line(w)) continue;
        const std::string where = "subset line " + std::to_string(line_no);
        if (w.size() != 1) throw Error(ErrorKind::Parse, where + ": expected one vertex id");
        const long v = detail::parse_integer(w[0], where);
        if (v < 0 || static_cast<std::size_t>(v) >= vertex_count)
            throw Error(ErrorKind::Parse, where + ": vertex out of range");
        out.push_back(static_cast<Vertex>(v));
    }
    if (out.empty()) throw Error(ErrorKind::Parse, "subset file is empty");
    return out;
}

/// Reads permutation blocks; validation against a space happens in
/// validate_action.
inline IsometryAction read_isometries(std::istream& in, std::size_t vertex_count) {
    IsometryAction action;
    std::string line;
    std::size_t line_no = 0;
    std::vector<Vertex>* current = nullptr;
    while (std::getline(in, line)) {
        ++line_no;
        const auto w = detail::split_words(line);
        if (detail::skip_line(w)) continue;
        const std::string where = "isometry line " + std::to_string(line_no);
        if (w[0] == "perm") {
            if (current && current->size() != vertex_count)
                throw Error(ErrorKind::Parse, where + ": previous block has " + std::to_string(current->size()) +
                                                  " images, expected " + std::to_string(vertex_count));
            if (w.size() != 2 || detail::parse_integer(w[1], where) != static_cast<long>(vertex_count))
                throw Error(ErrorKind::Parse, where + ": expected 'perm " + std::to_string(vertex_count) + "'");
            action.permutations.emplace_back();
            current = &action.permutations.back();
            continue;
        }
        if (!current) throw Error(ErrorKind::Parse, where + ": image before 'perm' header");
        if (w.size() != 1) throw Error(ErrorKind::Parse, where + ": expected one vertex id");
        const long v = detail::parse_integer(w[0], where);
        if (v < 0 || static_cast<std::size_t>(v) >= vertex_count)
            throw Error(ErrorKind::Parse, where + ": vertex out of range");
        if (current->size() == vertex_count) throw Error(ErrorKind::Parse, where + ": too many images in block");
        current->push_back(static_cast<Vertex>(v));
    }
    if (current && current->size() != vertex_count)
        throw Error(ErrorKind::Parse, "last isometry block has " + std::to_string(current->size()) + " images, expected " +
                                          std::to_string(vertex_count));
    return action;
}

namespace detail {
template <typename Fn>
auto with_file(const std::string& path, const char* what, Fn fn) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, std::string("cannot open ") + what + " file '" + path + "'");
    return fn(in);
}
}  // namespace detail

inline Design load_design(const std::string& path, std::size_t vertex_count) {
    return detail::with_file(path, "design", [&](std::istream& in) { return read_design(in, vertex_count); });
}
inline std::vector<Vertex> load_subset(const std::string& path, std::size_t vertex_count) {
    return detail::with_file(path, "subset", [&](std::istream& in) { return read_subset(in, vertex_count); });
}
inline IsometryAction load_isometries(const std::string& path, std::size_t vertex_count) {
    return detail::with_file(path, "isometry", [&](std::istream& in) { return read_isometries(in, vertex_count); });
}

}  // namespace designlab
