#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "evdeg/graph.hpp"

namespace evdeg {

// Input rejection with the 1-based line it happened on ("line 3: loop edge (2,2)").
class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Plain text edge list. First content line is "n m", followed by exactly m
// lines "u v". '#' starts a comment anywhere on a line; blank lines are
// skipped; tokens may be separated by arbitrary whitespace.
Graph from_edge_list(std::istream& in);
Graph from_edge_list(const std::string& text);

// Canonical serialization: "n m\n" then sorted "u v\n" lines. Re-serializing
// a parsed graph is byte-identical.
std::string to_edge_list(const Graph& g);
void to_edge_list(const Graph& g, std::ostream& out);

// graph6: one line, 6 bits per printable byte (offset 63), upper-triangle
// adjacency bits in column-major order. Sizes below 2^18 are supported
// (the one- and four-byte headers); the eight-byte header is rejected.
Graph from_graph6(const std::string& line);
std::string to_graph6(const Graph& g);

}  // namespace evdeg
