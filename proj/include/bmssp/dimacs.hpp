#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bmssp/graph.hpp"

namespace bmssp {

// DIMACS shortest-path text: `c` comment lines, one `p sp <n> <m>` line, then
// `a <u> <v> <w>` arcs with 1-based ids. With `integer_weights`, fractional
// weights are rejected. Throws Error(ParseError) naming the line, or
// Error(CountMismatch) when the arc count differs from m.
Graph parse_dimacs(std::string_view text, bool integer_weights = false);

std::string write_dimacs(const Graph& g);

// Shortest decimal text that reads back to the same double; `inf` for
// infinity.
std::string format_distance(double d);

// One line per vertex: `<1-based id> <distance|inf>`.
std::string write_distances(const std::vector<double>& distances);

// Inverse of write_distances. Ids must run 1..k in order. Throws
// Error(ParseError).
std::vector<double> read_distances(std::string_view text);

// Throws Error(Io).
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

}  // namespace bmssp
