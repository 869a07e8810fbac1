#include "bmssp/dimacs.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "bmssp/error.hpp"
#include "bmssp/sssp_state.hpp"

namespace bmssp {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

template <class T>
T parse_number(std::string_view field, std::size_t line, const char* what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    parse_fail(line, std::string("bad ") + what + " '" + std::string(field) + "'");
  }
  return value;
}

double parse_weight(std::string_view field, std::size_t line) {
  // from_chars accepts "inf" and "nan"; weights must be finite decimals.
  for (char c : field) {
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '.' && c != '-' &&
        c != '+' && c != 'e' && c != 'E') {
      parse_fail(line, "bad weight '" + std::string(field) + "'");
    }
  }
  if (!field.empty() && field[0] == '+') field.remove_prefix(1);
  return parse_number<double>(field, line, "weight");
}

}  // namespace

Graph parse_dimacs(std::string_view text, bool integer_weights) {
  std::size_t n = 0;
  std::size_t m = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto f = split_fields(line);
    if (f.empty() || f[0] == "c") continue;
    if (f[0] == "p") {
      if (have_header) parse_fail(line_no, "second problem line");
      if (f.size() != 4 || f[1] != "sp") parse_fail(line_no, "expected 'p sp <n> <m>'");
      n = parse_number<std::size_t>(f[2], line_no, "vertex count");
      m = parse_number<std::size_t>(f[3], line_no, "arc count");
      if (n >= kNoVertex) parse_fail(line_no, "vertex count too large");
      have_header = true;
      edges.reserve(std::min<std::size_t>(m, 1u << 26));
    } else if (f[0] == "a") {
      if (!have_header) parse_fail(line_no, "arc before problem line");
      if (f.size() != 4) parse_fail(line_no, "expected 'a <u> <v> <w>'");
      const auto u = parse_number<std::size_t>(f[1], line_no, "vertex id");
      const auto v = parse_number<std::size_t>(f[2], line_no, "vertex id");
      if (u < 1 || u > n || v < 1 || v > n) parse_fail(line_no, "vertex id out of range");
      const double w = parse_weight(f[3], line_no);
      if (!(w >= 0) || !std::isfinite(w)) parse_fail(line_no, "weight must be finite and non-negative");
      if (integer_weights && w != std::floor(w)) parse_fail(line_no, "fractional weight in integer mode");
      edges.push_back({static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1), w});
    } else {
      parse_fail(line_no, "unknown line type '" + std::string(f[0]) + "'");
    }
  }
  if (!have_header) throw Error(ErrorCode::ParseError, "missing problem line");
  if (edges.size() != m) {
    throw Error(ErrorCode::CountMismatch, "header declares " + std::to_string(m) +
                                              " arcs, found " + std::to_string(edges.size()));
  }
  return Graph(n, std::move(edges));
}

std::string format_distance(double d) {
  if (d == kInfinity) return "inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, d);
  return std::string(buf, res.ptr);
}

std::string write_dimacs(const Graph& g) {
  std::string out = "p sp " + std::to_string(g.vertex_count()) + " " +
                    std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += "a ";
    out += std::to_string(e.source + 1);
    out += ' ';
    out += std::to_string(e.target + 1);
    out += ' ';
    out += format_distance(e.weight);
    out += '\n';
  }
  return out;
}

std::string write_distances(const std::vector<double>& distances) {
  std::string out;
  for (std::size_t v = 0; v < distances.size(); ++v) {
    out += std::to_string(v + 1);
    out += ' ';
    out += format_distance(distances[v]);
    out += '\n';
  }
  return out;
}

std::vector<double> read_distances(std::string_view text) {
  std::vector<double> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const auto f = split_fields(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (f.empty()) continue;
    if (f.size() != 2) parse_fail(line_no, "expected '<id> <distance>'");
    const auto id = parse_number<std::size_t>(f[0], line_no, "vertex id");
    if (id != out.size() + 1) parse_fail(line_no, "expected vertex id " + std::to_string(out.size() + 1));
    if (f[1] == "inf") {
      out.push_back(kInfinity);
    } else {
      out.push_back(parse_weight(f[1], line_no));
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path);
}

}  // namespace bmssp
