#include "metgraph/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <regex>
#include <set>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "metgraph/error.hpp"
#include "metgraph/format.hpp"

namespace metgraph {

namespace {

const std::regex &name_pattern() {
  static const std::regex re("[A-Za-z0-9_]+");
  return re;
}

const std::regex &decimal_pattern() {
  static const std::regex re("[+-]?([0-9]+\\.?[0-9]*|\\.[0-9]+)([eE][+-]?[0-9]+)?");
  return re;
}

std::vector<std::string> split_whitespace(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string token; in >> token;) out.push_back(token);
  return out;
}

std::vector<std::string> split_commas(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    out.emplace_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::optional<double> to_decimal(const std::string &token) {
  if (!std::regex_match(token, decimal_pattern())) return std::nullopt;
  const char *begin = token.data() + (token.front() == '+' ? 1 : 0);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(begin, token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

[[noreturn]] void fail(ErrorKind kind, std::size_t line, const std::string &message) {
  throw Error(kind, "line " + std::to_string(line) + ": " + message);
}

std::string location(const WeightedGraph &g, GraphPoint p) { return g.describe(p); }

} // namespace

GraphPtr parse_graph(std::string_view text) {
  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;
  std::unordered_map<std::string, std::size_t> vertex_line;
  std::unordered_map<std::string, std::size_t> edge_line;
  std::set<std::pair<std::string, std::string>> pairs;

  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++number;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = split_whitespace(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }

    for (std::size_t k = 1; k < tokens.size(); ++k) {
      const bool is_length = tokens[0] == "edge" && k == 4;
      if (!is_length && !std::regex_match(tokens[k], name_pattern()))
        fail(ErrorKind::SyntaxError, number, "invalid name '" + tokens[k] + "'");
    }
    if (tokens[0] == "vertex") {
      if (tokens.size() != 2) fail(ErrorKind::SyntaxError, number, "expected 'vertex <name>'");
      if (!vertex_line.emplace(tokens[1], number).second)
        fail(ErrorKind::DuplicateName, number, "vertex '" + tokens[1] + "' already declared on line " +
                                                   std::to_string(vertex_line[tokens[1]]));
      vertices.push_back(tokens[1]);
    } else if (tokens[0] == "edge") {
      if (tokens.size() != 5) fail(ErrorKind::SyntaxError, number, "expected 'edge <id> <u> <v> <length>'");
      const auto length = to_decimal(tokens[4]);
      if (!length) fail(ErrorKind::SyntaxError, number, "invalid length '" + tokens[4] + "'");
      const std::string &id = tokens[1];
      const std::string &u = tokens[2];
      const std::string &v = tokens[3];
      if (!edge_line.emplace(id, number).second)
        fail(ErrorKind::DuplicateName, number, "edge '" + id + "' already declared on line " + std::to_string(edge_line[id]));
      if (u == v) fail(ErrorKind::LoopEdge, number, "edge '" + id + "' joins '" + u + "' to itself");
      if (!vertex_line.contains(u)) fail(ErrorKind::UnknownVertex, number, "edge '" + id + "' uses undeclared vertex '" + u + "'");
      if (!vertex_line.contains(v)) fail(ErrorKind::UnknownVertex, number, "edge '" + id + "' uses undeclared vertex '" + v + "'");
      if (!(*length > 0.0)) fail(ErrorKind::NonpositiveLength, number, "edge '" + id + "' has length " + tokens[4]);
      if (!pairs.emplace(std::min(u, v), std::max(u, v)).second)
        fail(ErrorKind::MultiEdge, number, "edge '" + id + "' repeats the endpoint pair '" + u + "', '" + v + "'");
      edges.push_back(EdgeSpec{id, u, v, *length});
    } else {
      fail(ErrorKind::SyntaxError, number, "unknown declaration '" + tokens[0] + "'");
    }
    if (end == text.size()) break;
  }
  return WeightedGraph::build(std::move(vertices), edges);
}

GraphPtr parse_graph_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

GraphPoint parse_point(const WeightedGraph &g, std::string_view text) {
  const std::string s(text);
  const auto colon = s.find(':');
  if (colon == std::string::npos) {
    const auto v = g.find_vertex(s);
    if (!v) throw Error(ErrorKind::UnknownVertex, "no vertex named '" + s + "'");
    return g.vertex_point(*v);
  }
  const std::string edge_name = s.substr(0, colon);
  const auto e = g.find_edge(edge_name);
  if (!e) throw Error(ErrorKind::UnknownEdge, "no edge named '" + edge_name + "'");
  const auto t = to_decimal(s.substr(colon + 1));
  if (!t) throw Error(ErrorKind::SyntaxError, "invalid offset in point '" + s + "'");
  return g.canonical_point(*e, *t);
}

void write_measure_csv(std::ostream &out, const GraphMeasure &mu) {
  const WeightedGraph &g = *mu.graph();
  int degree = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) degree = std::max(degree, mu.density(e).degree());
  out << "kind,location";
  for (int k = 0; k <= degree; ++k) out << ",c" << k;
  out << '\n';
  for (const Atom &a : mu.atoms()) out << "atom," << location(g, a.point) << ',' << format_number(a.mass) << '\n';
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Polynomial &p = mu.density(e);
    if (p.is_zero()) continue;
    out << "density," << g.edge(e).name;
    for (int k = 0; k <= p.degree(); ++k) out << ',' << format_number(p.coefficient(k));
    out << '\n';
  }
}

GraphMeasure parse_measure_csv(const GraphPtr &g, std::string_view text) {
  std::vector<Atom> atoms;
  std::vector<Polynomial> densities(g->edge_count());
  std::istringstream in{std::string(text)};
  std::size_t number = 0;
  for (std::string line; std::getline(in, line);) {
    ++number;
    if (line.empty()) continue;
    const auto fields = split_commas(line);
    if (number == 1) {
      if (fields.size() < 3 || fields[0] != "kind" || fields[1] != "location")
        fail(ErrorKind::SyntaxError, number, "expected header 'kind,location,c0,...'");
      continue;
    }
    if (fields[0] == "atom") {
      if (fields.size() != 3) fail(ErrorKind::SyntaxError, number, "atom rows have three fields");
      const auto mass = to_decimal(fields[2]);
      if (!mass) fail(ErrorKind::SyntaxError, number, "invalid mass '" + fields[2] + "'");
      atoms.push_back(Atom{parse_point(*g, fields[1]), *mass});
    } else if (fields[0] == "density") {
      const auto e = g->find_edge(fields[1]);
      if (!e) fail(ErrorKind::UnknownEdge, number, "no edge named '" + fields[1] + "'");
      std::vector<double> coefficients;
      for (std::size_t k = 2; k < fields.size(); ++k) {
        const auto c = to_decimal(fields[k]);
        if (!c) fail(ErrorKind::SyntaxError, number, "invalid coefficient '" + fields[k] + "'");
        coefficients.push_back(*c);
      }
      densities[*e] = densities[*e] + Polynomial(std::move(coefficients));
    } else {
      fail(ErrorKind::SyntaxError, number, "unknown row kind '" + fields[0] + "'");
    }
  }
  return GraphMeasure(g, std::move(atoms), std::move(densities));
}

void write_spectrum_csv(std::ostream &out, const Spectrum &spectrum, bool vectors) {
  out << "n,lambda\n";
  for (std::size_t n = 0; n < spectrum.size(); ++n)
    out << n + 1 << ',' << format_number(spectrum.pair(n).lambda) << '\n';
  if (!vectors) return;
  const WeightedGraph &mesh = *spectrum.mesh();
  const WeightedGraph &host = *spectrum.host();
  out << "n,point,value\n";
  for (std::size_t n = 0; n < spectrum.size(); ++n) {
    for (VertexId v = 0; v < mesh.vertex_count(); ++v) {
      const GraphPoint p = spectrum.refinement().to_coarse(mesh.vertex_point(v));
      out << n + 1 << ',' << host.describe(p) << ','
          << format_number(spectrum.pair(n).values(static_cast<Eigen::Index>(v))) << '\n';
    }
  }
}

} // namespace metgraph
