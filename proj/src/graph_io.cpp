#include "switchlab/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace switchlab {

namespace {

bool read_int(std::istringstream& in, long& out) {
  in >> out;
  return static_cast<bool>(in);
}

}  // namespace

LabeledGraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long n = 0;
  long m = 0;
  if (!read_int(in, n) || !read_int(in, m)) {
    throw ParseError("edge list: expected header \"n m\"");
  }
  if (n < 0 || n > kMaxVertices) {
    throw RangeError("edge list: vertex count " + std::to_string(n) +
                     " outside [0," + std::to_string(kMaxVertices) + "]");
  }
  if (m < 0) throw ParseError("edge list: negative edge count");
  std::vector<Edge> edges;
  for (long i = 0; i < m; ++i) {
    long u = 0;
    long v = 0;
    if (!read_int(in, u) || !read_int(in, v)) {
      throw ParseError("edge list: expected " + std::to_string(m) +
                       " edges, found " + std::to_string(i));
    }
    edges.push_back(Edge{static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  std::string rest;
  if (in >> rest) {
    throw ParseError("edge list: trailing content after " + std::to_string(m) +
                     " edges");
  }
  return LabeledGraph::from_edges(static_cast<int>(n), edges);
}

std::string to_edge_list(const LabeledGraph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  g.for_each_edge([&](Edge e) { out << e.u << ' ' << e.v << '\n'; });
  return out.str();
}

LabeledGraph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges") ||
      !j["n"].is_number_integer() || !j["edges"].is_array()) {
    throw ParseError("graph JSON: expected {\"n\": int, \"edges\": [[u,v],...]}");
  }
  std::vector<Edge> edges;
  for (const auto& pair : j["edges"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer()) {
      throw ParseError("graph JSON: each edge must be a pair of integers");
    }
    edges.push_back(Edge{pair[0].get<Vertex>(), pair[1].get<Vertex>()});
  }
  return LabeledGraph::from_edges(j["n"].get<int>(), edges);
}

nlohmann::json graph_to_json(const LabeledGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  g.for_each_edge([&](Edge e) { edges.push_back({e.u, e.v}); });
  return {{"n", g.order()}, {"edges", std::move(edges)}};
}

LabeledGraph parse_graph(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("graph JSON: ") + e.what());
    }
    return graph_from_json(j);
  }
  return parse_edge_list(text);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw IoError("failed writing '" + path + "'");
}

LabeledGraph read_graph_file(const std::string& path) {
  return parse_graph(read_text_file(path));
}

std::string to_dot(const LabeledGraph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (Vertex v = 1; v <= g.order(); ++v) out << "  " << v << ";\n";
  g.for_each_edge([&](Edge e) { out << "  " << e.u << " -- " << e.v << ";\n"; });
  out << "}\n";
  return out.str();
}

std::string edge_code(const LabeledGraph& g) {
  // Bits of the pairs (u,v), u<v, in lexicographic order, packed MSB-first
  // into hex digits.
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  int nibble = 0;
  int filled = 0;
  for (Vertex u = 1; u <= g.order(); ++u) {
    for (Vertex v = u + 1; v <= g.order(); ++v) {
      nibble = (nibble << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 4) {
        out.push_back(kHex[nibble]);
        nibble = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(kHex[nibble << (4 - filled)]);
  return out;
}

}  // namespace switchlab
