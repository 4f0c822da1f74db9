#include <cstdio>
#include <fstream>
#include <sstream>

#include "judicious/harness.hpp"

namespace judicious {

namespace {

// Next line that is neither blank nor a comment; false at end of input.
bool next_data_line(std::istream& in, std::string& line, std::int64_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    return true;
  }
  return false;
}

std::string at_line(std::int64_t line_no) { return " at line " + std::to_string(line_no); }

}  // namespace

Digraph read_edge_list(std::istream& in) {
  std::string line;
  std::int64_t line_no = 0;
  if (!next_data_line(in, line, line_no)) throw InputError("edge list is empty");
  std::int64_t n = -1, m = -1;
  {
    std::istringstream header(line);
    std::string trailing;
    if (!(header >> n >> m) || (header >> trailing) || n < 0 || m < 0 || n > INT32_MAX) {
      throw InputError("bad header, expected `n m`" + at_line(line_no), line_no);
    }
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  while (static_cast<std::int64_t>(edges.size()) < m) {
    if (!next_data_line(in, line, line_no)) {
      throw InputError("expected " + std::to_string(m) + " edges, found " +
                       std::to_string(edges.size()));
    }
    std::istringstream row(line);
    std::int64_t u = -1, v = -1;
    std::string trailing;
    if (!(row >> u >> v) || (row >> trailing)) {
      throw InputError("bad edge line" + at_line(line_no), line_no);
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InputError("vertex out of range" + at_line(line_no), line_no);
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (next_data_line(in, line, line_no)) {
    throw InputError("more edges than declared" + at_line(line_no), line_no);
  }
  return Digraph::from_edge_list(static_cast<Vertex>(n), edges);
}

Digraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Digraph& graph) {
  out << graph.vertex_count() << ' ' << graph.edge_count() << '\n';
  for (const Edge& e : graph.edges()) out << e.tail << ' ' << e.head << '\n';
}

Bipartition read_partition(std::istream& in, Vertex n) {
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  Bipartition partition(n);
  std::string line;
  std::int64_t line_no = 0;
  while (next_data_line(in, line, line_no)) {
    std::istringstream row(line);
    std::int64_t v = -1, side = 0;
    std::string trailing;
    if (!(row >> v >> side) || (row >> trailing)) {
      throw InputError("bad partition line" + at_line(line_no), line_no);
    }
    if (v < 0 || v >= n) throw InputError("vertex out of range" + at_line(line_no), line_no);
    if (side != 1 && side != 2) throw InputError("side must be 1 or 2" + at_line(line_no), line_no);
    if (seen[static_cast<std::size_t>(v)]++) {
      throw InputError("vertex listed twice" + at_line(line_no), line_no);
    }
    partition.assign(static_cast<Vertex>(v), side == 1 ? Side::first : Side::second);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!seen[static_cast<std::size_t>(v)]) {
      throw InputError("vertex " + std::to_string(v) + " missing from partition", v);
    }
  }
  return partition;
}

Bipartition read_partition_file(const std::string& path, Vertex n) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_partition(in, n);
}

void write_partition(std::ostream& out, const Bipartition& partition) {
  for (Vertex v = 0; v < partition.size(); ++v) {
    out << v << ' ' << (partition.on_first(v) ? 1 : 2) << '\n';
  }
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string graph_hash(const Digraph& graph) {
  std::ostringstream out;
  write_edge_list(out, graph);
  return fnv1a_hex(out.str());
}

}  // namespace judicious
