#include "reconf/io.hpp"

#include <set>
#include <sstream>

#include "reconf/errors.hpp"

namespace reconf {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string text;
  std::size_t line_no = 0;
  long long n = -1;
  std::set<Edge> edges;
  while (std::getline(in, text)) {
    ++line_no;
    std::istringstream line(text);
    std::string tag;
    if (!(line >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string format;
      long long m = 0;
      if (n >= 0) fail(line_no, "second problem line");
      if (!(line >> format >> n >> m) || format != "edge" || n < 0 || m < 0) fail(line_no, "expected 'p edge <n> <m>'");
    } else if (tag == "e") {
      long long u = 0, v = 0;
      if (n < 0) fail(line_no, "edge before the problem line");
      if (!(line >> u >> v)) fail(line_no, "expected 'e <u> <v>'");
      if (u < 1 || u > n || v < 1 || v > n) fail(line_no, "vertex out of range 1.." + std::to_string(n));
      if (u == v) fail(line_no, "self-loop on vertex " + std::to_string(u));
      edges.emplace(static_cast<VertexId>(std::min(u, v)), static_cast<VertexId>(std::max(u, v)));
    } else {
      fail(line_no, "unknown line type '" + tag + "'");
    }
    std::string extra;
    if (line >> extra) fail(line_no, "trailing token '" + extra + "'");
  }
  if (n < 0) throw InputError("missing 'p edge' line");
  std::vector<Edge> list(edges.begin(), edges.end());
  return Graph::with_vertices(static_cast<int>(n), list);
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

std::string emit_graph(const Graph& g) {
  std::ostringstream out;
  auto edges = g.edges();
  out << "p edge " << g.order() << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << "e " << g.index(u) + 1 << ' ' << g.index(v) + 1 << '\n';
  return out.str();
}

}  // namespace reconf
