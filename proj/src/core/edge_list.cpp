#include "core/edge_list.hpp"

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace domlab {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw std::runtime_error("edge list: " + what);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  long long n = -1;
  long long m = -1;
  if (!(in >> n >> m)) fail("malformed header, expected \"n m\"");
  if (n < 1 || n > static_cast<long long>(kMaxVertices)) {
    fail("vertex count " + std::to_string(n) + " out of range [1, " +
         std::to_string(kMaxVertices) + "]");
  }
  if (m < 0) fail("negative edge count in header");

  Graph g(static_cast<std::uint32_t>(n));
  for (long long i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    if (!(in >> u >> v)) {
      fail("truncated input, expected " + std::to_string(m) +
           " edges but found " + std::to_string(i));
    }
    if (u < 0 || u >= n || v < 0 || v >= n) {
      fail("vertex index out of range in edge " + std::to_string(u) + " " +
           std::to_string(v));
    }
    if (u == v) fail("self-loop at vertex " + std::to_string(u));
    if (u > v) {
      fail("edge endpoints out of order: " + std::to_string(u) + " " +
           std::to_string(v));
    }
    if (g.has_edge(static_cast<std::uint32_t>(u),
                   static_cast<std::uint32_t>(v))) {
      fail("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    g.add_edge(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
  }
  std::string trailing;
  if (in >> trailing) fail("trailing data after " + std::to_string(m) + " edges");
  return g;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  g.for_each_edge(
      [&](std::uint32_t u, std::uint32_t v) { out << u << ' ' << v << '\n'; });
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(g, out);
  return out.str();
}

}  // namespace domlab
