#include "core/graph.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace domlab {

namespace {

std::uint32_t words_for(std::uint32_t n) { return (n + 63) >> 6; }

void check_vertex(std::uint32_t v, std::uint32_t n) {
  if (v >= n) {
    throw std::invalid_argument("vertex index " + std::to_string(v) +
                                " out of range for universe of size " +
                                std::to_string(n));
  }
}

}  // namespace

VertexSet::VertexSet(std::uint32_t n) : n_(n), words_(words_for(n), 0) {}

VertexSet VertexSet::full(std::uint32_t n) {
  VertexSet s(n);
  for (std::uint32_t v = 0; v < n; ++v) s.insert(v);
  return s;
}

std::uint32_t VertexSet::count() const {
  std::uint32_t c = 0;
  for (std::uint64_t w : words_) c += std::popcount(w);
  return c;
}

bool VertexSet::covers_all() const {
  if (n_ == 0) return true;
  const std::size_t last = words_.size() - 1;
  for (std::size_t i = 0; i < last; ++i) {
    if (words_[i] != ~std::uint64_t{0}) return false;
  }
  const std::uint32_t tail = n_ & 63;
  const std::uint64_t mask =
      tail == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << tail) - 1;
  return words_[last] == mask;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  if (o.n_ != n_) throw std::invalid_argument("vertex set universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  if (o.n_ != n_) throw std::invalid_argument("vertex set universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

std::vector<std::uint32_t> VertexSet::to_vector() const {
  std::vector<std::uint32_t> out;
  out.reserve(count());
  for_each([&](std::uint32_t v) { out.push_back(v); });
  return out;
}

Graph::Graph(std::uint32_t n)
    : n_(n), words_per_row_(words_for(n)), degree_(n, 0) {
  if (n == 0) throw std::invalid_argument("graph needs at least one vertex");
  if (n > kMaxVertices) {
    throw std::invalid_argument(
        "vertex count " + std::to_string(n) + " exceeds the bit-matrix cap " +
        std::to_string(kMaxVertices));
  }
  adj_.assign(std::size_t{n} * words_per_row_, 0);
}

void Graph::add_edge(std::uint32_t u, std::uint32_t v) {
  check_vertex(u, n_);
  check_vertex(v, n_);
  if (u == v) {
    throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  }
  if (has_edge(u, v)) {
    throw std::invalid_argument("duplicate edge {" + std::to_string(u) + "," +
                                std::to_string(v) + "}");
  }
  adj_[std::size_t{u} * words_per_row_ + (v >> 6)] |= std::uint64_t{1}
                                                      << (v & 63);
  adj_[std::size_t{v} * words_per_row_ + (u >> 6)] |= std::uint64_t{1}
                                                      << (u & 63);
  ++degree_[u];
  ++degree_[v];
  ++edge_count_;
}

VertexSet Graph::closed_neighborhood(std::uint32_t v) const {
  check_vertex(v, n_);
  VertexSet s(n_);
  auto words = s.words();
  const auto r = row(v);
  for (std::uint32_t w = 0; w < words_per_row_; ++w) words[w] = r[w];
  s.insert(v);
  return s;
}

bool Graph::is_dominating(const VertexSet& s) const {
  if (s.universe() != n_) {
    throw std::invalid_argument("vertex set universe mismatch");
  }
  std::vector<std::uint64_t> covered(s.words().begin(), s.words().end());
  s.for_each([&](std::uint32_t v) {
    const auto r = row(v);
    for (std::uint32_t w = 0; w < words_per_row_; ++w) covered[w] |= r[w];
  });
  const std::uint32_t tail = n_ & 63;
  const std::uint64_t mask =
      tail == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << tail) - 1;
  for (std::uint32_t w = 0; w + 1 < words_per_row_; ++w) {
    if (covered[w] != ~std::uint64_t{0}) return false;
  }
  return covered[words_per_row_ - 1] == mask;
}

VertexSet Graph::crucial_set(const VertexSet& s) const {
  if (s.universe() != n_) {
    throw std::invalid_argument("vertex set universe mismatch");
  }
  VertexSet out(n_);
  const auto sw = s.words();
  for (std::uint32_t x = 0; x < n_; ++x) {
    if (s.contains(x)) continue;
    const auto r = row(x);
    std::uint32_t inside = 0;
    for (std::uint32_t w = 0; w < words_per_row_ && inside < 2; ++w) {
      inside += std::popcount(r[w] & sw[w]);
    }
    if (inside == 1) out.insert(x);
  }
  return out;
}

}  // namespace domlab
