#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace domlab {

// Largest supported vertex count. The adjacency matrix is bit-packed,
// so memory grows quadratically; 65536 vertices is a 512 MiB matrix.
inline constexpr std::uint32_t kMaxVertices = 65536;

// Subset of {0,...,n-1} as packed 64-bit words.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::uint32_t n);

  static VertexSet full(std::uint32_t n);

  std::uint32_t universe() const { return n_; }

  bool contains(std::uint32_t v) const {
    return (words_[v >> 6] >> (v & 63)) & 1u;
  }
  void insert(std::uint32_t v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(std::uint32_t v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  std::uint32_t count() const;
  bool empty() const { return count() == 0; }

  // True iff every vertex of the universe is present.
  bool covers_all() const;

  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);

  std::vector<std::uint32_t> to_vector() const;

  // Visit members in ascending order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        f(static_cast<std::uint32_t>((w << 6) + b));
        bits &= bits - 1;
      }
    }
  }

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::uint32_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

// Simple undirected graph over vertices 0..n-1 with bit-packed
// adjacency rows. Immutable after construction in all sampling and
// parsing paths, hence safe to share across threads.
class Graph {
 public:
  explicit Graph(std::uint32_t n);

  std::uint32_t vertex_count() const { return n_; }
  std::uint64_t edge_count() const { return edge_count_; }
  std::uint32_t words_per_row() const { return words_per_row_; }

  bool has_edge(std::uint32_t u, std::uint32_t v) const {
    return (adj_[std::size_t{u} * words_per_row_ + (v >> 6)] >> (v & 63)) & 1u;
  }

  // Rejects self-loops and duplicate insertions.
  void add_edge(std::uint32_t u, std::uint32_t v);

  std::uint32_t degree(std::uint32_t v) const { return degree_[v]; }

  std::span<const std::uint64_t> row(std::uint32_t v) const {
    return {adj_.data() + std::size_t{v} * words_per_row_, words_per_row_};
  }

  // Neighbors of v plus v itself, as a fresh VertexSet.
  VertexSet closed_neighborhood(std::uint32_t v) const;

  template <class F>
  void for_each_neighbor(std::uint32_t v, F&& f) const {
    const std::uint64_t* r = adj_.data() + std::size_t{v} * words_per_row_;
    for (std::uint32_t w = 0; w < words_per_row_; ++w) {
      std::uint64_t bits = r[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        f(static_cast<std::uint32_t>((std::uint32_t{w} << 6) + b));
        bits &= bits - 1;
      }
    }
  }

  // Visit edges as ordered pairs u < v in lexicographic order.
  template <class F>
  void for_each_edge(F&& f) const {
    for (std::uint32_t u = 0; u < n_; ++u) {
      const std::uint64_t* r = adj_.data() + std::size_t{u} * words_per_row_;
      for (std::uint32_t w = (u + 1) >> 6; w < words_per_row_; ++w) {
        std::uint64_t bits = r[w];
        if (w == ((u + 1) >> 6)) {
          const std::uint32_t shift = (u + 1) & 63;
          bits &= ~std::uint64_t{0} << shift;
        }
        while (bits != 0) {
          const int b = std::countr_zero(bits);
          f(u, static_cast<std::uint32_t>((std::uint32_t{w} << 6) + b));
          bits &= bits - 1;
        }
      }
    }
  }

  bool is_dominating(const VertexSet& s) const;
  VertexSet crucial_set(const VertexSet& s) const;

 private:
  std::uint32_t n_ = 0;
  std::uint32_t words_per_row_ = 0;
  std::uint64_t edge_count_ = 0;
  std::vector<std::uint64_t> adj_;
  std::vector<std::uint32_t> degree_;
};

}  // namespace domlab
