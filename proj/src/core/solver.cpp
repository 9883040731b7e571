#include "core/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>
#include <string>
#include <vector>

namespace domlab {

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

VertexSet set_from_sorted(std::uint32_t n, const std::vector<std::uint32_t>& vs) {
  VertexSet s(n);
  for (std::uint32_t v : vs) s.insert(v);
  return s;
}

class BranchAndBound {
 public:
  BranchAndBound(const Graph& g, const SolveOptions& opt)
      : g_(g),
        n_(g.vertex_count()),
        words_(g.words_per_row()),
        cap_(opt.size_cap),
        start_(Clock::now()) {
    budget_millis_ = opt.budget_seconds * 1000.0;
    nbhd_.assign(std::size_t{n_} * words_, 0);
    for (std::uint32_t v = 0; v < n_; ++v) {
      const auto r = g.row(v);
      std::uint64_t* dst = nbhd_.data() + std::size_t{v} * words_;
      for (std::uint32_t w = 0; w < words_; ++w) dst[w] = r[w];
      dst[v >> 6] |= std::uint64_t{1} << (v & 63);
    }
    full_.assign(words_, ~std::uint64_t{0});
    const std::uint32_t tail = n_ & 63;
    if (tail != 0) full_[words_ - 1] = (std::uint64_t{1} << tail) - 1;
  }

  SolveResult run() {
    const VertexSet greedy = greedy_dominating_set(g_);
    best_ = greedy.to_vector();
    best_size_ = static_cast<std::uint32_t>(best_.size());

    SolveResult res;
    if (cap_ && best_size_ <= *cap_) {
      // Greedy already certifies the decision.
      res.status = SolveStatus::upper_bound_only;
      res.size = best_size_;
      res.witness = set_from_sorted(n_, best_);
      res.nodes_explored = 0;
      res.elapsed_millis = millis_since(start_);
      return res;
    }

    arena_.assign(std::size_t{limit() + 1} * words_, 0);
    cand_stack_.resize(limit() + 1);
    chosen_.clear();
    recurse(0, arena_.data(), n_);

    res.nodes_explored = nodes_;
    res.elapsed_millis = millis_since(start_);
    if (timed_out_) {
      res.status = SolveStatus::timeout;
      res.size = best_size_;
      res.witness = set_from_sorted(n_, best_);
      return res;
    }
    if (cap_) {
      if (cap_hit_) {
        res.status = SolveStatus::upper_bound_only;
        res.size = static_cast<std::uint32_t>(cap_witness_.size());
        res.witness = set_from_sorted(n_, cap_witness_);
      } else {
        // Full tree explored below cap + 1: no set of size cap exists.
        res.status = SolveStatus::exact;
        res.size = *cap_ + 1;
        res.witness = set_from_sorted(n_, best_);
      }
      return res;
    }
    res.status = SolveStatus::exact;
    res.size = best_size_;
    res.witness = set_from_sorted(n_, best_);
    return res;
  }

 private:
  std::uint32_t limit() const {
    return cap_ ? std::min(best_size_, *cap_ + 1) : best_size_;
  }

  const std::uint64_t* nbhd(std::uint32_t v) const {
    return nbhd_.data() + std::size_t{v} * words_;
  }

  bool out_of_time() {
    if ((nodes_ & 255) != 0) return timed_out_;
    if (millis_since(start_) > budget_millis_) timed_out_ = true;
    return timed_out_;
  }

  std::uint32_t new_coverage(std::uint32_t v, const std::uint64_t* covered) const {
    const std::uint64_t* r = nbhd(v);
    std::uint32_t c = 0;
    for (std::uint32_t w = 0; w < words_; ++w) {
      c += std::popcount(r[w] & ~covered[w]);
    }
    return c;
  }

  // Returns false when the budget ran out and the search must unwind.
  bool recurse(std::uint32_t depth, const std::uint64_t* covered,
               std::uint32_t uncovered) {
    ++nodes_;
    if (out_of_time()) return false;

    if (uncovered == 0) {
      best_size_ = depth;
      best_ = chosen_;
      if (cap_ && depth <= *cap_) {
        cap_hit_ = true;
        cap_witness_ = chosen_;
      }
      return true;
    }
    if (depth + 1 >= limit()) return true;

    // Cheap lower bound: every chosen vertex covers at most max_new
    // new vertices.
    std::uint32_t max_new = 0;
    for (std::uint32_t v = 0; v < n_; ++v) {
      const std::uint32_t c = new_coverage(v, covered);
      if (c > max_new) max_new = c;
    }
    const std::uint32_t lb = (uncovered + max_new - 1) / max_new;
    if (depth + lb >= limit()) return true;

    // Branch vertex: uncovered vertex with the fewest candidate
    // dominators, i.e. the smallest closed degree.
    std::uint32_t branch_v = n_;
    std::uint32_t branch_deg = ~std::uint32_t{0};
    for (std::uint32_t w = 0; w < words_; ++w) {
      std::uint64_t bits = full_[w] & ~covered[w];
      while (bits != 0) {
        const std::uint32_t v =
            (w << 6) + static_cast<std::uint32_t>(std::countr_zero(bits));
        bits &= bits - 1;
        const std::uint32_t cd = g_.degree(v) + 1;
        if (cd < branch_deg) {
          branch_deg = cd;
          branch_v = v;
        }
      }
    }

    // Candidates are exactly the closed neighborhood of the branch
    // vertex; order by decreasing new coverage, ties by index.
    std::vector<Cand>& cand = cand_stack_[depth];
    cand.clear();
    {
      const std::uint64_t* r = nbhd(branch_v);
      for (std::uint32_t w = 0; w < words_; ++w) {
        std::uint64_t bits = r[w];
        while (bits != 0) {
          const std::uint32_t v =
              (w << 6) + static_cast<std::uint32_t>(std::countr_zero(bits));
          bits &= bits - 1;
          cand.push_back({new_coverage(v, covered), v});
        }
      }
    }
    std::sort(cand.begin(), cand.end(), [](const Cand& a, const Cand& b) {
      return a.gain != b.gain ? a.gain > b.gain : a.v < b.v;
    });

    std::uint64_t* child = arena_.data() + std::size_t{depth + 1} * words_;
    for (const Cand& c : cand) {
      if (depth + 1 >= limit()) return true;  // incumbent may have improved
      const std::uint64_t* r = nbhd(c.v);
      for (std::uint32_t w = 0; w < words_; ++w) child[w] = covered[w] | r[w];
      chosen_.push_back(c.v);
      const bool ok = recurse(depth + 1, child, uncovered - c.gain);
      chosen_.pop_back();
      if (!ok) return false;
      if (cap_hit_) return true;
    }
    return true;
  }

  struct Cand {
    std::uint32_t gain;
    std::uint32_t v;
  };

  const Graph& g_;
  std::uint32_t n_;
  std::uint32_t words_;
  std::optional<std::uint32_t> cap_;
  Clock::time_point start_;
  double budget_millis_ = 0.0;

  std::vector<std::uint64_t> nbhd_;
  std::vector<std::uint64_t> full_;
  std::vector<std::uint64_t> arena_;
  std::vector<std::uint32_t> chosen_;
  std::vector<std::uint32_t> best_;
  std::uint32_t best_size_ = 0;
  std::vector<std::vector<Cand>> cand_stack_;
  bool cap_hit_ = false;
  std::vector<std::uint32_t> cap_witness_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

}  // namespace

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::exact:
      return "exact";
    case SolveStatus::upper_bound_only:
      return "upper_bound_only";
    case SolveStatus::timeout:
      return "timeout";
  }
  return "unknown";
}

SolveResult brute_force_domination_number(const Graph& g) {
  const std::uint32_t n = g.vertex_count();
  if (n > 25) {
    throw std::invalid_argument(
        "brute force is capped at 25 vertices, got " + std::to_string(n));
  }
  const auto start = Clock::now();
  std::vector<std::uint32_t> masks(n);
  for (std::uint32_t v = 0; v < n; ++v) {
    std::uint32_t m = std::uint32_t{1} << v;
    g.for_each_neighbor(v, [&](std::uint32_t u) { m |= std::uint32_t{1} << u; });
    masks[v] = m;
  }
  const std::uint32_t all = n == 32 ? ~std::uint32_t{0}
                                    : (std::uint32_t{1} << n) - 1;
  SolveResult res;
  for (std::uint32_t k = 1; k <= n; ++k) {
    // Gosper's hack walks the k-subsets of [n] in ascending order.
    std::uint32_t subset = (std::uint32_t{1} << k) - 1;
    while (subset <= all) {
      ++res.nodes_explored;
      std::uint32_t covered = 0;
      std::uint32_t rest = subset;
      while (rest != 0) {
        const std::uint32_t v =
            static_cast<std::uint32_t>(std::countr_zero(rest));
        covered |= masks[v];
        rest &= rest - 1;
      }
      if (covered == all) {
        res.status = SolveStatus::exact;
        res.size = k;
        res.witness = VertexSet(n);
        for (std::uint32_t v = 0; v < n; ++v) {
          if ((subset >> v) & 1u) res.witness.insert(v);
        }
        res.elapsed_millis = millis_since(start);
        return res;
      }
      const std::uint32_t c = subset & -subset;
      const std::uint32_t r = subset + c;
      if (r > all || r < subset) break;
      subset = r | (((subset ^ r) >> 2) / c);
    }
  }
  throw std::logic_error("no dominating set found; graph invariant broken");
}

SolveResult domination_number_exact(const Graph& g, const SolveOptions& options) {
  if (!(options.budget_seconds > 0.0)) {
    throw std::invalid_argument("solver budget must be positive");
  }
  if (options.size_cap && *options.size_cap > g.vertex_count()) {
    throw std::invalid_argument("size cap exceeds vertex count");
  }
  return BranchAndBound(g, options).run();
}

VertexSet greedy_dominating_set(const Graph& g) {
  const std::uint32_t n = g.vertex_count();
  VertexSet result(n);
  VertexSet covered(n);
  std::vector<std::uint32_t> gain(n);
  for (std::uint32_t v = 0; v < n; ++v) gain[v] = g.degree(v) + 1;

  std::uint32_t uncovered = n;
  while (uncovered > 0) {
    std::uint32_t best = 0;
    for (std::uint32_t v = 1; v < n; ++v) {
      if (gain[v] > gain[best]) best = v;
    }
    result.insert(best);
    // Vertices covered for the first time stop counting toward every
    // closed neighborhood that contains them.
    auto absorb = [&](std::uint32_t u) {
      if (covered.contains(u)) return;
      covered.insert(u);
      --uncovered;
      --gain[u];
      g.for_each_neighbor(u, [&](std::uint32_t w) { --gain[w]; });
    };
    absorb(best);
    g.for_each_neighbor(best, absorb);
  }
  return result;
}

VertexSet alteration_dominating_set(const Graph& g, std::uint32_t r) {
  const std::uint32_t n = g.vertex_count();
  if (r > n) {
    throw std::invalid_argument("alteration prefix size " + std::to_string(r) +
                                " exceeds vertex count " + std::to_string(n));
  }
  VertexSet covered(n);
  auto cw = covered.words();
  for (std::uint32_t v = 0; v < r; ++v) {
    const auto row = g.row(v);
    for (std::uint32_t w = 0; w < g.words_per_row(); ++w) cw[w] |= row[w];
    covered.insert(v);
  }
  VertexSet result(n);
  for (std::uint32_t v = 0; v < r; ++v) result.insert(v);
  for (std::uint32_t v = 0; v < n; ++v) {
    if (!covered.contains(v)) result.insert(v);
  }
  return result;
}

}  // namespace domlab
