#pragma once

#include <cstdint>
#include <limits>
#include <optional>

#include "core/graph.hpp"

namespace domlab {

enum class SolveStatus { exact, upper_bound_only, timeout };
const char* to_string(SolveStatus s);

struct SolveResult {
  SolveStatus status = SolveStatus::exact;
  std::uint32_t size = 0;
  VertexSet witness;
  std::uint64_t nodes_explored = 0;
  double elapsed_millis = 0.0;
};

struct SolveOptions {
  // Wall-clock budget; infinity means solve to optimality.
  double budget_seconds = std::numeric_limits<double>::infinity();
  // Decision mode: determine whether D(G) <= size_cap. A result with
  // size <= cap answers yes (status upper_bound_only, witness
  // included, not necessarily minimum); a result with size = cap + 1
  // and status exact certifies that no dominating set of size cap
  // exists. In the "no" case the witness is the best dominating set
  // found and may be larger than `size`.
  std::optional<std::uint32_t> size_cap;
};

// Subset enumeration in increasing cardinality. Oracle-grade: simple
// enough to trust, exponential, n <= 25 enforced.
SolveResult brute_force_domination_number(const Graph& g);

// Branch and bound over the set-cover view: closed neighborhoods
// cover vertices. Branches on an uncovered vertex with the fewest
// candidate dominators, children ordered by decreasing new coverage;
// prunes with a greedy incumbent and the bound
// ceil(uncovered / max new coverage). Ties always break toward the
// lowest vertex index, so results are reproducible.
SolveResult domination_number_exact(const Graph& g,
                                    const SolveOptions& options = {});

// Repeatedly add the vertex covering the most currently uncovered
// vertices (ties to the lowest index) until everything is covered.
VertexSet greedy_dominating_set(const Graph& g);

// {0,...,r-1} together with every vertex not dominated by it.
VertexSet alteration_dominating_set(const Graph& g, std::uint32_t r);

}  // namespace domlab
