#pragma once

#include <cstdint>

#include "core/graph.hpp"
#include "core/rng.hpp"

namespace domlab {

// G(n,p) parameters with the derived quantities q = 1/(1-p) and
// d = n p. q is undefined at p = 1; analytics callers must check
// q_defined() first.
struct GnpParams {
  std::uint32_t n = 0;
  double p = 0.0;

  bool q_defined() const { return p < 1.0; }
  double q() const;
  double expected_degree() const { return static_cast<double>(n) * p; }

  void validate() const;  // 0 <= p <= 1, 1 <= n <= kMaxVertices
};

enum class SamplerPath { bernoulli, geometric };

// Sparse graphs are sampled by geometric gap-skipping over the pair
// indices, O(m) instead of O(n^2). The two paths may produce
// different graphs for the same seed; the choice is part of the
// sampling contract and is recorded in experiment reports.
SamplerPath sampler_path_for(double p);
const char* to_string(SamplerPath path);

Graph sample_gnp(const GnpParams& params, std::uint64_t seed);

// Each edge of g survives independently with probability 1 - p_del.
Graph delete_edges(const Graph& g, double p_del, std::uint64_t seed);

}  // namespace domlab
