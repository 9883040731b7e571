#include "core/sampling.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace domlab {

double GnpParams::q() const {
  if (!q_defined()) {
    throw std::domain_error("q = 1/(1-p) is undefined at p = 1");
  }
  return 1.0 / (1.0 - p);
}

void GnpParams::validate() const {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  if (n > kMaxVertices) {
    throw std::invalid_argument("n exceeds the bit-matrix cap " +
                                std::to_string(kMaxVertices));
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("edge probability must lie in [0,1]");
  }
}

SamplerPath sampler_path_for(double p) {
  return p < 0.1 ? SamplerPath::geometric : SamplerPath::bernoulli;
}

const char* to_string(SamplerPath path) {
  return path == SamplerPath::geometric ? "geometric" : "bernoulli";
}

namespace {

// Pairs (u,v), u < v, indexed lexicographically: row u starts at
// offset u*n - u*(u+1)/2 and holds n-1-u pairs.
struct PairDecoder {
  std::uint64_t n;
  std::uint64_t u = 0;
  std::uint64_t row_base = 0;

  std::pair<std::uint32_t, std::uint32_t> decode(std::uint64_t idx) {
    while (idx - row_base >= n - 1 - u) {
      row_base += n - 1 - u;
      ++u;
    }
    return {static_cast<std::uint32_t>(u),
            static_cast<std::uint32_t>(u + 1 + (idx - row_base))};
  }
};

}  // namespace

Graph sample_gnp(const GnpParams& params, std::uint64_t seed) {
  params.validate();
  const std::uint32_t n = params.n;
  Graph g(n);
  if (params.p <= 0.0 || n == 1) return g;
  if (params.p >= 1.0) {
    for (std::uint32_t u = 0; u < n; ++u)
      for (std::uint32_t v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
  }

  Rng rng(seed);
  const std::uint64_t pairs = std::uint64_t{n} * (n - 1) / 2;
  if (sampler_path_for(params.p) == SamplerPath::geometric) {
    const double log_q = std::log1p(-params.p);
    PairDecoder dec{n};
    std::uint64_t idx = 0;
    while (true) {
      const std::uint64_t skip = rng.geometric_skip(log_q);
      if (skip >= pairs - idx) break;
      idx += skip;
      const auto [u, v] = dec.decode(idx);
      g.add_edge(u, v);
      if (++idx >= pairs) break;
    }
  } else {
    for (std::uint32_t u = 0; u < n; ++u) {
      for (std::uint32_t v = u + 1; v < n; ++v) {
        if (rng.bernoulli(params.p)) g.add_edge(u, v);
      }
    }
  }
  return g;
}

Graph delete_edges(const Graph& g, double p_del, std::uint64_t seed) {
  if (!(p_del >= 0.0 && p_del <= 1.0)) {
    throw std::invalid_argument("deletion probability must lie in [0,1]");
  }
  Rng rng(seed);
  Graph out(g.vertex_count());
  g.for_each_edge([&](std::uint32_t u, std::uint32_t v) {
    if (!rng.bernoulli(p_del)) out.add_edge(u, v);
  });
  return out;
}

}  // namespace domlab
