#pragma once

#include <cstdint>
#include <optional>

namespace domlab::analytics {

// ln C(n,k) via lgamma.
double ln_binomial(std::uint64_t n, std::uint64_t k);

// ln(1 - e^t) for t <= 0; -inf at t = 0.
double log1mexp(double t);

// ln E(X_r) for X_r = number of dominating r-sets in G(n,p):
//   E(X_r) = C(n,r) (1 - (1-p)^r)^(n-r).
// (1-p)^r is evaluated as exp(r log1p(-p)); exact -inf for r = 0.
double log_expected_dominating_sets(std::uint32_t n, double p, std::uint32_t r);

// min{ r : E(X_r) >= 1/d } - 1 with d = n p. Requires d > 1 so the
// threshold is attainable (E(X_n) = 1); compares in log space against
// -ln d. Terminates at r <= n.
std::uint32_t critical_r_hat(std::uint32_t n, double p);

// Dense closed form log_q(n ln q / ln^2 n) = (ln n + ln ln q
// - 2 ln ln n) / ln q. Accepted domain e <= q <= n, n >= 3.
double dense_r_hat(std::uint32_t n, double p);

enum class Regime { sparse_search, dense_closed_form, very_dense };
const char* to_string(Regime r);

// The two-value concentration window. The Eq-style threshold search
// defines r_hat for every p with q <= n; the dense closed form is
// attached as a diagnostic once q > e. q >= n (up to float round-off)
// is classified very_dense with window {1,2}.
struct ConcentrationPrediction {
  std::uint32_t r_hat = 0;
  std::uint32_t interval_lo = 0;  // r_hat + 1
  std::uint32_t interval_hi = 0;  // r_hat + 2
  double log_e_at_r_hat = 0.0;
  double log_e_at_r_hat_plus_2 = 0.0;
  Regime regime = Regime::sparse_search;
  std::optional<double> dense_diagnostic;  // closed-form r_hat
};

ConcentrationPrediction predicted_interval(std::uint32_t n, double p);

struct ExpectationRatio {
  double log_ratio;    // ln E(X_{r+alpha}) - ln E(X_r)
  double asymptotic;   // alpha ln^2 d
};
ExpectationRatio log_expectation_ratio(std::uint32_t n, double p,
                                       std::uint32_t r, std::int64_t alpha);

// ln f(s), f(s) = C(r,s) C(n-r,r-s)
//                 (1 - 2(1-p)^r + (1-p)^(2r-s))^(n-2r+s).
// Requires s <= r <= n/2 so the exponent stays nonnegative.
double log_variance_term(std::uint32_t n, double p, std::uint32_t r,
                         std::uint32_t s);

// Second-moment bound on P(X_r = 0):
//   clamp((C(n,r) sum_s f(s) - E(X_r)^2) / E(X_r)^2, 0, 1),
// the sum accumulated by log-sum-exp.
double chebyshev_nonexistence_bound(std::uint32_t n, double p,
                                    std::uint32_t r);

// exp(-t^2 / (4(n-b))), valid for b < n, t >= 0.
double talagrand_tail_product_bound(std::uint32_t n, double b, double t);

struct CrucialEdgeLaw {
  double p_star;  // r p (1-p)^(r-1) / (1 - (1-p)^r)
  double mu;      // (n-r) p_star
};
// Conditioned on {0..r-1} dominating, the number of outside vertices
// with exactly one neighbor inside is Binomial(n-r, p_star).
CrucialEdgeLaw crucial_edge_law(std::uint32_t n, double p, std::uint32_t r);

// (1 - p_del)^crucial_count.
double survival_probability(std::uint64_t crucial_count, double p_del);

// p'' = x / (n sqrt(p)); the result must land in [0,1].
double deletion_probability(std::uint32_t n, double p, double x);

}  // namespace domlab::analytics
