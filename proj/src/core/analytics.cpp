#include "core/analytics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace domlab::analytics {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Very-dense classification q >= n, tested as n(1-p) <= 1. A relative
// slack absorbs float round-off so that p = 1 - 1/n lands on the
// very-dense side as intended.
bool very_dense(std::uint32_t n, double p) {
  return static_cast<double>(n) * (1.0 - p) <= 1.0 + 1e-9;
}

void require_p_in_01(double p) {
  if (!(p >= 0.0 && p < 1.0)) {
    throw std::invalid_argument(
        "edge probability must lie in [0,1); q = 1/(1-p) is undefined at p=1");
  }
}

void require_open_p(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("edge probability must lie in (0,1)");
  }
}

}  // namespace

double ln_binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return -kInf;
  return std::lgamma(static_cast<double>(n) + 1.0) -
         std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

double log1mexp(double t) {
  if (t > 0.0) throw std::invalid_argument("log1mexp needs t <= 0");
  if (t == 0.0) return -kInf;
  constexpr double kLn2 = 0.6931471805599453;
  if (t < -kLn2) return std::log1p(-std::exp(t));
  return std::log(-std::expm1(t));
}

double log_expected_dominating_sets(std::uint32_t n, double p,
                                    std::uint32_t r) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  if (r > n) throw std::invalid_argument("r must satisfy 0 <= r <= n");
  require_p_in_01(p);
  if (r == n) return 0.0;  // E(X_n) = 1, the empty exponent
  if (r == 0) return -kInf;
  const double t = static_cast<double>(r) * std::log1p(-p);  // ln (1-p)^r
  return ln_binomial(n, r) +
         static_cast<double>(n - r) * log1mexp(t);
}

std::uint32_t critical_r_hat(std::uint32_t n, double p) {
  require_p_in_01(p);
  const double d = static_cast<double>(n) * p;
  if (!(d > 1.0)) {
    throw std::invalid_argument(
        "critical size needs d = n p > 1 (threshold 1/d must be below "
        "E(X_n) = 1); got d = " +
        std::to_string(d));
  }
  const double threshold = -std::log(d);
  for (std::uint32_t r = 1; r <= n; ++r) {
    if (log_expected_dominating_sets(n, p, r) >= threshold) return r - 1;
  }
  throw std::logic_error("threshold search failed to terminate");
}

double dense_r_hat(std::uint32_t n, double p) {
  require_open_p(p);
  if (n < 3) throw std::invalid_argument("dense closed form needs n >= 3");
  const double ln_q = -std::log1p(-p);
  if (static_cast<double>(n) * (1.0 - p) < 1.0 - 1e-9) {
    throw std::invalid_argument(
        "very dense regime (q > n); the closed form does not apply");
  }
  if (ln_q < 1.0) {
    throw std::invalid_argument(
        "dense closed form needs q >= e; use the threshold search instead");
  }
  const double ln_n = std::log(static_cast<double>(n));
  return (ln_n + std::log(ln_q) - 2.0 * std::log(ln_n)) / ln_q;
}

const char* to_string(Regime r) {
  switch (r) {
    case Regime::sparse_search:
      return "sparse_search";
    case Regime::dense_closed_form:
      return "dense_closed_form";
    case Regime::very_dense:
      return "very_dense";
  }
  return "unknown";
}

ConcentrationPrediction predicted_interval(std::uint32_t n, double p) {
  if (n < 3) throw std::invalid_argument("prediction needs n >= 3");
  require_open_p(p);
  ConcentrationPrediction out;
  if (very_dense(n, p)) {
    out.regime = Regime::very_dense;
    out.r_hat = 0;
  } else {
    out.r_hat = critical_r_hat(n, p);
    const double ln_q = -std::log1p(-p);
    out.regime = ln_q > 1.0 ? Regime::dense_closed_form : Regime::sparse_search;
    if (out.regime == Regime::dense_closed_form) {
      out.dense_diagnostic = dense_r_hat(n, p);
    }
  }
  out.interval_lo = out.r_hat + 1;
  out.interval_hi = out.r_hat + 2;
  out.log_e_at_r_hat = log_expected_dominating_sets(n, p, out.r_hat);
  out.log_e_at_r_hat_plus_2 =
      log_expected_dominating_sets(n, p, out.r_hat + 2);
  return out;
}

ExpectationRatio log_expectation_ratio(std::uint32_t n, double p,
                                       std::uint32_t r, std::int64_t alpha) {
  const std::int64_t top = static_cast<std::int64_t>(r) + alpha;
  if (top < 0 || top > static_cast<std::int64_t>(n)) {
    throw std::invalid_argument("r + alpha must lie in [0, n]");
  }
  const double lo = log_expected_dominating_sets(n, p, r);
  const double hi =
      log_expected_dominating_sets(n, p, static_cast<std::uint32_t>(top));
  if (std::isinf(lo) && std::isinf(hi)) {
    throw std::invalid_argument(
        "both expectations vanish; the ratio is undefined");
  }
  const double ln_d = std::log(static_cast<double>(n) * p);
  return {hi - lo, static_cast<double>(alpha) * ln_d * ln_d};
}

double log_variance_term(std::uint32_t n, double p, std::uint32_t r,
                         std::uint32_t s) {
  require_p_in_01(p);
  if (s > r) throw std::invalid_argument("s must satisfy 0 <= s <= r");
  if (2ull * r > n) {
    throw std::invalid_argument(
        "variance terms need r <= n/2 so the exponent n-2r+s stays "
        "nonnegative");
  }
  const double lq = std::log1p(-p);
  const double a = std::exp(static_cast<double>(r) * lq);           // (1-p)^r
  const double b = std::exp(static_cast<double>(2ull * r - s) * lq);  // (1-p)^(2r-s)
  const double exponent = static_cast<double>(n) - 2.0 * r + s;
  return ln_binomial(r, s) + ln_binomial(n - r, r - s) +
         exponent * std::log1p(b - 2.0 * a);
}

double chebyshev_nonexistence_bound(std::uint32_t n, double p,
                                    std::uint32_t r) {
  require_open_p(p);
  if (r == 0 || 2ull * r > n) {
    throw std::invalid_argument("bound needs 1 <= r <= n/2");
  }
  const double log_e = log_expected_dominating_sets(n, p, r);
  if (std::isinf(log_e)) {
    throw std::invalid_argument("E(X_r) vanishes; the bound is undefined");
  }
  // log-sum-exp over s of ln f(s).
  std::vector<double> terms;
  terms.reserve(r + 1);
  double max_term = -kInf;
  for (std::uint32_t s = 0; s <= r; ++s) {
    const double t = log_variance_term(n, p, r, s);
    terms.push_back(t);
    if (t > max_term) max_term = t;
  }
  double acc = 0.0;
  for (double t : terms) acc += std::exp(t - max_term);
  const double log_sum = ln_binomial(n, r) + max_term + std::log(acc);
  const double ratio = std::exp(log_sum - 2.0 * log_e) - 1.0;
  if (!(ratio > 0.0)) return 0.0;
  return ratio < 1.0 ? ratio : 1.0;
}

double talagrand_tail_product_bound(std::uint32_t n, double b, double t) {
  if (!(b < static_cast<double>(n))) {
    throw std::invalid_argument(
        "bound needs b < n (certificate size n-b must be positive)");
  }
  if (!(t >= 0.0)) throw std::invalid_argument("t must be nonnegative");
  return std::exp(-t * t / (4.0 * (static_cast<double>(n) - b)));
}

CrucialEdgeLaw crucial_edge_law(std::uint32_t n, double p, std::uint32_t r) {
  require_open_p(p);
  if (r < 1 || r > n) {
    throw std::invalid_argument(
        "crucial-edge law needs 1 <= r <= n (conditioning on an r-set "
        "dominating)");
  }
  const double lq = std::log1p(-p);
  const double ln_num =
      std::log(static_cast<double>(r)) + std::log(p) +
      static_cast<double>(r - 1) * lq;
  const double ln_den = log1mexp(static_cast<double>(r) * lq);
  const double p_star = std::exp(ln_num - ln_den);
  return {p_star, static_cast<double>(n - r) * p_star};
}

double survival_probability(std::uint64_t crucial_count, double p_del) {
  if (!(p_del >= 0.0 && p_del <= 1.0)) {
    throw std::invalid_argument("deletion probability must lie in [0,1]");
  }
  if (crucial_count == 0) return 1.0;
  return std::exp(static_cast<double>(crucial_count) * std::log1p(-p_del));
}

double deletion_probability(std::uint32_t n, double p, double x) {
  const double result = x / (static_cast<double>(n) * std::sqrt(p));
  if (!(result >= 0.0 && result <= 1.0)) {
    throw std::invalid_argument(
        "p'' = x/(n sqrt(p)) = " + std::to_string(result) +
        " falls outside [0,1]");
  }
  return result;
}

}  // namespace domlab::analytics
