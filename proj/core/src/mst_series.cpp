#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "lcrg/errors.hpp"
#include "lcrg/oracle.hpp"

namespace lcrg {

namespace {

constexpr std::size_t kExactMaxVertices = 20;
constexpr std::size_t kGroupedMaxValues = 4;

double exact_series(std::span<const double> d, double total) {
  const std::size_t n = d.size();
  if (n > kExactMaxVertices) {
    throw CapacityError("exact MST series enumerates subsets and needs n <= 20, got n = " +
                        std::to_string(n));
  }
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<double> product(subsets, 1.0);
  std::vector<double> sum(subsets, 0.0);
  std::vector<double> by_size(n + 1, 0.0);
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    const std::size_t low = static_cast<std::size_t>(__builtin_ctzll(mask));
    const std::size_t rest = mask & (mask - 1);
    product[mask] = product[rest] * d[low];
    sum[mask] = sum[rest] + d[low];
    by_size[static_cast<std::size_t>(__builtin_popcountll(mask))] +=
        product[mask] / (sum[mask] * sum[mask]);
  }
  double series = 0.0;
  double factor = 1.0;  // (k-1)! / D^k
  for (std::size_t k = 1; k <= n; ++k) {
    factor *= (k == 1 ? 1.0 : static_cast<double>(k - 1)) / total;
    series += factor * by_size[k];
  }
  return series;
}

double grouped_series(std::span<const double> d, double total) {
  std::map<double, std::size_t> counts;
  for (double v : d) ++counts[v];
  if (counts.size() > kGroupedMaxValues) {
    throw CapacityError("grouped MST series supports at most 4 distinct d values, got " +
                        std::to_string(counts.size()));
  }
  std::vector<double> values;
  std::vector<std::size_t> mult;
  for (const auto& [v, c] : counts) {
    values.push_back(v);
    mult.push_back(c);
  }
  const std::size_t r = values.size();
  const long double log_total = std::log(static_cast<long double>(total));

  // Odometer over (k_1, ..., k_r) with 0 <= k_i <= mult_i.
  std::vector<std::size_t> k(r, 0);
  long double series = 0.0L;
  while (true) {
    std::size_t i = 0;
    while (i < r && k[i] == mult[i]) k[i++] = 0;
    if (i == r) break;
    ++k[i];

    std::size_t size = 0;
    long double d_s = 0.0L;
    long double log_weight = 0.0L;
    for (std::size_t j = 0; j < r; ++j) {
      size += k[j];
      d_s += static_cast<long double>(k[j]) * values[j];
      log_weight += std::lgamma(static_cast<long double>(mult[j]) + 1.0L) -
                    std::lgamma(static_cast<long double>(k[j]) + 1.0L) -
                    std::lgamma(static_cast<long double>(mult[j] - k[j]) + 1.0L) +
                    static_cast<long double>(k[j]) * std::log(static_cast<long double>(values[j]));
    }
    const long double log_term = std::lgamma(static_cast<long double>(size)) -
                                 static_cast<long double>(size) * log_total + log_weight -
                                 2.0L * std::log(d_s);
    series += std::exp(log_term);
  }
  return static_cast<double>(series);
}

// With w_v(t) = n d_v e^{-t d_v} / D and E_k the k-th elementary symmetric
// mean of the w_v, the size-k term equals
//   c_k * int_0^inf t E_k(t) dt,  c_k = (k-1)! C(n,k) / n^k,
// because 1/d_S^2 = int_0^inf t e^{-t d_S} dt. The integral is evaluated by
// the trapezoid rule in u = ln t, which converges geometrically here.
double truncated_series(std::span<const double> d, double total) {
  const std::size_t n = d.size();
  const double nd = static_cast<double>(n);
  const double d_min = *std::min_element(d.begin(), d.end());
  const double u_lo = std::log(1e-9 / total);
  const double u_hi = std::log(80.0 / d_min);
  constexpr double kStep = 0.1;

  std::vector<long double> integral(n + 1, 0.0L);
  std::vector<long double> mean(n + 1);
  std::vector<long double> w(n);
  for (double u = u_lo; u <= u_hi; u += kStep) {
    const double t = std::exp(u);
    for (std::size_t v = 0; v < n; ++v) {
      w[v] = static_cast<long double>(nd * d[v] / total) * std::exp(-static_cast<long double>(t) * d[v]);
    }
    std::fill(mean.begin(), mean.end(), 0.0L);
    mean[0] = 1.0L;
    for (std::size_t m = 1; m <= n; ++m) {
      const long double inv = 1.0L / static_cast<long double>(m);
      for (std::size_t j = m; j >= 1; --j) {
        mean[j] = (static_cast<long double>(m - j) * mean[j] +
                   static_cast<long double>(j) * w[m - 1] * mean[j - 1]) * inv;
      }
    }
    const long double weight = static_cast<long double>(t) * t;
    for (std::size_t k = 1; k <= n; ++k) integral[k] += weight * mean[k];
  }

  long double series = 0.0L;
  long double coeff = 1.0L;  // c_k
  int small_run = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) {
      const long double km1 = static_cast<long double>(k - 1);
      coeff *= km1 / static_cast<long double>(k) * (1.0L - km1 / static_cast<long double>(nd));
    }
    const long double term = coeff * integral[k] * kStep;
    series += term;
    small_run = (term < 1e-12L * series) ? small_run + 1 : 0;
    if (small_run == 3) break;
  }
  return static_cast<double>(series);
}

}  // namespace

std::size_t distinct_weight_count(const DecomposableWeights& weights) {
  std::vector<double> v(weights.values().begin(), weights.values().end());
  std::sort(v.begin(), v.end());
  return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
}

double mst_series(const DecomposableWeights& weights, SeriesMode mode) {
  const auto d = weights.values();
  switch (mode) {
    case SeriesMode::kExact:
      return exact_series(d, weights.total());
    case SeriesMode::kGrouped:
      return grouped_series(d, weights.total());
    case SeriesMode::kTruncated:
      return truncated_series(d, weights.total());
  }
  throw DomainError("unknown series mode");
}

}  // namespace lcrg
