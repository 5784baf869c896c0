#include "pdxfit/stats.hpp"

#include <gsl/gsl_cdf.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pdxfit::stats {

double mean(std::span<const double> x) {
  if (x.empty()) throw std::invalid_argument("mean of empty sample");
  double s = 0.0;
  for (double v : x) s += v;
  return s / static_cast<double>(x.size());
}

double sample_sd(std::span<const double> x) {
  if (x.size() < 2) throw std::invalid_argument("sd needs at least 2 values");
  const double m = mean(x);
  double ss = 0.0;
  for (double v : x) ss += (v - m) * (v - m);
  return std::sqrt(ss / static_cast<double>(x.size() - 1));
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double normal_log_pdf(double x, double mu, double sigma) {
  const double r = (x - mu) / sigma;
  return -0.5 * std::log(2.0 * M_PI) - std::log(sigma) - 0.5 * r * r;
}

double chi1sq_cdf(double x) {
  if (x <= 0.0) return 0.0;
  return std::erf(std::sqrt(0.5 * x));
}

double chi1sq_quantile(double alpha) {
  return gsl_cdf_chisq_Pinv(1.0 - alpha, 1.0);
}

double cantelli_threshold(double alpha) {
  return 1.0 + std::sqrt(2.0 * (1.0 - alpha) / alpha);
}

double ci_threshold_chi1sq(double alpha) {
  if (alpha == 0.05) return kChi1Sq95Delta;
  return chi1sq_quantile(alpha);
}

double ci_threshold_cantelli(double alpha) {
  if (alpha == 0.05) return kCantelli95Delta;
  return cantelli_threshold(alpha);
}

double t_two_tailed_p(double tstat, double df) {
  if (!std::isfinite(tstat)) return 0.0;
  return 2.0 * gsl_cdf_tdist_Q(std::fabs(tstat), df);
}

namespace {

// Kolmogorov distribution tail Q(lambda) = 2 sum_{k>=1} (-1)^{k-1} exp(-2 k^2 lambda^2)
double kolmogorov_q(double lambda) {
  if (lambda < 1e-3) return 1.0;
  double sum = 0.0;
  double sign = 1.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += sign * term;
    if (term < 1e-12) break;
    sign = -sign;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

}  // namespace

double ks_two_sample_p(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("ks test needs non-empty samples");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const std::size_t na = a.size(), nb = b.size();
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < na && j < nb) {
    const double v = std::min(a[i], b[j]);
    while (i < na && a[i] <= v) ++i;
    while (j < nb && b[j] <= v) ++j;
    const double fa = static_cast<double>(i) / static_cast<double>(na);
    const double fb = static_cast<double>(j) / static_cast<double>(nb);
    d = std::max(d, std::fabs(fa - fb));
  }
  const double ne = static_cast<double>(na) * static_cast<double>(nb) /
                    static_cast<double>(na + nb);
  const double lambda = (std::sqrt(ne) + 0.12 + 0.11 / std::sqrt(ne)) * d;
  return kolmogorov_q(lambda);
}

double quantile_sorted(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw std::invalid_argument("quantile of empty sample");
  if (p <= 0.0) return sorted.front();
  if (p >= 1.0) return sorted.back();
  const double h = p * static_cast<double>(sorted.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(std::floor(h));
  const double frac = h - static_cast<double>(lo);
  if (lo + 1 >= sorted.size()) return sorted.back();
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace pdxfit::stats
