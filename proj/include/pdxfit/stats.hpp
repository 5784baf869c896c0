#pragma once

#include <span>
#include <vector>

namespace pdxfit::stats {

// Paper-facing analysis constants: the 95% chi-square(1) quantile rounded to
// two decimals and the matching Cantelli-adjusted threshold.
inline constexpr double kChi1Sq95Delta = 3.84;
inline constexpr double kCantelli95Delta = 7.16;

double mean(std::span<const double> x);
double sample_sd(std::span<const double> x);  // n-1 denominator

double normal_cdf(double z);
double normal_log_pdf(double x, double mu, double sigma);

double chi1sq_cdf(double x);
// (1-alpha) quantile of chi-square with 1 df.
double chi1sq_quantile(double alpha);
// Cantelli-based threshold 1 + sqrt(2(1-alpha)/alpha).
double cantelli_threshold(double alpha);
// Profile-CI threshold for the named kind; returns the paper constants at
// alpha=0.05 and the formula values elsewhere.
double ci_threshold_chi1sq(double alpha);
double ci_threshold_cantelli(double alpha);

// Two-tailed p-value of a t statistic with df degrees of freedom.
double t_two_tailed_p(double tstat, double df);

// Asymptotic two-sample Kolmogorov-Smirnov p-value.
double ks_two_sample_p(std::vector<double> a, std::vector<double> b);

// Type-7 (linear interpolation) quantile of a sorted sample, p in [0,1].
double quantile_sorted(std::span<const double> sorted, double p);

}  // namespace pdxfit::stats
