#pragma once

#include "physlearn/rng.hpp"

#include <functional>
#include <span>
#include <vector>

namespace physlearn {

/// Adaptive Simpson quadrature of f over [a, b] to the given absolute
/// tolerance.
[[nodiscard]] double integrate(const std::function<double(double)>& f, double a, double b,
                               double tol = 1e-10);

/// Composite trapezoid rule on a (not necessarily uniform) grid.
[[nodiscard]] double trapezoid(std::span<const double> x, std::span<const double> y);

/// Root of f on [a, b] by bisection; requires a sign change.
[[nodiscard]] double bisect(const std::function<double(double)>& f, double a, double b,
                            double tol = 1e-12);

struct Histogram {
    double lo = 0.0;
    double hi = 0.0;
    std::vector<double> counts;      // per bin
    std::size_t n_inside = 0;
    std::size_t n_total = 0;

    [[nodiscard]] double bin_width() const { return (hi - lo) / static_cast<double>(counts.size()); }
    /// Bin probabilities normalised by the total sample count (out-of-range
    /// samples count toward the total but fall in no bin).
    [[nodiscard]] std::vector<double> probabilities() const;
};

[[nodiscard]] Histogram histogram(std::span<const double> samples, double lo, double hi,
                                  std::size_t n_bins);

/// Total-variation distance (1/2 L1) between two discrete distributions of
/// equal length. Inputs need not be normalised; they are normalised first.
[[nodiscard]] double total_variation(std::span<const double> p, std::span<const double> q);

/// Bin probabilities of a density on the histogram's grid by Simpson-in-bin
/// quadrature, normalised over the histogram range.
[[nodiscard]] std::vector<double> binned_density(const std::function<double(double)>& density,
                                                 double lo, double hi, std::size_t n_bins);

double mean(std::span<const double> xs);
double variance(std::span<const double> xs);   // unbiased (n-1)
double std_error_of_mean(std::span<const double> xs);
double median(std::vector<double> xs);         // by copy; xs is sorted internally

/// Delete-one jackknife standard error of mean(g(x)) for precomputed g(x_i).
[[nodiscard]] double jackknife_stderr_mean(std::span<const double> gx);

/// Least-squares slope of y against x.
[[nodiscard]] double regression_slope(std::span<const double> x, std::span<const double> y);

/// Kolmogorov-Smirnov statistic of samples against a CDF.
[[nodiscard]] double ks_statistic(std::vector<double> samples,
                                  const std::function<double(double)>& cdf);

/// Upper tail P(X > x) of the chi-squared distribution with k dof.
[[nodiscard]] double chi_squared_sf(double x, double k);

[[nodiscard]] double normal_cdf(double x);

/// Draws from an unnormalised density on [lo, hi] by rejection against a flat
/// envelope; `density_max` must bound the density on the interval.
[[nodiscard]] double rejection_sample(const std::function<double(double)>& density, double lo,
                                      double hi, double density_max, RngStream& rng);

} // namespace physlearn
