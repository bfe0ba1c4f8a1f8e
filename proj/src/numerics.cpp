#include "physlearn/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace physlearn {

namespace {

double simpson(double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa,
                        double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

// Regularised incomplete gamma Q(a, x) = Gamma(a, x)/Gamma(a).
double gamma_q(double a, double x) {
    if (x < 0.0 || a <= 0.0) throw std::domain_error("gamma_q: bad arguments");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) {
        // series for P(a, x)
        double term = 1.0 / a;
        double sum = term;
        double ap = a;
        for (int n = 0; n < 500; ++n) {
            ap += 1.0;
            term *= x / ap;
            sum += term;
            if (std::abs(term) < std::abs(sum) * 1e-15) break;
        }
        const double p = sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
        return 1.0 - p;
    }
    // continued fraction for Q(a, x)
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-15) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    if (a == b) return 0.0;
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const double whole = simpson(fa, fm, fb, b - a);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 60);
}

double trapezoid(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("trapezoid: bad grid");
    double s = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) s += 0.5 * (y[i] + y[i - 1]) * (x[i] - x[i - 1]);
    return s;
}

double bisect(const std::function<double(double)>& f, double a, double b, double tol) {
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0) throw std::invalid_argument("bisect: no sign change on bracket");
    while (b - a > tol) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if (fm == 0.0) return m;
        if (fa * fm < 0.0) {
            b = m;
            fb = fm;
        } else {
            a = m;
            fa = fm;
        }
    }
    return 0.5 * (a + b);
}

std::vector<double> Histogram::probabilities() const {
    std::vector<double> p(counts.size(), 0.0);
    if (n_total == 0) return p;
    for (std::size_t i = 0; i < counts.size(); ++i)
        p[i] = counts[i] / static_cast<double>(n_total);
    return p;
}

Histogram histogram(std::span<const double> samples, double lo, double hi, std::size_t n_bins) {
    if (!(hi > lo) || n_bins == 0) throw std::invalid_argument("histogram: bad range");
    Histogram h;
    h.lo = lo;
    h.hi = hi;
    h.counts.assign(n_bins, 0.0);
    h.n_total = samples.size();
    const double inv_w = static_cast<double>(n_bins) / (hi - lo);
    for (double x : samples) {
        if (x < lo || x >= hi) continue;
        auto b = static_cast<std::size_t>((x - lo) * inv_w);
        if (b >= n_bins) b = n_bins - 1;
        h.counts[b] += 1.0;
        ++h.n_inside;
    }
    return h;
}

double total_variation(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) throw std::invalid_argument("total_variation: size mismatch");
    double sp = 0.0;
    double sq = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        sp += p[i];
        sq += q[i];
    }
    if (sp <= 0.0 || sq <= 0.0) throw std::invalid_argument("total_variation: empty distribution");
    double d = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) d += std::abs(p[i] / sp - q[i] / sq);
    return 0.5 * d;
}

std::vector<double> binned_density(const std::function<double(double)>& density, double lo,
                                   double hi, std::size_t n_bins) {
    std::vector<double> mass(n_bins, 0.0);
    const double w = (hi - lo) / static_cast<double>(n_bins);
    double total = 0.0;
    for (std::size_t b = 0; b < n_bins; ++b) {
        const double a = lo + w * static_cast<double>(b);
        mass[b] = integrate(density, a, a + w, 1e-12);
        total += mass[b];
    }
    for (auto& m : mass) m /= total;
    return mass;
}

double mean(std::span<const double> xs) {
    if (xs.empty()) throw std::invalid_argument("mean: empty");
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

double variance(std::span<const double> xs) {
    if (xs.size() < 2) throw std::invalid_argument("variance: need >= 2 samples");
    const double m = mean(xs);
    double s = 0.0;
    for (double x : xs) s += (x - m) * (x - m);
    return s / static_cast<double>(xs.size() - 1);
}

double std_error_of_mean(std::span<const double> xs) {
    return std::sqrt(variance(xs) / static_cast<double>(xs.size()));
}

double median(std::vector<double> xs) {
    if (xs.empty()) throw std::invalid_argument("median: empty");
    std::sort(xs.begin(), xs.end());
    const std::size_t n = xs.size();
    return (n % 2 == 1) ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

double jackknife_stderr_mean(std::span<const double> gx) {
    const std::size_t n = gx.size();
    if (n < 2) throw std::invalid_argument("jackknife: need >= 2 samples");
    const double total = mean(gx) * static_cast<double>(n);
    double ss = 0.0;
    const double full = total / static_cast<double>(n);
    for (double g : gx) {
        const double loo = (total - g) / static_cast<double>(n - 1);
        ss += (loo - full) * (loo - full);
    }
    return std::sqrt(ss * static_cast<double>(n - 1) / static_cast<double>(n));
}

double regression_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("regression: bad data");
    const double mx = mean(x);
    const double my = mean(y);
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    return sxy / sxx;
}

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
    if (samples.empty()) throw std::invalid_argument("ks_statistic: empty");
    std::sort(samples.begin(), samples.end());
    const auto n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double c = cdf(samples[i]);
        d = std::max(d, std::abs(c - static_cast<double>(i) / n));
        d = std::max(d, std::abs(static_cast<double>(i + 1) / n - c));
    }
    return d;
}

double chi_squared_sf(double x, double k) {
    return gamma_q(0.5 * k, 0.5 * x);
}

double normal_cdf(double x) {
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

double rejection_sample(const std::function<double(double)>& density, double lo, double hi,
                        double density_max, RngStream& rng) {
    if (!(density_max > 0.0)) throw std::invalid_argument("rejection_sample: bad envelope");
    for (;;) {
        const double x = lo + (hi - lo) * rng.uniform();
        if (rng.uniform() * density_max < density(x)) return x;
    }
}

} // namespace physlearn
