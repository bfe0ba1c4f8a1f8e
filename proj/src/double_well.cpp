#include "physlearn/double_well.hpp"

#include "physlearn/numerics.hpp"
#include "physlearn/sde.hpp"

#include <cmath>
#include <stdexcept>

namespace physlearn::doublewell {

double potential(double x, double lambda) {
    return x * x * (x * x - 1.0) - lambda * x;
}

double potential_gradient(double x, double lambda) {
    return 4.0 * x * x * x - 2.0 * x - lambda;
}

double saddle_node_bias() {
    // V''(x) = 0 at x = +-1/sqrt(6); the bias that makes that point a root
    // of V' is the saddle-node value.
    const double xc = 1.0 / std::sqrt(6.0);
    return std::abs(4.0 * xc * xc * xc - 2.0 * xc);
}

namespace {

// Global minimum of V on [lo, hi]; coarse scan refined by golden-section.
double min_potential(double lambda, double lo, double hi) {
    const int n = 400;
    double best_x = lo;
    double best_v = potential(lo, lambda);
    for (int i = 1; i <= n; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) / n;
        const double v = potential(x, lambda);
        if (v < best_v) {
            best_v = v;
            best_x = x;
        }
    }
    double a = std::max(lo, best_x - (hi - lo) / n);
    double b = std::min(hi, best_x + (hi - lo) / n);
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    while (b - a > 1e-12) {
        const double x1 = b - phi * (b - a);
        const double x2 = a + phi * (b - a);
        if (potential(x1, lambda) < potential(x2, lambda))
            b = x2;
        else
            a = x1;
    }
    return potential(0.5 * (a + b), lambda);
}

} // namespace

Trajectory simulate(const DoubleWell& well, const std::function<double(double)>& bias_schedule,
                    double x0, double dt, double t_end, RngStream& rng) {
    const double noise = std::sqrt(2.0 * well.D);
    return sde_integrate_scalar(
        [&](double x, double t) { return -potential_gradient(x, bias_schedule(t)); },
        [noise](double, double) { return noise; }, x0, dt, t_end, rng, "x");
}

double simulate_final(const DoubleWell& well, const std::function<double(double)>& bias_schedule,
                      double x0, double dt, double t_end, RngStream& rng) {
    const double noise = std::sqrt(2.0 * well.D);
    double x_final = x0;
    sde_run_scalar([&](double x, double t) { return -potential_gradient(x, bias_schedule(t)); },
                   [noise](double, double) { return noise; }, x0, dt, t_end, rng,
                   [&](std::size_t, double, double x) { x_final = x; });
    return x_final;
}

std::vector<double> stationary_density(const DoubleWell& well, std::span<const double> grid) {
    if (!(well.D > 0.0))
        throw std::invalid_argument("stationary_density: D must be > 0 (point mass otherwise)");
    if (grid.size() < 2) throw std::invalid_argument("stationary_density: grid too small");
    const double v_ref = min_potential(well.lambda, grid.front(), grid.back());
    std::vector<double> density(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        density[i] = std::exp(-(potential(grid[i], well.lambda) - v_ref) / well.D);
    const double z = trapezoid(grid, density);
    for (auto& d : density) d /= z;
    return density;
}

double stationary_density_at(const DoubleWell& well, double x, double lo, double hi) {
    if (!(well.D > 0.0)) throw std::invalid_argument("stationary_density_at: D must be > 0");
    const double v_ref = min_potential(well.lambda, lo, hi);
    auto weight = [&](double y) { return std::exp(-(potential(y, well.lambda) - v_ref) / well.D); };
    const double z = integrate(weight, lo, hi, 1e-13);
    return weight(x) / z;
}

std::vector<double> mean_vs_bias(double D, std::span<const double> lambda_grid) {
    if (!(D > 0.0)) throw std::invalid_argument("mean_vs_bias: D must be > 0");
    std::vector<double> means(lambda_grid.size());
    const double lo = -2.5;
    const double hi = 2.5;
    for (std::size_t i = 0; i < lambda_grid.size(); ++i) {
        const double lambda = lambda_grid[i];
        const double v_ref = min_potential(lambda, lo, hi);
        auto weight = [&](double x) { return std::exp(-(potential(x, lambda) - v_ref) / D); };
        const double z = integrate(weight, lo, hi, 1e-13);
        const double first = integrate([&](double x) { return x * weight(x); }, lo, hi, 1e-13);
        means[i] = first / z;
    }
    return means;
}

StableRoots stable_fixed_points(double lambda) {
    if (std::abs(lambda) >= saddle_node_bias())
        throw std::domain_error("no bistability: |lambda| at or beyond the saddle-node value");
    // The stable roots bracket the inflection points +-1/sqrt(6).
    const double xc = 1.0 / std::sqrt(6.0);
    auto grad = [lambda](double x) { return potential_gradient(x, lambda); };
    StableRoots roots{};
    roots.left = bisect(grad, -2.0, -xc, 1e-12);
    roots.right = bisect(grad, xc, 2.0, 1e-12);
    return roots;
}

double kramers_barrier(double lambda) {
    const StableRoots roots = stable_fixed_points(lambda);
    return potential(roots.left, lambda) - potential(roots.right, lambda);
}

StationarySampler::StationarySampler(const DoubleWell& well, double lo, double hi)
    : well_(well), lo_(lo), hi_(hi), v_min_(min_potential(well.lambda, lo, hi)) {
    if (!(well.D > 0.0)) throw std::invalid_argument("StationarySampler: D must be > 0");
}

double StationarySampler::draw(RngStream& rng) const {
    // exp(-(V - v_min)/D) <= 1 on [lo, hi] by construction of v_min.
    for (;;) {
        const double x = lo_ + (hi_ - lo_) * rng.uniform();
        const double w = std::exp(-(potential(x, well_.lambda) - v_min_) / well_.D);
        if (rng.uniform() < w) return x;
    }
}

} // namespace physlearn::doublewell
