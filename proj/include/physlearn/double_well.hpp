#pragma once

#include "physlearn/rng.hpp"
#include "physlearn/trajectory.hpp"

#include <functional>
#include <span>
#include <vector>

namespace physlearn::doublewell {

/// Overdamped particle in the quartic potential
///   V(x) = x^2 (x^2 - 1) - lambda x
/// with dynamics dx = -V'(x) dt + sqrt(2 D) dW, so the stationary density is
/// proportional to exp(-V(x)/D).
struct DoubleWell {
    double lambda = 0.0; // bias force
    double D = 0.05;     // diffusion constant (temperature scale)
};

[[nodiscard]] double potential(double x, double lambda);
[[nodiscard]] double potential_gradient(double x, double lambda);

/// Largest |lambda| with two stable fixed points (the saddle-node bias).
[[nodiscard]] double saddle_node_bias();

/// Trajectory of x(t) under a time-dependent bias lambda(t).
[[nodiscard]] Trajectory simulate(const DoubleWell& well,
                                  const std::function<double(double)>& bias_schedule, double x0,
                                  double dt, double t_end, RngStream& rng);

/// Final x of a trajectory without storing intermediate samples.
[[nodiscard]] double simulate_final(const DoubleWell& well,
                                    const std::function<double(double)>& bias_schedule, double x0,
                                    double dt, double t_end, RngStream& rng);

/// Normalised stationary density exp(-V/D) evaluated on the grid. Requires
/// D > 0.
[[nodiscard]] std::vector<double> stationary_density(const DoubleWell& well,
                                                     std::span<const double> grid);

/// Density value (normalised over [lo, hi] by quadrature) at one point.
[[nodiscard]] double stationary_density_at(const DoubleWell& well, double x, double lo = -2.5,
                                           double hi = 2.5);

/// Steady-state mean displacement <x> for each bias in lambda_grid.
[[nodiscard]] std::vector<double> mean_vs_bias(double D, std::span<const double> lambda_grid);

/// Both stable roots of V'(x) = 0 (left < 0 < right). Throws
/// std::domain_error outside the bistable bias range.
struct StableRoots {
    double left;
    double right;
};
[[nodiscard]] StableRoots stable_fixed_points(double lambda);

/// Energy splitting E0 = V(x_left) - V(x_right) between the two stable
/// fixed points.
[[nodiscard]] double kramers_barrier(double lambda);

/// Exact draws from the stationary density on [lo, hi] by rejection against
/// a flat envelope anchored at the potential minimum (precomputed once).
class StationarySampler {
  public:
    explicit StationarySampler(const DoubleWell& well, double lo = -2.5, double hi = 2.5);
    [[nodiscard]] double draw(RngStream& rng) const;

  private:
    DoubleWell well_;
    double lo_;
    double hi_;
    double v_min_;
};

} // namespace physlearn::doublewell
