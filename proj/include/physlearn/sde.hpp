#pragma once

#include "physlearn/rng.hpp"
#include "physlearn/trajectory.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace physlearn {

/// Raised when an integrator encounters a non-finite drift/diffusion value or
/// state; carries the offending time and state for diagnostics.
class NumericalAbort : public std::runtime_error {
  public:
    NumericalAbort(std::string what, double t, std::vector<double> state)
        : std::runtime_error(std::move(what)), t_(t), state_(std::move(state)) {}

    [[nodiscard]] double time() const { return t_; }
    [[nodiscard]] const std::vector<double>& state() const { return state_; }

  private:
    double t_;
    std::vector<double> state_;
};

namespace detail {

inline std::size_t step_count(double dt, double t_end) {
    if (!(dt > 0.0)) throw std::invalid_argument("sde_integrate: dt must be > 0");
    if (!(t_end >= dt)) throw std::invalid_argument("sde_integrate: t_end must be >= dt");
    return static_cast<std::size_t>(std::ceil(t_end / dt - 1e-12));
}

} // namespace detail

/// Fixed-step Euler-Maruyama under the Ito convention (drift and noise
/// amplitude evaluated at the left endpoint of each step). The state has N
/// components driven by M independent Wiener processes through the N x M
/// noise matrix returned by `diffusion`. The final step is shortened so the
/// last sample lands exactly on t_end; the result has ceil(t_end/dt)+1 points.
///
/// `observe(k, t, state)` is called for every stored point, k = 0..n_steps.
template <int N, int M, class Drift, class Diffusion, class Observer>
void sde_run(Drift&& drift, Diffusion&& diffusion, Eigen::Matrix<double, N, 1> x0,
             double dt, double t_end, RngStream& rng, Observer&& observe) {
    using Vec = Eigen::Matrix<double, N, 1>;
    using Noise = Eigen::Matrix<double, M, 1>;

    const std::size_t n_steps = detail::step_count(dt, t_end);
    Vec x = x0;
    double t = 0.0;
    observe(std::size_t{0}, t, static_cast<const Vec&>(x));
    for (std::size_t k = 0; k < n_steps; ++k) {
        const double t_next = (k + 1 == n_steps) ? t_end : dt * static_cast<double>(k + 1);
        const double h = t_next - t;
        const Vec a = drift(static_cast<const Vec&>(x), t);
        const Eigen::Matrix<double, N, M> b = diffusion(static_cast<const Vec&>(x), t);
        if (!a.allFinite() || !b.allFinite()) {
            std::vector<double> st(x.data(), x.data() + x.size());
            throw NumericalAbort("non-finite drift/diffusion", t, std::move(st));
        }
        Noise dw;
        const double sqrt_h = std::sqrt(h);
        for (int j = 0; j < M; ++j) dw[j] = sqrt_h * rng.normal();
        x += a * h + b * dw;
        if (!x.allFinite()) {
            std::vector<double> st(x.data(), x.data() + x.size());
            throw NumericalAbort("non-finite state", t_next, std::move(st));
        }
        t = t_next;
        observe(k + 1, t, static_cast<const Vec&>(x));
    }
}

template <int N, int M, class Drift, class Diffusion>
[[nodiscard]] Trajectory sde_integrate(Drift&& drift, Diffusion&& diffusion,
                                       Eigen::Matrix<double, N, 1> x0, double dt, double t_end,
                                       RngStream& rng, std::vector<std::string> channel_names) {
    using Vec = Eigen::Matrix<double, N, 1>;
    Trajectory traj(std::move(channel_names), rng.tag());
    traj.reserve(detail::step_count(dt, t_end) + 1);
    sde_run<N, M>(drift, diffusion, x0, dt, t_end, rng,
                  [&](std::size_t, double t, const Vec& x) {
                      traj.push_back(t, std::span<const double>(x.data(), static_cast<std::size_t>(x.size())));
                  });
    return traj;
}

/// Scalar convenience wrapper: dx = drift(x,t) dt + diffusion(x,t) dW.
template <class Drift, class Diffusion>
[[nodiscard]] Trajectory sde_integrate_scalar(Drift&& drift, Diffusion&& diffusion, double x0,
                                              double dt, double t_end, RngStream& rng,
                                              std::string channel_name = "x") {
    using Vec = Eigen::Matrix<double, 1, 1>;
    auto a = [&](const Vec& x, double t) { return Vec{drift(x[0], t)}; };
    auto b = [&](const Vec& x, double t) { return Vec{diffusion(x[0], t)}; };
    return sde_integrate<1, 1>(a, b, Vec{x0}, dt, t_end, rng, {std::move(channel_name)});
}

/// Scalar loop without storage; observe(k, t, x) sees every point.
template <class Drift, class Diffusion, class Observer>
void sde_run_scalar(Drift&& drift, Diffusion&& diffusion, double x0, double dt, double t_end,
                    RngStream& rng, Observer&& observe) {
    using Vec = Eigen::Matrix<double, 1, 1>;
    auto a = [&](const Vec& x, double t) { return Vec{drift(x[0], t)}; };
    auto b = [&](const Vec& x, double t) { return Vec{diffusion(x[0], t)}; };
    sde_run<1, 1>(a, b, Vec{x0}, dt, t_end, rng,
                  [&](std::size_t k, double t, const Vec& x) { observe(k, t, x[0]); });
}

/// First event time of an inhomogeneous Poisson process with intensity
/// rate(t) on [t0, t_max], sampled exactly by thinning against a caller
/// declared ceiling. Returns nullopt if no event occurs before t_max.
/// Throws std::domain_error if rate(t) exceeds the ceiling (thinning invalid)
/// or is negative.
template <class RateFn>
[[nodiscard]] std::optional<double> jump_sample(RateFn&& rate, double t0, double t_max,
                                                double rate_ceiling, RngStream& rng) {
    if (rate_ceiling < 0.0) throw std::domain_error("jump_sample: negative rate ceiling");
    if (rate_ceiling == 0.0) return std::nullopt;
    double t = t0;
    for (;;) {
        t += rng.exponential(rate_ceiling);
        if (t > t_max) return std::nullopt;
        const double lam = rate(t);
        if (lam < 0.0) throw std::domain_error("jump_sample: negative rate");
        if (lam > rate_ceiling * (1.0 + 1e-12))
            throw std::domain_error("jump_sample: rate exceeds declared ceiling");
        if (rng.uniform() * rate_ceiling < lam) return t;
    }
}

} // namespace physlearn
