#include "physlearn/observer.hpp"

#include "physlearn/sde.hpp"

#include <cmath>
#include <stdexcept>

namespace physlearn::observer {

std::array<double, 2> bayes_update(const std::array<double, 2>& prior, double x, double chi,
                                   double Delta) {
    if (!(Delta > 0.0)) throw std::invalid_argument("bayes_update: Delta must be > 0");
    const double sum = prior[0] + prior[1];
    if (!(std::abs(sum - 1.0) < 1e-9)) throw std::invalid_argument("bayes_update: prior must sum to 1");
    // likelihood ratio written against the common Gaussian factor
    const double l_minus = std::exp(-(x + chi) * (x + chi) / (2.0 * Delta));
    const double l_plus = std::exp(-(x - chi) * (x - chi) / (2.0 * Delta));
    const double z = l_minus * prior[0] + l_plus * prior[1];
    if (z <= 0.0) return prior; // both likelihoods underflow: keep the prior
    return {l_minus * prior[0] / z, l_plus * prior[1] / z};
}

std::pair<double, double> readout_stats(double p_plus, double chi, double Delta) {
    if (p_plus < 0.0 || p_plus > 1.0) throw std::invalid_argument("readout_stats: p_plus in [0,1]");
    const double mean = chi * (2.0 * p_plus - 1.0);
    const double variance = Delta + 4.0 * chi * chi * p_plus * (1.0 - p_plus);
    return {mean, variance};
}

namespace {

// Clamp into [-1+eps, 1-eps]; abort if the overshoot exceeds the tolerance.
double clamp_unit(double v, double t) {
    constexpr double tol = 1e-6;
    constexpr double eps = 1e-12;
    if (v > 1.0 + tol || v < -1.0 - tol)
        throw NumericalAbort("conditional mean escaped [-1,1]: dt too large", t, {v});
    if (v > 1.0 - eps) return 1.0 - eps;
    if (v < -1.0 + eps) return -1.0 + eps;
    return v;
}

} // namespace

Trajectory simulate_conditional(double mu, double nu, const ReadoutModel& model, double t_end,
                                double dt, RngStream& rng, const ConditionalOptions& opts) {
    const double big_gamma = model.measurement_strength();
    if (!(big_gamma > 0.0)) throw std::invalid_argument("simulate_conditional: Gamma must be > 0");
    const std::size_t n_steps = detail::step_count(dt, t_end);

    const double noise_n = std::sqrt(big_gamma / 2.0);
    const double noise_i = model.r * model.kappa * std::sqrt(2.0 / big_gamma);
    const double decay = model.decay == FilterDecay::quadratic ? model.r * model.r : model.r;

    Trajectory traj({"n_c", "I_oc"}, rng.tag());
    traj.reserve(n_steps + 1);
    double n_c = clamp_unit(opts.n_c0, 0.0);
    double i_oc = opts.i_oc0;
    double t = 0.0;
    traj.push_back(t, {n_c, i_oc});
    for (std::size_t k = 0; k < n_steps; ++k) {
        const double t_next = (k + 1 == n_steps) ? t_end : dt * static_cast<double>(k + 1);
        const double h = t_next - t;
        const double dw = opts.noise_on ? std::sqrt(h) * rng.normal() : 0.0;
        const double drift_n = 0.5 * (mu * (1.0 - n_c) - nu * (1.0 + n_c));
        const double one_minus_sq = 1.0 - n_c * n_c;
        const double n_next = n_c + drift_n * h - noise_n * one_minus_sq * dw;
        const double i_next = i_oc + (-decay * i_oc + model.r * model.kappa * n_c) * h +
                              noise_i * dw;
        n_c = clamp_unit(n_next, t_next);
        i_oc = i_next;
        t = t_next;
        traj.push_back(t, {n_c, i_oc});
    }
    return traj;
}

Trajectory simulate_dot_qpc(const DotQpcModel& model, double t_end, double dt, RngStream& rng,
                            double s0, bool noise_on) {
    if (model.Gamma_in < 0.0 || model.Gamma_out < 0.0)
        throw std::invalid_argument("simulate_dot_qpc: negative tunnelling rate");
    if (!(model.eta > 0.0 && model.eta <= 1.0))
        throw std::invalid_argument("simulate_dot_qpc: eta must be in (0, 1]");
    if (model.epsilon < 0.0 || model.epsilon > 1.0)
        throw std::invalid_argument("simulate_dot_qpc: epsilon must be in [0, 1]");
    const std::size_t n_steps = detail::step_count(dt, t_end);

    Trajectory traj({"s_c", "I_c"}, rng.tag());
    traj.reserve(n_steps + 1);
    double s = s0;
    double t = 0.0;
    const double sqrt_eta = std::sqrt(model.eta);
    traj.push_back(t, {s, model.eta * (1.0 - 2.0 * model.epsilon * s)});
    for (std::size_t k = 0; k < n_steps; ++k) {
        const double t_next = (k + 1 == n_steps) ? t_end : dt * static_cast<double>(k + 1);
        const double h = t_next - t;
        const double dw = noise_on ? std::sqrt(h) * rng.normal() : 0.0;
        const double drift = model.Gamma_in * (1.0 - s) - model.Gamma_out * s;
        double s_next = s + drift * h - 2.0 * model.chi_meas * s * (1.0 - s) * dw;
        // occupation lives in [0,1]; same clamp rule as the conditional mean
        constexpr double tol = 1e-6;
        constexpr double eps = 1e-12;
        if (s_next > 1.0 + tol || s_next < -tol)
            throw NumericalAbort("dot occupation escaped [0,1]: dt too large", t_next, {s_next});
        s_next = std::min(std::max(s_next, eps), 1.0 - eps);
        const double current = model.eta * (1.0 - 2.0 * model.epsilon * s) + sqrt_eta * dw / h;
        s = s_next;
        t = t_next;
        traj.push_back(t, {s, current});
    }
    return traj;
}

std::pair<double, double> dot_rate_preset(double gamma, double b, double c, double x) {
    if (!(gamma > 0.0)) throw std::invalid_argument("dot_rate_preset: gamma must be > 0");
    return {0.5 * gamma * (1.0 + std::tanh(b * x + c)), gamma};
}

} // namespace physlearn::observer
