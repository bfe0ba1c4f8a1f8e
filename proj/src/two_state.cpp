#include "physlearn/two_state.hpp"

#include "physlearn/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace physlearn::twostate {

RateSchedule::RateSchedule(Kind kind, double mu, double nu, double p0, double p1)
    : kind_(kind), mu_(mu), nu_(nu), p0_(p0), p1_(p1) {
    if (mu < 0.0 || nu < 0.0) throw std::invalid_argument("RateSchedule: negative base rate");
}

RateSchedule RateSchedule::constant(double mu, double nu) {
    return {Kind::constant, mu, nu, 0.0, 0.0};
}

RateSchedule RateSchedule::linear_ramp(double mu, double nu, double tau) {
    if (!(tau > 0.0)) throw std::invalid_argument("linear_ramp: tau must be > 0");
    return {Kind::linear_ramp, mu, nu, tau, 0.0};
}

RateSchedule RateSchedule::sigmoid(double mu, double nu, double t0, double slope) {
    if (!(slope > 0.0)) throw std::invalid_argument("sigmoid: slope must be > 0");
    return {Kind::sigmoid, mu, nu, t0, slope};
}

RateSchedule RateSchedule::step(double mu, double nu, double t0, double a) {
    if (a < -1.0) throw std::invalid_argument("step: amplitude below -1 gives negative rates");
    return {Kind::step, mu, nu, t0, a};
}

RateSchedule RateSchedule::dot_tanh(double gamma, double b, double c) {
    if (!(gamma > 0.0)) throw std::invalid_argument("dot_tanh: gamma must be > 0");
    return {Kind::dot_tanh, gamma, gamma, b, c};
}

double RateSchedule::swap_fraction(double t) const {
    switch (kind_) {
        case Kind::constant: return 0.0;
        case Kind::linear_ramp: return std::clamp(t / p0_, 0.0, 1.0);
        case Kind::sigmoid: return 1.0 / (1.0 + std::exp(-p1_ * (t - p0_)));
        default: return 0.0;
    }
}

std::pair<double, double> RateSchedule::rates(double t) const {
    switch (kind_) {
        case Kind::constant:
        case Kind::linear_ramp:
        case Kind::sigmoid: {
            const double f = swap_fraction(t);
            return {mu_ + f * (nu_ - mu_), nu_ - f * (nu_ - mu_)};
        }
        case Kind::step: {
            const double factor = t >= p0_ ? 1.0 + p1_ : 1.0;
            return {mu_ * factor, nu_ * factor};
        }
        case Kind::dot_tanh:
            return {0.5 * mu_ * (1.0 + std::tanh(p0_ * t + p1_)), nu_};
    }
    return {mu_, nu_};
}

double RateSchedule::total_rate_ceiling() const {
    switch (kind_) {
        case Kind::constant:
        case Kind::linear_ramp:
        case Kind::sigmoid:
            return mu_ + nu_; // the swap family preserves the sum
        case Kind::step:
            return (mu_ + nu_) * std::max(1.0, 1.0 + p1_);
        case Kind::dot_tanh:
            return 2.0 * nu_; // mu(t) <= gamma, nu = gamma
    }
    return mu_ + nu_;
}

std::pair<double, double> steady_state(double mu, double nu) {
    if (mu < 0.0 || nu < 0.0) throw std::invalid_argument("steady_state: negative rate");
    const double total = mu + nu;
    if (total <= 0.0) throw std::invalid_argument("steady_state: mu + nu must be > 0");
    return {nu / total, mu / total};
}

std::pair<double, double> ramp_propagate(double mu, double nu, double tau) {
    if (mu + nu <= 0.0) throw std::invalid_argument("ramp_propagate: mu + nu must be > 0");
    if (!(tau > 0.0)) throw std::invalid_argument("ramp_propagate: tau must be > 0");
    const double total = mu + nu;
    const double p_minus =
        mu / total + (nu - mu) / (tau * total * total) * (1.0 - std::exp(-total * tau));
    return {p_minus, 1.0 - p_minus};
}

JumpPath simulate_events(const RateSchedule& schedule, int n0, double t_end, RngStream& rng) {
    if (n0 != -1 && n0 != 1) throw std::invalid_argument("simulate_events: n0 must be +-1");
    JumpPath path;
    path.n0 = n0;
    path.n_end = n0;
    const double ceiling = schedule.total_rate_ceiling();
    if (ceiling <= 0.0) return path;
    double t = 0.0;
    int n = n0;
    for (;;) {
        t += rng.exponential(ceiling);
        if (t > t_end) break;
        const auto [mu_t, nu_t] = schedule.rates(t);
        const double total = mu_t + nu_t;
        if (total > ceiling * (1.0 + 1e-12))
            throw std::domain_error("simulate_events: schedule exceeds its rate ceiling");
        const double u = rng.uniform() * ceiling;
        if (u >= total) continue; // thinned-out proposal
        ++path.n_events;
        if (u < mu_t) {
            if (n == -1) { // upward flips only from -1
                n = +1;
                ++path.n_up_flips;
                path.flip_times.push_back(t);
            }
        } else {
            if (n == +1) {
                n = -1;
                ++path.n_down_flips;
                path.flip_times.push_back(t);
            }
        }
    }
    path.n_end = n;
    return path;
}

Trajectory simulate_path(const TwoStateSwitch& sw, const RateSchedule& schedule, double t_end,
                         RngStream& rng) {
    if (!(t_end > 0.0)) throw std::invalid_argument("simulate_path: t_end must be > 0");
    const JumpPath path = simulate_events(schedule, sw.n, t_end, rng);
    Trajectory traj({"n"}, rng.tag());
    traj.reserve(path.flip_times.size() + 2);
    double n = sw.n;
    traj.push_back(0.0, {n});
    for (double tf : path.flip_times) {
        n = -n;
        traj.push_back(tf, {n});
    }
    if (traj.times().back() < t_end) traj.push_back(t_end, {n});
    return traj;
}

SwapStatistics swap_statistics(double mu, double nu, double tau) {
    if (mu + nu <= 0.0) throw std::invalid_argument("swap_statistics: mu + nu must be > 0");
    if (!(tau > 0.0)) throw std::invalid_argument("swap_statistics: tau must be > 0");
    const double total = mu + nu;
    const double eta = std::exp(-total * tau);
    const double lag = 1.0 - (1.0 - eta) / (tau * total);
    const double skew = (nu - mu) / total;
    SwapStatistics s;
    s.pr_no_switch = eta;
    s.pr_up = mu / total * (1.0 - eta) + skew * lag;
    s.pr_down = nu / total * (1.0 - eta) - skew * lag;
    return s;
}

double mean_work(double mu, double nu, double E0) {
    if (mu + nu <= 0.0) throw std::invalid_argument("mean_work: mu + nu must be > 0");
    return E0 * (nu - mu) / (nu + mu);
}

double wait_time_survival(const std::function<double(double)>& rate_fn, double t) {
    if (t <= 0.0) return 1.0;
    const double hazard = integrate(rate_fn, 0.0, t, 1e-9);
    return std::exp(-hazard);
}

std::pair<double, double> thermal_rates(double beta, double E0, double gamma_total) {
    if (!(gamma_total > 0.0)) throw std::invalid_argument("thermal_rates: scale must be > 0");
    // mu/nu = e^{-beta E0}, mu + nu = gamma_total
    const double ratio = std::exp(-beta * E0);
    const double nu = gamma_total / (1.0 + ratio);
    return {gamma_total - nu, nu};
}

} // namespace physlearn::twostate
