#pragma once

#include "physlearn/rng.hpp"
#include "physlearn/trajectory.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace physlearn::twostate {

/// Two-state Markov activation switch. `mu` is the rate of -1 -> +1
/// transitions, `nu` the rate of +1 -> -1; the state energies are +-E0/2.
struct TwoStateSwitch {
    double mu = 1.0;
    double nu = 1.0;
    double E0 = 0.0;
    int n = -1; // current state, in {-1, +1}
};

/// Time dependence of the transition-rate pair built on base rates (mu, nu).
///
/// The swap family (constant / linear_ramp / sigmoid) interpolates
///     mu(t) = mu + f(t) (nu - mu),   nu(t) = nu - f(t) (nu - mu),
/// with f in [0, 1], so the rates are exactly swapped once f reaches 1 and
/// mu(t) + nu(t) is constant. The step kind scales both base rates by
/// (1 + a) from t0 on. The dot_tanh kind is the tunnelling-device response
///     mu(t) = gamma (1 + tanh(b t + c)) / 2,   nu(t) = gamma.
class RateSchedule {
  public:
    static RateSchedule constant(double mu, double nu);
    /// f(t) = t/tau, clamped to 1 after tau so the swap persists.
    static RateSchedule linear_ramp(double mu, double nu, double tau);
    static RateSchedule sigmoid(double mu, double nu, double t0, double slope);
    static RateSchedule step(double mu, double nu, double t0, double a);
    static RateSchedule dot_tanh(double gamma, double b, double c);

    /// (mu(t), nu(t)); both are >= 0 for all t.
    [[nodiscard]] std::pair<double, double> rates(double t) const;
    [[nodiscard]] double mu_at(double t) const { return rates(t).first; }
    [[nodiscard]] double nu_at(double t) const { return rates(t).second; }

    /// Upper bound on mu(t) + nu(t) over all t; the thinning ceiling.
    [[nodiscard]] double total_rate_ceiling() const;

  private:
    enum class Kind { constant, linear_ramp, sigmoid, step, dot_tanh };
    RateSchedule(Kind kind, double mu, double nu, double p0, double p1);

    [[nodiscard]] double swap_fraction(double t) const;

    Kind kind_;
    double mu_;
    double nu_;
    double p0_; // tau / t0 / b per kind
    double p1_; // slope / a / c per kind
};

/// Steady-state occupation (p_minus, p_plus) = (nu, mu) / (mu + nu) from
/// detailed balance. Throws std::invalid_argument when mu + nu == 0.
[[nodiscard]] std::pair<double, double> steady_state(double mu, double nu);

/// Occupation (p_minus, p_plus) at the end of the linear rate ramp of
/// duration tau, starting from the steady state of (mu, nu):
///   p_minus(tau) = mu/(mu+nu) + (nu-mu)/(tau (mu+nu)^2) (1 - e^{-(mu+nu)tau}).
[[nodiscard]] std::pair<double, double> ramp_propagate(double mu, double nu, double tau);

/// One exact jump path: flip times of n(t) plus the total number of driving
/// Poisson events (a driving event in an ineligible state leaves n
/// unchanged but still counts).
struct JumpPath {
    int n0 = -1;
    int n_end = -1;
    std::vector<double> flip_times;   // strictly increasing
    std::size_t n_events = 0;         // driving events, flips included
    std::size_t n_up_flips = 0;       // realized -1 -> +1 flips
    std::size_t n_down_flips = 0;
};

/// Exact event-driven simulation (thinning on mu(t)+nu(t); no time
/// discretisation). Upward flips occur only from n=-1 at rate mu(t),
/// downward only from n=+1 at rate nu(t).
[[nodiscard]] JumpPath simulate_events(const RateSchedule& schedule, int n0, double t_end,
                                       RngStream& rng);

/// Piecewise-constant trajectory of n(t) on [0, t_end]; samples at 0, each
/// flip time, and t_end.
[[nodiscard]] Trajectory simulate_path(const TwoStateSwitch& sw, const RateSchedule& schedule,
                                       double t_end, RngStream& rng);

struct SwapStatistics {
    double pr_no_switch = 0.0; // eta = e^{-(mu+nu) tau}
    double pr_up = 0.0;        // Pr(s = +1)
    double pr_down = 0.0;      // Pr(s = -1)
};

/// Closed-form swap statistics of the linear ramp of duration tau:
///   eta      = e^{-(mu+nu) tau}
///   Pr(s=+1) = mu/(mu+nu) (1-eta) + (nu-mu)/(mu+nu) (1 - (1-eta)/(tau(mu+nu)))
///   Pr(s=-1) = nu/(mu+nu) (1-eta) - (nu-mu)/(mu+nu) (1 - (1-eta)/(tau(mu+nu)))
/// The raw formula values are returned unnormalised. Their Monte Carlo
/// counterparts are: no driving event at all (s=0), and at least one driving
/// event with final state +-1 (s=+-1); the three sum to one.
[[nodiscard]] SwapStatistics swap_statistics(double mu, double nu, double tau);

/// Asymptotic mean work of the full rate swap, E0 (nu - mu)/(nu + mu); equals
/// the change in mean energy once (mu+nu) tau >> 1.
[[nodiscard]] double mean_work(double mu, double nu, double E0);

/// Survival probability exp(-int_0^t rate) of the wait-time problem,
/// evaluated by adaptive quadrature (relative error < 1e-6).
[[nodiscard]] double wait_time_survival(const std::function<double(double)>& rate_fn, double t);

/// Base rates with the thermal ratio mu/nu = e^{-beta E0} at total rate scale
/// mu + nu = gamma_total.
[[nodiscard]] std::pair<double, double> thermal_rates(double beta, double E0,
                                                      double gamma_total = 1.0);

} // namespace physlearn::twostate
