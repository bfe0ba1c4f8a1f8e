#pragma once

#include "physlearn/rng.hpp"
#include "physlearn/trajectory.hpp"

#include <array>
#include <utility>

namespace physlearn::observer {

/// Decay of the current filter: the displayed observed-process equation uses
/// -r^2 I dt, while an exponential kernel with response rate r implies
/// -r I dt. The displayed form is the default.
enum class FilterDecay { quadratic, linear };

/// Gaussian readout of a two-state switch under continuous weak measurement.
/// Gamma = 2 kappa^2 / gamma is the measurement strength.
struct ReadoutModel {
    double chi = 1.0;    // peak separation, units of the readout variable
    double Delta = 1.0;  // readout variance per sample
    double kappa = 40.0; // drive-coupling rate
    double gamma = 128.0; // measurement rate
    double r = 20.0;     // filter response rate
    FilterDecay decay = FilterDecay::quadratic;

    [[nodiscard]] double measurement_strength() const { return 2.0 * kappa * kappa / gamma; }
};

/// Tunnelling dot monitored by a point-contact channel.
struct DotQpcModel {
    double Gamma_in = 1.0;
    double Gamma_out = 1.0;
    double chi_meas = 1.0; // dot-channel coupling strength
    double eta = 1.0;      // efficiency, in (0, 1]
    double epsilon = 1.0;  // channel constriction factor, in [0, 1]
};

/// One Bayes update of the two-state occupation (p_minus, p_plus) from an
/// observed value x with Gaussian likelihoods centred at -chi and +chi.
[[nodiscard]] std::array<double, 2> bayes_update(const std::array<double, 2>& prior, double x,
                                                 double chi, double Delta);

/// Mean and variance of the observed variable given P(n=+1) = p_plus:
/// mean = chi (2 p_plus - 1), variance = Delta + 4 chi^2 p_plus (1 - p_plus).
[[nodiscard]] std::pair<double, double> readout_stats(double p_plus, double chi, double Delta);

struct ConditionalOptions {
    double n_c0 = 0.0;  // initial conditional mean, in [-1, 1]
    double i_oc0 = 0.0; // initial filtered current
    bool noise_on = true;
};

/// Conditional mean of the switch and the filtered observed current under
/// continuous measurement; both driven by the same Wiener increment:
///   d nbar_c = [mu (1-nbar_c) - nu (1+nbar_c)]/2 dt - sqrt(G/2)(1-nbar_c^2) dW
///   d I_oc   = -(decay) I_oc dt + r kappa nbar_c dt + r kappa sqrt(2/G) dW.
/// The conditional mean is clamped to +-(1 - 1e-12) after each step; an
/// excursion beyond 1e-6 outside [-1,1] aborts (dt too large).
[[nodiscard]] Trajectory simulate_conditional(double mu, double nu, const ReadoutModel& model,
                                              double t_end, double dt, RngStream& rng,
                                              const ConditionalOptions& opts = {});

/// Conditional dot occupation s_c in [0,1] and point-contact current:
///   d s_c = [G_in (1 - s_c) - G_out s_c] dt - 2 chi s_c (1 - s_c) dW
///   I_c dt = eta (1 - 2 eps s_c) dt + sqrt(eta) dW   (same dW).
/// The recorded current channel holds the per-step average I_c over dt.
[[nodiscard]] Trajectory simulate_dot_qpc(const DotQpcModel& model, double t_end, double dt,
                                          RngStream& rng, double s0 = 0.0, bool noise_on = true);

/// Rate pair of the tunnelling-device activation switch at input x:
/// mu = gamma (1 + tanh(b x + c))/2, nu = gamma.
[[nodiscard]] std::pair<double, double> dot_rate_preset(double gamma, double b, double c,
                                                        double x);

} // namespace physlearn::observer
