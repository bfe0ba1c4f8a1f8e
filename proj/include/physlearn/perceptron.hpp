#pragma once

#include "physlearn/rng.hpp"

#include <Eigen/Dense>

#include <ostream>
#include <vector>

namespace physlearn::perceptron {

/// One training point: binary input components and a binary label.
struct Datum {
    Eigen::VectorXd xi; // components in {-1, +1}
    int label = 1;      // n_T in {-1, +1}
};

/// The NOT gate data set {(-1, +1), (+1, -1)}.
[[nodiscard]] std::vector<Datum> not_data();

/// The XOR data set on {-1,+1}^2.
[[nodiscard]] std::vector<Datum> xor_data();

struct Layer {
    Eigen::MatrixXd weights; // (n_inputs, n_units); column j feeds unit j
    Eigen::VectorXd biases;  // (n_units)
};

/// Layered stochastic perceptron. beta sets the sharpness of the switching
/// probability, eta the feedback scale.
struct PerceptronNet {
    std::vector<Layer> layers;
    double beta = 1.0;
    double eta = 1.0;

    [[nodiscard]] static PerceptronNet single(double w0, double b0, double beta, double eta);
    /// 2 -> 2 -> 1 network.
    [[nodiscard]] static PerceptronNet xor_shape(const Eigen::Matrix2d& wh,
                                                 const Eigen::Vector2d& bh,
                                                 const Eigen::Vector2d& wo, double b_out,
                                                 double beta, double eta);
};

/// Probability that a unit switches ON: p1 = 1/(1 + e^{-beta A}) with
/// A = xi . w + b.
[[nodiscard]] double fire_probability(const Eigen::VectorXd& weights, double bias,
                                      const Eigen::VectorXd& xi, double beta);

/// Mean output nbar = 2 p1 - 1 = tanh(beta A / 2) of a unit.
[[nodiscard]] double analytic_nbar(const Eigen::VectorXd& weights, double bias,
                                   const Eigen::VectorXd& xi, double beta);

/// Analytic average error (1 - n_T nbar_out)/2 of a single-layer net.
[[nodiscard]] double analytic_error_single(const PerceptronNet& net, const Datum& datum);

/// Mean-field analytic average error of the 2->2->1 net: hidden means feed
/// the output activation deterministically.
[[nodiscard]] double analytic_error_xor_meanfield(const PerceptronNet& net, const Datum& datum);

/// Sampled estimates for one epoch at frozen weights.
struct EpochEstimate {
    std::vector<double> nbar_units; // per unit, layer by layer; last is the output
    double nbar_out = 0.0;
    double eps_bar = 0.0;          // (1 - n_T nbar_out)/2
    double stderr_p_out = 0.0;     // binomial standard error of the output p1
};

/// Samples every unit n_samples times. A single-layer net is one Bernoulli
/// unit; the 2->2->1 net runs per-trial forward passes in which the sampled
/// binary hidden outputs drive the output unit.
[[nodiscard]] EpochEstimate epoch_estimate(const PerceptronNet& net, const Datum& datum,
                                           int n_samples, RngStream& rng);

/// Feedback increments Delta w = eta n_T beta (1 - nbar^2) xi / 4 and the
/// matching bias increment (bias input fixed at 1), applied in place.
void single_layer_update(PerceptronNet& net, const Datum& datum, double nbar_out);

struct XorForward {
    Eigen::Vector2d nbar_h{0.0, 0.0};
    double nbar_o = 0.0;
};

/// Epoch averages of the sampled hidden and output units.
[[nodiscard]] XorForward xor_forward(const PerceptronNet& net, const Eigen::VectorXd& xi,
                                     int n_samples, RngStream& rng);

struct XorIncrements {
    Eigen::Matrix2d d_wh = Eigen::Matrix2d::Zero();
    Eigen::Vector2d d_bh{0.0, 0.0};
    Eigen::Vector2d d_wo{0.0, 0.0};
    double d_bo = 0.0;
};

/// Feedback increments of the two-layer net from epoch averages:
///   d wo_j   = eta n_T beta (1 - nbar_o^2) nbar_hj / 4
///   d wh_ij  = eta n_T beta (1 - nbar_o^2) wo_j (1 - nbar_hj^2) xi_i / 8
/// with bias increments from the same rules at input 1.
[[nodiscard]] XorIncrements xor_backward(const PerceptronNet& net, const Eigen::VectorXd& xi,
                                         int label, const Eigen::Vector2d& nbar_h, double nbar_o);

void apply_increments(PerceptronNet& net, const XorIncrements& inc);

/// Per-epoch log of a training run.
struct TrainingRecord {
    std::vector<std::string> weight_names;
    struct Row {
        int epoch = 0;
        int datum_index = 0;
        double eps_bar = 0.0;
        double nbar_out = 0.0;
        std::vector<double> weights; // snapshot after the update
    };
    std::vector<Row> rows;

    /// CSV: epoch, datum, eps_bar, nbar_out, then the weight columns.
    void write_csv(std::ostream& os) const;
    /// Moving average of eps_bar over the trailing `window` epochs, one value
    /// per epoch.
    [[nodiscard]] std::vector<double> eps_moving_average(std::size_t window) const;
};

struct NotTrainingConfig {
    double beta = 1.0;
    double eta = 1.0;
    int n_samples = 200;
    int epochs = 500;
    double w0 = 0.01;
    double b0 = 1.0;
};

/// Trains the single-unit NOT gate: per epoch draw one datum uniformly,
/// estimate, update.
[[nodiscard]] TrainingRecord train_not(const NotTrainingConfig& config, RngStream& rng);

struct XorTrainingConfig {
    double beta = 1.0;
    double eta = 1.0;
    int n_samples = 200;
    int epochs = 3000;
    Eigen::Matrix2d wh0 = (Eigen::Matrix2d() << -5.0, 8.0, -2.0, 3.0).finished();
    Eigen::Vector2d bh0{-1.0, -3.0};
    Eigen::Vector2d wo0{-2.0, -3.0};
    double bo0 = -1.0;
};

[[nodiscard]] TrainingRecord train_xor(const XorTrainingConfig& config, RngStream& rng);

} // namespace physlearn::perceptron
