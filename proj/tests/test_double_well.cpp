#include <catch2/catch_amalgamated.hpp>

#include "physlearn/double_well.hpp"
#include "physlearn/numerics.hpp"
#include "physlearn/parallel.hpp"
#include "physlearn/sde.hpp"

#include <cmath>

using namespace physlearn;
using namespace physlearn::doublewell;

TEST_CASE("deterministic fixed point holds forever", "[double_well]") {
    const DoubleWell well{0.0, 0.0};
    RngStream rng(1, 0);
    const double x_star = -1.0 / std::sqrt(2.0);
    auto traj = simulate(well, [](double) { return 0.0; }, x_star, 0.01, 20.0, rng);
    for (double x : traj.channel("x")) REQUIRE(x == Catch::Approx(x_star).margin(1e-12));
}

TEST_CASE("symmetric well splits time evenly", "[double_well][slow]") {
    const DoubleWell well{0.0, 0.05};
    const int n_paths = 64;
    std::vector<double> positive_fraction(n_paths);
    parallel_for(n_paths, [&](std::size_t i) {
        RngStream rng(52, i);
        StationarySampler init(well);
        const double x0 = init.draw(rng);
        double positive = 0.0;
        std::size_t count = 0;
        sde_run_scalar([&](double x, double) { return -potential_gradient(x, well.lambda); },
                       [&](double, double) { return std::sqrt(2.0 * well.D); }, x0, 0.01, 400.0,
                       rng, [&](std::size_t, double, double x) {
                           positive += x > 0.0 ? 1.0 : 0.0;
                           ++count;
                       });
        positive_fraction[i] = positive / static_cast<double>(count);
    });
    REQUIRE(mean(positive_fraction) == Catch::Approx(0.5).margin(0.05));
}

TEST_CASE("stationary density: symmetry, tilt, and normalisation", "[double_well]") {
    std::vector<double> grid;
    for (double x = -2.5; x <= 2.5 + 1e-12; x += 0.005) grid.push_back(x);

    const DoubleWell symmetric{0.0, 0.05};
    auto rho0 = stationary_density(symmetric, grid);
    REQUIRE(trapezoid(grid, rho0) == Catch::Approx(1.0).margin(1e-8));
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const std::size_t j = grid.size() - 1 - i;
        REQUIRE(rho0[i] == Catch::Approx(rho0[j]).margin(1e-9));
    }

    const DoubleWell tilted{0.3, 0.05};
    auto rho = stationary_density(tilted, grid);
    double left = 0.0;
    double right = 0.0;
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double mass = 0.5 * (rho[i] + rho[i - 1]) * (grid[i] - grid[i - 1]);
        (0.5 * (grid[i] + grid[i - 1]) < 0.0 ? left : right) += mass;
    }
    REQUIRE(right > left);
    REQUIRE(left > 0.0); // finite support in the wrong well

    // mirror symmetry under lambda -> -lambda
    const DoubleWell mirrored{-0.3, 0.05};
    auto rho_m = stationary_density(mirrored, grid);
    for (std::size_t i = 0; i < grid.size(); ++i)
        REQUIRE(rho[i] == Catch::Approx(rho_m[grid.size() - 1 - i]).margin(1e-9));

    REQUIRE_THROWS_AS(stationary_density(DoubleWell{0.0, 0.0}, grid), std::invalid_argument);
}

TEST_CASE("error probability matches long-run occupation", "[double_well][ensemble]") {
    const DoubleWell well{0.3, 0.05};
    // quadrature left-well mass
    std::vector<double> grid;
    for (double x = -2.5; x <= 2.5 + 1e-12; x += 0.002) grid.push_back(x);
    auto rho = stationary_density(well, grid);
    double left_mass = 0.0;
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (0.5 * (grid[i] + grid[i - 1]) < 0.0)
            left_mass += 0.5 * (rho[i] + rho[i - 1]) * (grid[i] - grid[i - 1]);

    const int n_paths = 300;
    std::vector<double> left_fraction(n_paths);
    parallel_for(n_paths, [&](std::size_t i) {
        RngStream rng(53, i);
        StationarySampler init(well);
        double left = 0.0;
        std::size_t count = 0;
        sde_run_scalar([&](double x, double) { return -potential_gradient(x, well.lambda); },
                       [&](double, double) { return std::sqrt(2.0 * well.D); }, init.draw(rng),
                       0.01, 100.0, rng, [&](std::size_t, double, double x) {
                           left += x < 0.0 ? 1.0 : 0.0;
                           ++count;
                       });
        left_fraction[i] = left / static_cast<double>(count);
    });
    REQUIRE(std::abs(mean(left_fraction) - left_mass) <
            3.0 * std_error_of_mean(left_fraction) + 0.002);
}

TEST_CASE("mean displacement versus bias", "[double_well]") {
    std::vector<double> lambdas = {-0.4, -0.2, -0.1, 0.0, 0.1, 0.2, 0.4};
    auto low_noise = mean_vs_bias(0.05, lambdas);
    auto high_noise = mean_vs_bias(0.5, lambdas);

    REQUIRE(low_noise[3] == Catch::Approx(0.0).margin(1e-9));
    for (std::size_t i = 1; i < lambdas.size(); ++i) {
        REQUIRE(low_noise[i] > low_noise[i - 1]);
        REQUIRE(high_noise[i] > high_noise[i - 1]);
    }
    // odd in lambda
    for (std::size_t i = 0; i < lambdas.size(); ++i)
        REQUIRE(low_noise[i] == Catch::Approx(-low_noise[lambdas.size() - 1 - i]).margin(1e-9));
    // low noise switches harder at the same moderate bias
    REQUIRE(low_noise[5] > high_noise[5]);
}

TEST_CASE("mean displacement matches a path ensemble", "[double_well][ensemble]") {
    const double lambda = 0.2;
    const double D = 0.05;
    std::vector<double> lambdas = {lambda};
    const double expected = mean_vs_bias(D, lambdas)[0];

    const DoubleWell well{lambda, D};
    const int n_paths = 400;
    std::vector<double> time_means(n_paths);
    parallel_for(n_paths, [&](std::size_t i) {
        RngStream rng(54, i);
        StationarySampler init(well);
        double acc = 0.0;
        std::size_t count = 0;
        sde_run_scalar([&](double x, double) { return -potential_gradient(x, well.lambda); },
                       [&](double, double) { return std::sqrt(2.0 * D); }, init.draw(rng), 0.01,
                       100.0, rng, [&](std::size_t, double, double x) {
                           acc += x;
                           ++count;
                       });
        time_means[i] = acc / static_cast<double>(count);
    });
    REQUIRE(std::abs(mean(time_means) - expected) < 3.0 * std_error_of_mean(time_means) + 0.005);
}

TEST_CASE("ramped bias drives the switch", "[double_well][ensemble]") {
    const double D = 0.05;
    const double t_end = 60.0;
    auto ramp = [t_end](double t) { return 0.5 * std::min(1.0, t / (0.5 * t_end)); };
    const int n_paths = 200;
    std::vector<double> switched(n_paths);
    parallel_for(n_paths, [&](std::size_t i) {
        RngStream rng(55, i);
        const DoubleWell well{0.0, D};
        const double xf = simulate_final(well, ramp, -1.0 / std::sqrt(2.0), 0.005, t_end, rng);
        switched[i] = xf > 0.0 ? 1.0 : 0.0;
    });
    REQUIRE(mean(switched) > 0.95);
}

TEST_CASE("kramers barrier", "[double_well]") {
    REQUIRE(kramers_barrier(0.0) == Catch::Approx(0.0).margin(1e-10));

    // E0(lambda) = V(x_l) - V(x_r) grows linearly near zero bias with slope
    // x_r - x_l = sqrt(2) (envelope theorem: dV(x*,lambda)/dlambda = -x*).
    const double e1 = kramers_barrier(0.02);
    const double e2 = kramers_barrier(0.04);
    const double exponent = std::log(e2 / e1) / std::log(2.0);
    REQUIRE(exponent == Catch::Approx(1.0).margin(0.1));
    REQUIRE(e1 / 0.02 == Catch::Approx(std::sqrt(2.0)).margin(0.01));

    // grid-search oracle at lambda = 0.1
    const double lambda = 0.1;
    double best_left = -1.0;
    double best_left_v = 1e300;
    double best_right = 1.0;
    double best_right_v = 1e300;
    for (double x = -1.5; x <= 1.5; x += 1e-6) {
        const double v = potential(x, lambda);
        if (x < 0.0 && v < best_left_v) {
            best_left_v = v;
            best_left = x;
        }
        if (x > 0.0 && v < best_right_v) {
            best_right_v = v;
            best_right = x;
        }
    }
    (void)best_left;
    (void)best_right;
    REQUIRE(kramers_barrier(lambda) == Catch::Approx(best_left_v - best_right_v).margin(1e-6));

    REQUIRE_THROWS_AS(kramers_barrier(0.9), std::domain_error);
}

TEST_CASE("boltzmann consistency of long runs", "[double_well][slow]") {
    const DoubleWell well{0.0, 0.05};
    const int n_paths = 100;
    const std::size_t steps_per_path = 10000;
    const double dt = 0.01;
    std::vector<std::vector<double>> samples(n_paths);
    parallel_for(n_paths, [&](std::size_t i) {
        RngStream rng(56, i);
        StationarySampler init(well);
        auto& out = samples[i];
        out.reserve(steps_per_path + 1);
        sde_run_scalar([&](double x, double) { return -potential_gradient(x, well.lambda); },
                       [&](double, double) { return std::sqrt(2.0 * well.D); }, init.draw(rng),
                       dt, dt * static_cast<double>(steps_per_path), rng,
                       [&](std::size_t, double, double x) { out.push_back(x); });
    });
    std::vector<double> all;
    all.reserve(n_paths * (steps_per_path + 1));
    for (const auto& s : samples) all.insert(all.end(), s.begin(), s.end());

    auto h = histogram(all, -1.6, 1.6, 20);
    auto model = binned_density(
        [&](double x) { return std::exp(-potential(x, well.lambda) / well.D); }, -1.6, 1.6, 20);
    REQUIRE(total_variation(h.probabilities(), model) < 0.02);
}
