#include <catch2/catch_amalgamated.hpp>

#include "physlearn/numerics.hpp"
#include "physlearn/parallel.hpp"
#include "physlearn/rng.hpp"
#include "physlearn/sde.hpp"
#include "physlearn/trajectory.hpp"

#include <cmath>
#include <numbers>

using namespace physlearn;

TEST_CASE("rng streams are reproducible and stream-independent", "[rng]") {
    RngStream a(42, 7);
    RngStream b(42, 7);
    for (int i = 0; i < 1000; ++i) REQUIRE(a.next_u64() == b.next_u64());

    // lag-0 cross correlation of Wiener increments across streams
    const int n = 20000;
    RngStream s0(42, 0);
    RngStream s1(42, 1);
    double acc = 0.0;
    for (int i = 0; i < n; ++i) acc += s0.normal() * s1.normal();
    REQUIRE(std::abs(acc / n) < 3.0 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("rng uniform and normal moments", "[rng]") {
    RngStream rng(1, 0);
    const int n = 200000;
    double su = 0.0;
    double sn = 0.0;
    double sn2 = 0.0;
    for (int i = 0; i < n; ++i) {
        su += rng.uniform();
        const double z = rng.normal();
        sn += z;
        sn2 += z * z;
    }
    REQUIRE(su / n == Catch::Approx(0.5).margin(0.005));
    REQUIRE(sn / n == Catch::Approx(0.0).margin(0.01));
    REQUIRE(sn2 / n == Catch::Approx(1.0).margin(0.02));
}

TEST_CASE("trajectory invariants", "[trajectory]") {
    Trajectory traj({"a", "b"}, StreamTag{3, 4});
    traj.push_back(0.0, {1.0, 2.0});
    traj.push_back(0.5, {3.0, 4.0});
    REQUIRE_THROWS_AS(traj.push_back(0.5, {0.0, 0.0}), std::invalid_argument);
    REQUIRE_THROWS_AS(traj.push_back(1.0, {0.0}), std::invalid_argument);
    REQUIRE(traj.channel("b")[1] == 4.0);
    REQUIRE_THROWS_AS(traj.channel("zzz"), std::out_of_range);
    REQUIRE(traj.value_before("a", 0.49) == 1.0);
    REQUIRE(traj.value_before("a", 0.5) == 3.0);
    REQUIRE(traj.seed().root_seed == 3);
}

TEST_CASE("sde: zero drift and diffusion keeps the state constant", "[sde]") {
    RngStream rng(11, 0);
    auto traj = sde_integrate_scalar([](double, double) { return 0.0; },
                                     [](double, double) { return 0.0; }, 3.0, 0.1, 2.0, rng);
    REQUIRE(traj.size() == 21);
    for (double x : traj.channel("x")) REQUIRE(x == 3.0);
}

TEST_CASE("sde: exponential decay matches the exact ODE solution", "[sde]") {
    RngStream rng(11, 1);
    const double dt = 1e-3;
    auto traj = sde_integrate_scalar([](double x, double) { return -x; },
                                     [](double, double) { return 0.0; }, 1.0, dt, 5.0, rng);
    REQUIRE(traj.times().back() == Catch::Approx(5.0));
    REQUIRE(std::abs(traj.channel("x").back() - std::exp(-5.0)) < 2.0 * dt);
}

TEST_CASE("sde: point count is ceil(t_end/dt)+1 with exact final time", "[sde]") {
    RngStream rng(11, 2);
    auto traj = sde_integrate_scalar([](double, double) { return 1.0; },
                                     [](double, double) { return 0.0; }, 0.0, 0.3, 1.0, rng);
    REQUIRE(traj.size() == 5); // ceil(1/0.3) = 4 steps
    REQUIRE(traj.times().back() == 1.0);
    REQUIRE(traj.channel("x").back() == Catch::Approx(1.0));
}

TEST_CASE("sde: Wiener variance grows as t", "[sde][ensemble]") {
    const int n_paths = 10000;
    std::vector<double> finals(n_paths);
    parallel_for(n_paths, [&](std::size_t i) {
        RngStream rng(123, i);
        double last = 0.0;
        sde_run_scalar([](double, double) { return 0.0; }, [](double, double) { return 1.0; },
                       0.0, 0.01, 1.0, rng, [&](std::size_t, double, double x) { last = x; });
        finals[i] = last;
    });
    REQUIRE(variance(finals) == Catch::Approx(1.0).epsilon(0.05));
}

TEST_CASE("sde: weak order one on the OU mean", "[sde]") {
    // With additive noise the Euler ensemble mean is the deterministic Euler
    // solution, so the bias can be measured without sampling error.
    auto mean_bias = [](double dt) {
        RngStream rng(5, 0);
        auto traj = sde_integrate_scalar([](double x, double) { return -x; },
                                         [](double, double) { return 0.0; }, 1.0, dt, 1.0, rng);
        return std::abs(traj.channel("x").back() - std::exp(-1.0));
    };
    const double ratio = mean_bias(0.02) / mean_bias(0.01);
    REQUIRE(ratio == Catch::Approx(2.0).margin(0.2));
}

TEST_CASE("sde: non-finite drift aborts with diagnostics", "[sde]") {
    RngStream rng(9, 0);
    try {
        auto traj = sde_integrate_scalar(
            [](double x, double t) { return t > 0.4 ? std::numeric_limits<double>::quiet_NaN() : -x; },
            [](double, double) { return 0.0; }, 1.0, 0.1, 1.0, rng);
        FAIL("expected NumericalAbort");
    } catch (const NumericalAbort& abort) {
        REQUIRE(abort.time() >= 0.4);
        REQUIRE(abort.state().size() == 1);
    }
}

TEST_CASE("jump_sample: zero rate never fires", "[jump]") {
    RngStream rng(21, 0);
    auto t = jump_sample([](double) { return 0.0; }, 0.0, 100.0, 0.0, rng);
    REQUIRE_FALSE(t.has_value());
}

TEST_CASE("jump_sample: constant-rate survival is exponential (KS 1%)", "[jump]") {
    const double nu = 0.7;
    const int n = 100000;
    std::vector<double> events;
    events.reserve(n);
    RngStream rng(22, 0);
    int censored = 0;
    const double horizon = 60.0;
    for (int i = 0; i < n; ++i) {
        auto t = jump_sample([nu](double) { return nu; }, 0.0, horizon, nu, rng);
        if (t)
            events.push_back(*t);
        else
            ++censored;
    }
    REQUIRE(censored < 5); // e^{-0.7*60} ~ 6e-19
    const double d = ks_statistic(std::move(events),
                                  [nu](double t) { return 1.0 - std::exp(-nu * t); });
    REQUIRE(d < 0.01);
}

TEST_CASE("jump_sample: step-increased rate kinks the survival at t=5", "[jump]") {
    // rate 0.1 before t0=5, 1.1 after: survival drops sharply past the kink.
    auto rate = [](double t) { return t < 5.0 ? 0.1 : 1.1; };
    const int n = 50000;
    RngStream rng(23, 0);
    int survive_5 = 0;
    int survive_7 = 0;
    for (int i = 0; i < n; ++i) {
        auto t = jump_sample(rate, 0.0, 7.0, 1.1, rng);
        const double event = t.value_or(8.0);
        if (event > 5.0) ++survive_5;
        if (event > 7.0) ++survive_7;
    }
    const double s5 = static_cast<double>(survive_5) / n;
    const double s7 = static_cast<double>(survive_7) / n;
    REQUIRE(s5 == Catch::Approx(std::exp(-0.5)).margin(0.01));
    REQUIRE(s7 == Catch::Approx(std::exp(-0.5 - 2.2)).margin(0.005));
}

TEST_CASE("jump_sample: exceeding the ceiling aborts", "[jump]") {
    RngStream rng(24, 0);
    REQUIRE_THROWS_AS(jump_sample([](double) { return 2.0; }, 0.0, 10.0, 1.0, rng),
                      std::domain_error);
}

TEST_CASE("numerics: quadrature, bisection, chi-squared tail", "[numerics]") {
    REQUIRE(integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi) ==
            Catch::Approx(2.0).epsilon(1e-10));
    REQUIRE(bisect([](double x) { return x * x - 2.0; }, 0.0, 2.0) ==
            Catch::Approx(std::sqrt(2.0)).margin(1e-11));
    // chi-squared with 2 dof: SF(x) = e^{-x/2}
    REQUIRE(chi_squared_sf(3.0, 2.0) == Catch::Approx(std::exp(-1.5)).epsilon(1e-10));
    REQUIRE(normal_cdf(0.0) == Catch::Approx(0.5));
}

TEST_CASE("numerics: histogram and total variation", "[numerics]") {
    std::vector<double> samples;
    RngStream rng(31, 0);
    for (int i = 0; i < 200000; ++i) samples.push_back(rng.normal());
    auto h = histogram(samples, -4.0, 4.0, 40);
    auto model = binned_density([](double x) { return std::exp(-0.5 * x * x); }, -4.0, 4.0, 40);
    REQUIRE(total_variation(h.probabilities(), model) < 0.01);
}

TEST_CASE("numerics: jackknife matches the plain standard error for a mean", "[numerics]") {
    std::vector<double> xs;
    RngStream rng(32, 0);
    for (int i = 0; i < 500; ++i) xs.push_back(rng.normal());
    REQUIRE(jackknife_stderr_mean(xs) == Catch::Approx(std_error_of_mean(xs)).epsilon(1e-10));
}

TEST_CASE("parallel_for is bit-identical to serial execution", "[parallel]") {
    const int n = 64;
    std::vector<double> serial(n);
    std::vector<double> parallel(n);
    for (int i = 0; i < n; ++i) {
        RngStream rng(77, static_cast<std::uint64_t>(i));
        serial[i] = rng.normal() + rng.uniform();
    }
    parallel_for(n, [&](std::size_t i) {
        RngStream rng(77, i);
        parallel[i] = rng.normal() + rng.uniform();
    });
    REQUIRE(serial == parallel);
}
