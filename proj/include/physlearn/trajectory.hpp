#pragma once

#include "physlearn/rng.hpp"

#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace physlearn {

/// Time series of one or more named channels sampled on a common, strictly
/// increasing time grid, together with the stream that produced it.
class Trajectory {
  public:
    Trajectory(std::vector<std::string> channel_names, StreamTag seed);

    void reserve(std::size_t n_points);

    /// Appends one sample; t must exceed the current last time.
    void push_back(double t, std::span<const double> values);
    void push_back(double t, std::initializer_list<double> values);

    [[nodiscard]] std::size_t size() const { return times_.size(); }
    [[nodiscard]] std::size_t n_channels() const { return names_.size(); }
    [[nodiscard]] const std::vector<double>& times() const { return times_; }
    [[nodiscard]] const std::vector<std::string>& channel_names() const { return names_; }
    [[nodiscard]] StreamTag seed() const { return seed_; }

    /// Throws std::out_of_range for an unknown channel name.
    [[nodiscard]] const std::vector<double>& channel(std::string_view name) const;
    [[nodiscard]] const std::vector<double>& channel(std::size_t index) const;

    /// Value of a piecewise-constant channel at time t (last sample at or
    /// before t; the first sample for t before the start).
    [[nodiscard]] double value_before(std::string_view name, double t) const;

    /// CSV with a one-line header; floats at 17 significant digits.
    void write_csv(std::ostream& os) const;

  private:
    std::vector<std::string> names_;
    std::vector<double> times_;
    std::vector<std::vector<double>> channels_;
    StreamTag seed_;
};

/// Sub-range of a trajectory with times in [t_begin, t_end].
[[nodiscard]] Trajectory slice(const Trajectory& traj, double t_begin, double t_end);

} // namespace physlearn
