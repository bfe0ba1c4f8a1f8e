#include "physlearn/trajectory.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace physlearn {

Trajectory::Trajectory(std::vector<std::string> channel_names, StreamTag seed)
    : names_(std::move(channel_names)), channels_(names_.size()), seed_(seed) {
    if (names_.empty()) throw std::invalid_argument("trajectory needs at least one channel");
}

void Trajectory::reserve(std::size_t n_points) {
    times_.reserve(n_points);
    for (auto& c : channels_) c.reserve(n_points);
}

void Trajectory::push_back(double t, std::span<const double> values) {
    if (values.size() != channels_.size())
        throw std::invalid_argument("trajectory sample has wrong channel count");
    if (!times_.empty() && t <= times_.back())
        throw std::invalid_argument("trajectory times must be strictly increasing");
    times_.push_back(t);
    for (std::size_t i = 0; i < channels_.size(); ++i) channels_[i].push_back(values[i]);
}

void Trajectory::push_back(double t, std::initializer_list<double> values) {
    push_back(t, std::span<const double>(values.begin(), values.size()));
}

const std::vector<double>& Trajectory::channel(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return channels_[i];
    throw std::out_of_range("no channel named '" + std::string(name) + "'");
}

const std::vector<double>& Trajectory::channel(std::size_t index) const {
    return channels_.at(index);
}

double Trajectory::value_before(std::string_view name, double t) const {
    const auto& c = channel(name);
    if (times_.empty()) throw std::out_of_range("empty trajectory");
    auto it = std::upper_bound(times_.begin(), times_.end(), t);
    if (it == times_.begin()) return c.front();
    return c[static_cast<std::size_t>(it - times_.begin()) - 1];
}

void Trajectory::write_csv(std::ostream& os) const {
    os << "t";
    for (const auto& n : names_) os << "," << n;
    os << "\n";
    char buf[40];
    for (std::size_t k = 0; k < times_.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%.17g", times_[k]);
        os << buf;
        for (const auto& c : channels_) {
            std::snprintf(buf, sizeof buf, "%.17g", c[k]);
            os << "," << buf;
        }
        os << "\n";
    }
}

Trajectory slice(const Trajectory& traj, double t_begin, double t_end) {
    Trajectory out(traj.channel_names(), traj.seed());
    const auto& ts = traj.times();
    std::vector<double> row(traj.n_channels());
    for (std::size_t k = 0; k < ts.size(); ++k) {
        if (ts[k] < t_begin || ts[k] > t_end) continue;
        for (std::size_t i = 0; i < traj.n_channels(); ++i) row[i] = traj.channel(i)[k];
        out.push_back(ts[k], row);
    }
    return out;
}

} // namespace physlearn
