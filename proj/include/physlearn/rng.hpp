#pragma once

#include <array>
#include <cstdint>
#include <cstddef>

namespace physlearn {

/// Identifies the random stream that produced a result. (root_seed, stream_id)
/// fully determines the sample sequence, so results are reproducible and
/// independent of execution order.
struct StreamTag {
    std::uint64_t root_seed = 0;
    std::uint64_t stream_id = 0;
};

/// Counter-seeded xoshiro256++ stream. Streams with the same (root_seed,
/// stream_id) generate identical sequences; distinct stream ids are mixed
/// through splitmix64 and behave as statistically independent generators.
class RngStream {
  public:
    RngStream() : RngStream(0, 0) {}
    RngStream(std::uint64_t root_seed, std::uint64_t stream_id);
    explicit RngStream(StreamTag tag) : RngStream(tag.root_seed, tag.stream_id) {}

    [[nodiscard]] StreamTag tag() const { return tag_; }

    std::uint64_t next_u64();

    /// Uniform on [0, 1) with 53-bit resolution.
    double uniform();

    /// Uniform on [0, n).
    std::size_t uniform_index(std::size_t n);

    bool bernoulli(double p);

    /// Standard normal via Box-Muller (second value cached).
    double normal();

    /// Exponential with the given rate (rate > 0).
    double exponential(double rate);

  private:
    std::array<std::uint64_t, 4> state_{};
    StreamTag tag_{};
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

} // namespace physlearn
