#pragma once

#include <cstdint>

namespace octrmt {

/// Deterministic splittable random stream. A stream is fully identified by
/// (master seed, stream index): the same pair yields the same sequence on
/// every run and every thread schedule, and distinct indices yield
/// statistically independent streams. Per-trial substreams make parallel
/// sampling order-independent.
///
/// Engine: xoshiro256++ with splitmix64 state expansion over the mixed
/// (seed, index) pair.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_index);

    std::uint64_t master_seed() const { return seed_; }
    std::uint64_t stream_index() const { return index_; }

    std::uint64_t next_u64();

    /// Uniform on [0,1) with 53 random bits.
    double next_unit();

    /// Uniform on (0,1); never returns an endpoint.
    double next_unit_open();

    /// Standard normal via the Marsaglia polar method; the second variate of
    /// each pair is cached in the stream.
    double normal();

private:
    std::uint64_t s_[4];
    std::uint64_t seed_;
    std::uint64_t index_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace octrmt
