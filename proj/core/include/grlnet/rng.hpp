#pragma once

#include <array>
#include <cstdint>
#include <optional>

namespace grlnet {

/// Deterministic random stream: xoshiro256** seeded through splitmix64.
///
/// The generator is fixed and fully specified so that every draw is
/// bit-reproducible across runs and platforms:
///  - state: four 64-bit words produced by iterating splitmix64 on the seed;
///  - next_u64(): one xoshiro256** step;
///  - next_double(): next_u64() >> 11 scaled by 2^-53, uniform in [0,1);
///  - next_below(n): high 64 bits of the 128-bit product next_u64()*n;
///  - next_gaussian(): Box-Muller on two next_double() draws, the second
///    value of each pair is cached and returned by the following call.
///
/// One stream per consumer; an Rng is never shared between threads.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();
    double next_double();
    /// Uniform integer in [0, n). n must be nonzero.
    std::uint64_t next_below(std::uint64_t n);
    /// Uniform in [lo, hi).
    double next_uniform(double lo, double hi);
    /// Standard normal draw.
    double next_gaussian();

private:
    std::array<std::uint64_t, 4> state_{};
    std::optional<double> spare_gaussian_;
};

} // namespace grlnet
