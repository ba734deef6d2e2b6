#include "grlnet/rng.hpp"

#include <cmath>

#include "grlnet/errors.hpp"

namespace grlnet {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

} // namespace

Rng::Rng(std::uint64_t seed) {
    std::uint64_t s = seed;
    for (auto& w : state_) {
        w = splitmix64(s);
    }
}

std::uint64_t Rng::next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double Rng::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::next_below(std::uint64_t n) {
    if (n == 0) {
        throw ValueError("Rng::next_below: n must be nonzero");
    }
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
}

double Rng::next_uniform(double lo, double hi) {
    return lo + (hi - lo) * next_double();
}

double Rng::next_gaussian() {
    if (spare_gaussian_) {
        const double v = *spare_gaussian_;
        spare_gaussian_.reset();
        return v;
    }
    // Box-Muller; u1 is kept away from 0 so log() stays finite.
    double u1 = next_double();
    const double u2 = next_double();
    if (u1 < 0x1.0p-53) {
        u1 = 0x1.0p-53;
    }
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * 3.14159265358979323846 * u2;
    spare_gaussian_ = r * std::sin(a);
    return r * std::cos(a);
}

} // namespace grlnet
