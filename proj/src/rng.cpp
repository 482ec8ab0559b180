#include "sarima/rng.hpp"

#include <cmath>

namespace sarima {

namespace {
constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

SubstreamRng::SubstreamRng(std::uint64_t seed, std::uint64_t stream)
    : state_(mix64(mix64(seed + kGamma) ^ (stream + kGamma))) {}

std::uint64_t SubstreamRng::next_u64() {
    state_ += kGamma;
    return mix64(state_);
}

double SubstreamRng::next_uniform() {
    // Top 53 bits, shifted into (0, 1] so the log below stays finite.
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double SubstreamRng::next_normal() {
    const double u1 = next_uniform();
    const double u2 = next_uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    return r * std::cos(6.283185307179586 * u2);
}

}  // namespace sarima
