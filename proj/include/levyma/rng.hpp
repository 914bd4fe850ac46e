#pragma once

#include <cstdint>
#include <random>

namespace levyma {

/// 64-bit generator with explicitly coded output transforms, so that a given
/// (seed, stream) pair yields bit-identical draws on any conforming platform.
/// Substreams are decorrelated through splitmix64 seed mixing; simulation
/// code keeps jump times, jump sizes and Gaussian draws on separate streams.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(mix(seed)) {}

    static Rng substream(std::uint64_t seed, std::uint64_t stream) {
        return Rng(mix(seed) ^ mix(0x9e3779b97f4a7c15ULL * (stream + 1)));
    }

    /// Uniform draw in the open interval (0, 1).
    double uniform01() {
        return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    /// Standard normal via Box-Muller (pair cached).
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double r = std::sqrt(-2.0 * std::log(uniform01()));
        double t = 6.283185307179586476925286766559 * uniform01();
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

    /// Exponential with the given rate.
    double exponential(double rate) { return -std::log(uniform01()) / rate; }

private:
    static std::uint64_t mix(std::uint64_t x) {
        // splitmix64 finalizer
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace levyma
