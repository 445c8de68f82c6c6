#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace memtune {

/// Deterministic Gaussian stream used for all generation randomness.
///
/// The transform is pinned so that output sequences are reproducible across
/// platforms and can be replayed independently by tests:
///
///   engine   : std::mt19937_64 seeded with `seed`
///   uniform  : u = (engine() >> 11) * 2^-53, u in [0, 1)
///   pairs    : r = sqrt(-2 * log(1 - u1)), theta = 2*pi * u2
///              z0 = r * cos(theta), z1 = r * sin(theta)
///   draw     : mu + sigma * z, consuming z0 then z1 per pair
///
/// Every draw therefore consumes exactly one uniform (two engine calls per
/// pair), so the engine position after k draws depends only on k.
class GaussianStream {
public:
    GaussianStream(std::uint64_t seed, double mu = 0.0, double sigma = 1.0)
        : engine_(seed), mu_(mu), sigma_(sigma) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return mu_ + sigma_ * spare_;
        }
        double z0;
        make_pair(z0, spare_);
        have_spare_ = true;
        return mu_ + sigma_ * z0;
    }

    /// Consume `count` draws without producing values. The engine and pair
    /// cache advance exactly as `count` calls to next() would, so a stream
    /// that skips unused draws stays bit-identical to one that evaluates
    /// them all.
    void skip(std::uint64_t count) {
        if (count > 0 && have_spare_) {
            have_spare_ = false;
            --count;
        }
        engine_.discard(2 * (count / 2));
        if (count % 2 != 0) {
            double z0;
            make_pair(z0, spare_);
            have_spare_ = true;
        }
    }

    double mu() const { return mu_; }
    double sigma() const { return sigma_; }

private:
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    void make_pair(double& z0, double& z1) {
        double u1 = uniform();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(1.0 - u1));
        double theta = 2.0 * std::numbers::pi * u2;
        z0 = r * std::cos(theta);
        z1 = r * std::sin(theta);
    }

    std::mt19937_64 engine_;
    double mu_;
    double sigma_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

/// SplitMix64 finalizer; used to derive independent sub-stream seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

} // namespace memtune
