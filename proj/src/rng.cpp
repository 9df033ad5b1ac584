#include "mvnstein/rng.hpp"

#include <cmath>

namespace mvnstein {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Rng::Rng(RngStream stream) {
    // Mix seed and stream id so that nearby ids land far apart in state space.
    std::uint64_t state = stream.seed;
    std::uint64_t mixed = splitmix64(state);
    state = mixed ^ (stream.stream_id * 0xD1B54A32D192ED03ULL + 0x2545F4914F6CDD1DULL);
    for (auto& word : s_) word = splitmix64(state);
    s_[0] |= 1;  // never the all-zero state
}

std::uint64_t Rng::next_u64() {
    std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Rng::uniform() {
    // 53 random bits into (0,1); offset by half an ulp to exclude 0.
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal() {
    if (has_cached_normal_) {
        has_cached_normal_ = false;
        return cached_normal_;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform() - 1.0;
        v = 2.0 * uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    double f = std::sqrt(-2.0 * std::log(s) / s);
    cached_normal_ = v * f;
    has_cached_normal_ = true;
    return u * f;
}

double Rng::gamma(double shape, double rate) {
    if (shape < 1.0) {
        double u = uniform();
        return gamma(shape + 1.0, rate) * std::pow(u, 1.0 / shape);
    }
    double d = shape - 1.0 / 3.0;
    double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        double u = uniform();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v / rate;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v / rate;
    }
}

double Rng::student_t(double df) {
    double z = normal();
    double w = chi_squared(df);
    return z / std::sqrt(w / df);
}

double Rng::exponential(double rate) { return -std::log(uniform()) / rate; }

double Rng::laplace(double scale) {
    double u = uniform() - 0.5;
    return scale * std::copysign(std::log1p(-2.0 * std::abs(u)), u);
}

double Rng::logistic(double scale) {
    double u = uniform();
    return scale * std::log(u / (1.0 - u));
}

}  // namespace mvnstein
