#pragma once

#include <cstdint>

namespace mvnstein {

// A (seed, stream-id) pair fully determines the generated sequence. Streams
// with distinct ids are statistically independent for Monte Carlo purposes,
// so each replicate owns one stream and results do not depend on how the
// replicate index space is partitioned across workers.
struct RngStream {
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;
};

// xoshiro256++ seeded through splitmix64 from (seed, stream id). All variate
// transformations below are implemented here rather than taken from
// <random>, so sequences are identical across standard libraries.
class Rng {
  public:
    explicit Rng(RngStream stream);

    std::uint64_t next_u64();

    // Uniform on (0,1), never exactly 0 or 1.
    double uniform();
    double uniform(double lo, double hi);

    // Standard normal via Marsaglia's polar method.
    double normal();

    // Marsaglia-Tsang for shape >= 1, with the power boost for shape < 1.
    double gamma(double shape, double rate);

    double chi_squared(double df) { return gamma(df / 2.0, 0.5); }

    // Student t with df degrees of freedom (location 0, scale 1).
    double student_t(double df);

    double exponential(double rate);

    // Laplace(0, b) and Logistic(0, s) via inverse CDF.
    double laplace(double scale);
    double logistic(double scale);

    bool bernoulli(double p) { return uniform() < p; }

  private:
    std::uint64_t s_[4];
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

}  // namespace mvnstein
