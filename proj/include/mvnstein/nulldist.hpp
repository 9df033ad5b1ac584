#pragma once

#include "mvnstein/quadrature.hpp"
#include "mvnstein/rng.hpp"
#include "mvnstein/samplers.hpp"
#include "mvnstein/standardize.hpp"

#include <vector>

namespace mvnstein {

struct SimulationConfig {
    int reps = 100000;
    std::uint64_t seed = 0;
    double level = 0.95;
    int workers = 0;  // 0: resolve via environment / machine parallelism
};

// First four cumulants of the limit null distribution (d = 1) plus the
// derived skewness and kurtosis.
struct CumulantSet {
    double kappa[4] = {0, 0, 0, 0};
    double beta1 = 0.0;
    double beta2 = 0.0;
    double a = 0.0;
};

// Closed-form mean of the limit null distribution.
double mean_limit(double a, int d);

// Covariance matrix kernel K(s,t) of the limiting Gaussian element.
Matrix kernel_K(const Vector& s, const Vector& t);

// All scaled null statistics (a may be +infinity) from cfg.reps simulated
// standard-normal samples of size n x d. Replicate r uses stream
// (cfg.seed, r); a singular draw is retried on stream (cfg.seed, r + t*reps).
std::vector<double> simulate_null_scaled(Eigen::Index n, int d, double a,
                                         const SimulationConfig& cfg);

// Empirical cfg.level quantile (lower-interpolated order statistic) of the
// simulated scaled statistic.
double mc_critical_value(Eigen::Index n, int d, double a, const SimulationConfig& cfg);

// Monte-Carlo p-value of the observed statistic with the (k+1)/(reps+1)
// correction.
double mc_pvalue(const Matrix& data, double a, const SimulationConfig& cfg);

// Lower-interpolated order statistic at the given level; sorts a copy.
double empirical_quantile(std::vector<double> values, double level);

// kappa_m = 2^{m-1} (m-1)! int h_m(t,t) w_a dt via iterated discretized
// kernels on a Gauss-Legendre grid (d = 1 only). Throws AccuracyError when
// kappa_1 disagrees with mean_limit by more than 1e-6 relative.
CumulantSet cumulants_numeric(double a, const QuadratureSpec& grid);

// Nystrom eigenvalues of the integral operator (d in {1,2}), clamped at zero
// and sorted descending.
std::vector<double> nystrom_eigenvalues(double a, int d, const QuadratureSpec& grid);

// Default cumulant/Nystrom grid: 256 nodes per axis for d=1 (64 for d=2),
// radius sqrt(35/a).
QuadratureSpec cumulant_grid(double a, int d = 1);

}  // namespace mvnstein
