#pragma once

#include "mvnstein/nulldist.hpp"
#include "mvnstein/samplers.hpp"
#include "mvnstein/standardize.hpp"

#include <array>

namespace mvnstein {

// Closed forms of the four weighted integrals behind the variance estimator:
//   L1 = int t psi(t) CS+(t,x) w_a dt
//   L2 = int t (t'x) psi(t) CS-(t,x) w_a dt
//   I1 = int CS+(t,x) CS+(t,y) w_a dt
//   I2 = int t CS+(t,x) CS-(t,y) w_a dt
struct HelperIntegrals {
    Vector l1;
    Vector l2;
    double i1 = 0.0;
    Vector i2;
};

HelperIntegrals helper_integrals(double a, const Vector& x);
HelperIntegrals helper_integrals(double a, const Vector& x, const Vector& y);

// Variance estimate with its fifteen block sums sigma^{i,j}, 1 <= i <= j <= 5
// in row-major order; value is the full symmetric double sum (off-diagonal
// blocks counted twice), clamped at zero.
struct SigmaHatResult {
    double value = 0.0;
    std::array<double, 15> blocks{};

    static int block_index(int i, int j);  // 1-based, i <= j
};

// Literal evaluation of the displayed multi-index sums (up to O(n^5)),
// restricted to n <= 12. The factored estimator is checked against this.
SigmaHatResult sigma_hat_naive(const StandardizedSample& sample, double a);

// Algebraically identical estimator with every block contracted to
// O(n^2 d^2) work: shared-index partial sums are built once and the free
// index j is contracted last.
SigmaHatResult sigma_hat(const StandardizedSample& sample, double a);

struct ConfidenceInterval {
    double lower = 0.0;
    double upper = 0.0;
    double level = 0.0;
    double center = 0.0;     // T_{n,a} / n
    double halfwidth = 0.0;  // sigma-hat / sqrt(n) * z_{1-alpha/2}
};

// Asymptotic confidence interval for the population distance Delta_a.
ConfidenceInterval confidence_interval(const Matrix& data, double a, double alpha);

struct DeltaValue {
    double value = 0.0;
    double a = 0.0;
    AlternativeSpec alternative;
    enum class Method { kQuadrature, kMonteCarlo } method = Method::kQuadrature;
};

// Delta_a for the analytic alternatives (uniform cube, iid Laplace, iid
// logistic, standard normal) by adaptive tensor quadrature of the squared
// CF-gradient distance; d in {1,2}.
DeltaValue delta_numeric(const AlternativeSpec& alt, double a, int d);

// Monte-Carlo estimates of the two boundary limits of the suitably scaled
// Delta_a (a -> infinity and a -> 0), with standard errors.
struct DeltaLimits {
    double lim_inf_scaled = 0.0;
    double lim_inf_se = 0.0;
    double lim_zero_scaled = 0.0;
    double lim_zero_se = 0.0;
};

DeltaLimits delta_limits(const AlternativeSpec& alt, int d, const SimulationConfig& cfg);

}  // namespace mvnstein
