#pragma once

#include "mvnstein/common.hpp"
#include "mvnstein/quadrature.hpp"
#include "mvnstein/standardize.hpp"

#include <string>

namespace mvnstein {

struct TestOutcome {
    double statistic = 0.0;
    double a = 0.0;  // weight parameter; +infinity selects the boundary statistic
    Eigen::Index n = 0;
    Eigen::Index d = 0;
    std::string label;
};

struct SkewnessMeasures {
    double mardia = 0.0;  // b_{1,d}  = n^-2 sum (Y_i' Y_j)^3
    double mrs = 0.0;     // b~_{1,d} = n^-2 sum Y_i' Y_j |Y_i|^2 |Y_j|^2
};

// The weighted L2 statistic in its closed three-term form. Requires a > 0.
// Tiny negative round-off is clamped to zero.
double t_stat(const StandardizedSample& sample, double a);

// Oracle route: tensor Gauss-Legendre quadrature of |Z_n(t)|^2 w_a(t) over a
// truncated box. Supports d <= 3 only.
double t_stat_quadrature(const StandardizedSample& sample, double a,
                         const QuadratureSpec& grid);

// Table scaling 16 a^{d/2+2} pi^{-d/2} T.
double scaled_stat(double t, double a, int d);

// scaled_stat composed with t_stat; a = +infinity selects the boundary
// statistic n (b~_{1,d} + 2 b_{1,d}), the elementwise a->inf limit of the
// scaled statistic.
double scaled_t_stat(const StandardizedSample& sample, double a);

SkewnessMeasures skewness_measures(const StandardizedSample& sample);

// Mardia kurtosis b_{2,d} = n^-1 sum_j |Y_j|^4.
double kurtosis_mardia(const StandardizedSample& sample);

// Elementwise limit of a^{d/2+2}/(n pi^{d/2}) 16 T_{n,a} as a -> infinity.
double limit_stat_inf(const StandardizedSample& sample);

// Elementwise limit of (1/(n a^{d/2})) ((a/pi)^{d/2} T_{n,a} - d) as a -> 0.
double limit_stat_zero(const StandardizedSample& sample);

}  // namespace mvnstein
