#pragma once

#include "mvnstein/standardize.hpp"

namespace mvnstein {

// BHEP statistic in its three-term closed form. Carries no factor n, matching
// the integral definition with the N(0, a^2 I) smoothing density; critical
// values are simulated under the same convention.
double bhep_stat(const StandardizedSample& sample, double a);

// Sample-size-dependent BHEP bandwidth a = (1/sqrt 2)((2d+1)n/4)^{1/(d+4)}.
double hz_bandwidth(Eigen::Index n, int d);

// bhep_stat at the Henze-Zirkler bandwidth.
double hz_stat(const StandardizedSample& sample);

// Moment-generating-function analogue statistic; default a = 5. Arguments of
// the growing exponential above 700 raise NumericOverflowError.
double hv_stat(const StandardizedSample& sample, double a = 5.0);

// Energy statistic with the finite-sample rescaling Y~_j = sqrt(n/(n-1)) Y_j.
double energy_stat(const StandardizedSample& sample);

// E|x - Z| for Z standard d-variate normal, as a function of |x|. Power
// series for small |x|; for larger |x| the series is evaluated in its
// all-positive-terms (Kummer-transformed) arrangement, which is stable in
// double precision where the alternating form is not.
double expected_norm_to_gaussian(double norm_x, int d);

}  // namespace mvnstein
