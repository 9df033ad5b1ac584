#pragma once

#include "mvnstein/common.hpp"

namespace mvnstein {

// Scaled residuals Y_j = S^{-1/2} (X_j - mean). By construction the rows sum
// to zero and have sample covariance (divisor n) equal to the identity, which
// is what makes every statistic built on them affine invariant.
struct StandardizedSample {
    Matrix residuals;  // n x d, row j is Y_j

    Eigen::Index n() const { return residuals.rows(); }
    Eigen::Index d() const { return residuals.cols(); }
};

// Componentwise arithmetic mean of the rows.
Vector sample_mean(const Matrix& data);

// Sample covariance with divisor n (not n-1); symmetric by construction.
Matrix sample_cov(const Matrix& data);

// Symmetric positive definite M with M*M = S^{-1}, via eigendecomposition.
// Throws SingularCovarianceError when min eigenvalue <= 1e-12 * max.
Matrix sym_inv_sqrt(const Matrix& covariance);

// Requires n >= d+1 and a nonsingular sample covariance.
StandardizedSample scaled_residuals(const Matrix& data);

}  // namespace mvnstein
