#include "mvnstein/standardize.hpp"

#include <cassert>

namespace mvnstein {

Vector sample_mean(const Matrix& data) {
    if (data.rows() == 0) throw std::invalid_argument("sample_mean: empty sample");
    if (!data.allFinite()) throw std::invalid_argument("sample_mean: non-finite entries");
    return data.colwise().mean();
}

Matrix sample_cov(const Matrix& data) {
    const auto n = data.rows();
    if (n < 2) throw std::invalid_argument("sample_cov: need at least two observations");
    if (!data.allFinite()) throw std::invalid_argument("sample_cov: non-finite entries");
    Matrix centered = data.rowwise() - data.colwise().mean();
    Matrix cov = (centered.transpose() * centered) / static_cast<double>(n);
    // kill the last-bit asymmetry so eigensolvers see an exactly symmetric input
    return (cov + cov.transpose()) / 2.0;
}

Matrix sym_inv_sqrt(const Matrix& covariance) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(covariance);
    if (solver.info() != Eigen::Success)
        throw SingularCovarianceError("sym_inv_sqrt: eigendecomposition failed");
    const Vector& lambda = solver.eigenvalues();
    double lambda_max = lambda.maxCoeff();
    // relative threshold, so the scale of the data does not matter
    if (lambda.minCoeff() <= 1e-12 * lambda_max || lambda_max <= 0.0)
        throw SingularCovarianceError(
            "sym_inv_sqrt: covariance is numerically singular (is n <= d?)");
    Vector inv_sqrt = lambda.array().rsqrt();
    return solver.eigenvectors() * inv_sqrt.asDiagonal() * solver.eigenvectors().transpose();
}

StandardizedSample scaled_residuals(const Matrix& data) {
    const auto n = data.rows();
    const auto d = data.cols();
    if (n < d + 1)
        throw SingularCovarianceError("scaled_residuals: need n >= d + 1 observations");
    Matrix root = sym_inv_sqrt(sample_cov(data));
    Matrix centered = data.rowwise() - data.colwise().mean();
    StandardizedSample out{centered * root};  // row_j -> root * (X_j - mean)
#ifndef NDEBUG
    assert(out.residuals.colwise().sum().cwiseAbs().maxCoeff() <= 1e-10 * n);
    Matrix gram = out.residuals.transpose() * out.residuals / static_cast<double>(n);
    assert((gram - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() <= 1e-10);
#endif
    return out;
}

}  // namespace mvnstein
