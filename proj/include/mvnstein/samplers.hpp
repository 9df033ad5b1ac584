#pragma once

#include "mvnstein/common.hpp"
#include "mvnstein/rng.hpp"

#include <optional>
#include <string>

namespace mvnstein {

// Sampling distribution for the null and the power/coverage alternatives.
// NMix1 mixes N_d(0,I) and N_d(3,I) with weights 0.9/0.1; NMix2 mixes
// N_d(0,I) and N_d(0,B_d) with weights 0.1/0.9, where B_d has unit diagonal
// and 0.9 off-diagonal. Mvt is the spherical multivariate t. The iid kinds
// draw d independent univariate coordinates per row; Pearson7(m) coordinates
// are Student t with m degrees of freedom.
struct AlternativeSpec {
    enum class Kind {
        kStandardNormal,
        kNMix1,
        kNMix2,
        kMvt,          // param1 = degrees of freedom
        kIIDChi2,      // param1 = degrees of freedom
        kIIDGamma,     // param1 = shape, param2 = rate
        kIIDLogistic,  // scale sqrt(3)/pi (unit variance)
        kIIDUniform,   // on (-sqrt 3, sqrt 3) (unit variance)
        kIIDLaplace,   // scale 1/sqrt 2 (unit variance)
        kIIDPearson7,  // param1 = m
    };

    Kind kind = Kind::kStandardNormal;
    int d = 1;
    double param1 = 0.0;
    double param2 = 0.0;

    static AlternativeSpec standard_normal(int d) { return {Kind::kStandardNormal, d}; }
    static AlternativeSpec nmix1(int d) { return {Kind::kNMix1, d}; }
    static AlternativeSpec nmix2(int d) { return {Kind::kNMix2, d}; }
    static AlternativeSpec mvt(double nu, int d) { return {Kind::kMvt, d, nu}; }
    static AlternativeSpec iid_chi2(double df, int d) { return {Kind::kIIDChi2, d, df}; }
    static AlternativeSpec iid_gamma(double shape, double rate, int d) {
        return {Kind::kIIDGamma, d, shape, rate};
    }
    static AlternativeSpec iid_logistic(int d) { return {Kind::kIIDLogistic, d}; }
    static AlternativeSpec iid_uniform(int d) { return {Kind::kIIDUniform, d}; }
    static AlternativeSpec iid_laplace(int d) { return {Kind::kIIDLaplace, d}; }
    static AlternativeSpec iid_pearson7(double m, int d) { return {Kind::kIIDPearson7, d, m}; }

    std::string name() const;
    void validate() const;
};

// "name[:params]" as accepted by the CLI, e.g. "nmix1", "mvt:3", "gamma:5,1".
AlternativeSpec parse_alternative(const std::string& text, int d);

// n i.i.d. rows from the given alternative.
Matrix draw(const AlternativeSpec& spec, Eigen::Index n, RngStream stream);

// L z with L the lower Cholesky factor of B.
Vector cholesky_correlated(const Matrix& b, const Vector& z);

// Population mean of the alternative (used when standardizing draws).
Vector population_mean(const AlternativeSpec& spec);

// Population covariance; requires a finite second moment.
Matrix population_cov(const AlternativeSpec& spec);

// The equicorrelation matrix B_d of the NMix2 alternative.
Matrix nmix2_correlation(int d);

}  // namespace mvnstein
