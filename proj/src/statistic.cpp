#include "mvnstein/statistic.hpp"

#include <cmath>

namespace mvnstein {

double t_stat(const StandardizedSample& sample, double a) {
    if (!(a > 0.0)) throw std::invalid_argument("t_stat: weight parameter must be positive");
    const Matrix& y = sample.residuals;
    const auto n = y.rows();
    const int d = static_cast<int>(y.cols());
    const double nd = static_cast<double>(n);

    Vector norm2 = y.rowwise().squaredNorm();

    double term1 = nd * std::pow(kPi / (a + 1.0), d / 2.0) * d / (2.0 * (a + 1.0));

    KahanSum sum2;
    for (Eigen::Index j = 0; j < n; ++j)
        sum2.add(norm2[j] / (2.0 * a + 1.0) * std::exp(-norm2[j] / (4.0 * a + 2.0)));
    double term2 = 2.0 * std::pow(2.0 * kPi / (2.0 * a + 1.0), d / 2.0) * sum2.value();

    // symmetric half-sum: i < j doubled, diagonal contributes |Y_j|^2 exactly
    KahanSum sum3;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            double dot = y.row(i).dot(y.row(j));
            double dist2 = norm2[i] + norm2[j] - 2.0 * dot;
            sum3.add(2.0 * dot * std::exp(-dist2 / (4.0 * a)));
        }
        sum3.add(norm2[i]);
    }
    double term3 = std::pow(kPi / a, d / 2.0) / nd * sum3.value();

    return clamp_nonnegative(term1 - term2 + term3);
}

double t_stat_quadrature(const StandardizedSample& sample, double a,
                         const QuadratureSpec& grid) {
    if (!(a > 0.0)) throw std::invalid_argument("t_stat_quadrature: weight parameter must be positive");
    const int d = static_cast<int>(sample.d());
    if (d > 3) throw UnsupportedDimensionError("t_stat_quadrature: supports d <= 3");
    const Matrix& y = sample.residuals;
    const auto n = y.rows();

    double radius = grid.truncation_radius > 0.0 ? grid.truncation_radius : std::sqrt(30.0 / a);
    GaussLegendre rule = gauss_legendre(grid.nodes_per_axis, radius);
    const int m = grid.nodes_per_axis;

    std::int64_t total = 1;
    for (int k = 0; k < d; ++k) total *= m;

    KahanSum acc;
    Vector t(d);
    for (std::int64_t flat = 0; flat < total; ++flat) {
        std::int64_t rem = flat;
        double weight = 1.0;
        for (int k = 0; k < d; ++k) {
            int idx = static_cast<int>(rem % m);
            rem /= m;
            t[k] = rule.nodes[idx];
            weight *= rule.weights[idx];
        }
        double tt = t.squaredNorm();
        double psi = std::exp(-tt / 2.0);
        // Z_n(t) = n^{-1/2} sum_j (Y_j (cos + sin)(t'Y_j) - t psi(t))
        Vector z = Vector::Zero(d);
        for (Eigen::Index j = 0; j < n; ++j) {
            double proj = t.dot(y.row(j));
            z += y.row(j).transpose() * (std::cos(proj) + std::sin(proj));
        }
        z -= static_cast<double>(n) * psi * t;
        acc.add(weight * std::exp(-a * tt) * z.squaredNorm() / static_cast<double>(n));
    }
    return acc.value();
}

double scaled_stat(double t, double a, int d) {
    return 16.0 * std::pow(a, d / 2.0 + 2.0) * std::pow(kPi, -d / 2.0) * t;
}

double scaled_t_stat(const StandardizedSample& sample, double a) {
    if (std::isinf(a))
        return static_cast<double>(sample.n()) * limit_stat_inf(sample);
    return scaled_stat(t_stat(sample, a), a, static_cast<int>(sample.d()));
}

SkewnessMeasures skewness_measures(const StandardizedSample& sample) {
    const Matrix& y = sample.residuals;
    const auto n = y.rows();
    Vector norm2 = y.rowwise().squaredNorm();
    KahanSum mardia, mrs;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            double dot = y.row(i).dot(y.row(j));
            mardia.add(2.0 * dot * dot * dot);
            mrs.add(2.0 * dot * norm2[i] * norm2[j]);
        }
        mardia.add(norm2[i] * norm2[i] * norm2[i]);
        mrs.add(norm2[i] * norm2[i] * norm2[i]);
    }
    double scale = 1.0 / (static_cast<double>(n) * static_cast<double>(n));
    return {clamp_nonnegative(mardia.value() * scale), clamp_nonnegative(mrs.value() * scale)};
}

double kurtosis_mardia(const StandardizedSample& sample) {
    Vector norm2 = sample.residuals.rowwise().squaredNorm();
    return norm2.squaredNorm() / static_cast<double>(sample.n());
}

double limit_stat_inf(const StandardizedSample& sample) {
    SkewnessMeasures b = skewness_measures(sample);
    return b.mrs + 2.0 * b.mardia;
}

double limit_stat_zero(const StandardizedSample& sample) {
    const int d = static_cast<int>(sample.d());
    Vector norm2 = sample.residuals.rowwise().squaredNorm();
    KahanSum sum;
    for (Eigen::Index j = 0; j < norm2.size(); ++j)
        sum.add(norm2[j] * std::exp(-norm2[j] / 2.0));
    return d / 2.0 -
           std::pow(2.0, d / 2.0 + 1.0) * sum.value() / static_cast<double>(sample.n());
}

}  // namespace mvnstein
