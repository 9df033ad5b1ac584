#include "mvnstein/competitors.hpp"

#include <cmath>

namespace mvnstein {

double bhep_stat(const StandardizedSample& sample, double a) {
    if (!(a > 0.0)) throw std::invalid_argument("bhep_stat: bandwidth must be positive");
    const Matrix& y = sample.residuals;
    const auto n = y.rows();
    const int d = static_cast<int>(y.cols());
    const double nd = static_cast<double>(n);
    const double a2 = a * a;

    Vector norm2 = y.rowwise().squaredNorm();
    KahanSum pair;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            double dist2 = norm2[i] + norm2[j] - 2.0 * y.row(i).dot(y.row(j));
            pair.add(2.0 * std::exp(-a2 * dist2 / 2.0));
        }
        pair.add(1.0);
    }
    KahanSum single;
    for (Eigen::Index j = 0; j < n; ++j)
        single.add(std::exp(-a2 * norm2[j] / (2.0 * (1.0 + a2))));

    double value = pair.value() / (nd * nd) -
                   2.0 * std::pow(1.0 + a2, -d / 2.0) * single.value() / nd +
                   std::pow(1.0 + 2.0 * a2, -d / 2.0);
    return clamp_nonnegative(value);
}

double hz_bandwidth(Eigen::Index n, int d) {
    return std::pow((2.0 * d + 1.0) * static_cast<double>(n) / 4.0, 1.0 / (d + 4.0)) /
           std::sqrt(2.0);
}

double hz_stat(const StandardizedSample& sample) {
    return bhep_stat(sample, hz_bandwidth(sample.n(), static_cast<int>(sample.d())));
}

double hv_stat(const StandardizedSample& sample, double a) {
    if (!(a > 0.0)) throw std::invalid_argument("hv_stat: weight parameter must be positive");
    const Matrix& y = sample.residuals;
    const auto n = y.rows();
    const int d = static_cast<int>(y.cols());

    Vector norm2 = y.rowwise().squaredNorm();
    const double c1 = 1.0 / (4.0 * a * a) - 1.0 / (2.0 * a);
    const double c2 = d / (2.0 * a);

    KahanSum sum;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
            double dot = y.row(i).dot(y.row(j));
            double sum2 = norm2[i] + norm2[j] + 2.0 * dot;
            double arg = sum2 / (4.0 * a);
            if (arg > 700.0)
                throw NumericOverflowError("hv_stat: exponential overflow; increase a");
            double term = std::exp(arg) * (dot + sum2 * c1 + c2);
            sum.add(i == j ? term : 2.0 * term);
        }
    }
    return std::pow(kPi / a, d / 2.0) / static_cast<double>(n) * sum.value();
}

double expected_norm_to_gaussian(double norm_x, int d) {
    if (d < 1) throw std::invalid_argument("expected_norm_to_gaussian: d >= 1");
    const double r = std::abs(norm_x);
    const double lead = std::sqrt(2.0) * std::exp(std::lgamma((d + 1) / 2.0) - std::lgamma(d / 2.0));
    if (r == 0.0) return lead;
    const double r2 = r * r;

    if (r <= 5.0) {
        // alternating series; fine here, the peak term stays O(1)
        double term = r2 / 2.0 * 2.0 *
                      std::exp(std::lgamma((d + 1) / 2.0) + std::lgamma(1.5) -
                               std::lgamma(d / 2.0 + 1.0));
        KahanSum sum;
        sum.add(term);
        for (int k = 0; k < 500; ++k) {
            term *= -r2 / (2.0 * (k + 1.0)) * ((2.0 * k + 1.0) * (2.0 * k + 2.0)) /
                    ((2.0 * k + 3.0) * (2.0 * k + 4.0)) * (k + 1.5) / (k + d / 2.0 + 1.0);
            sum.add(term);
            if (std::abs(term) < 1e-14 * (1.0 + std::abs(sum.value()))) break;
        }
        return lead + std::sqrt(2.0 / kPi) * sum.value();
    }

    // Kummer-transformed arrangement 1F1((d+1)/2; d/2; r^2/2) with positive
    // terms only, rescaled on the fly against overflow.
    const double z = r2 / 2.0;
    double term = 1.0, sum = 1.0, log_scale = 0.0;
    for (int k = 0; k < 100000; ++k) {
        term *= ((d + 1) / 2.0 + k) / ((d / 2.0 + k) * (k + 1.0)) * z;
        sum += term;
        if (term < 1e-16 * sum) break;
        if (sum > 1e280) {
            log_scale += std::log(sum);
            term /= sum;
            sum = 1.0;
        }
    }
    return lead * std::exp(-z + log_scale + std::log(sum));
}

double energy_stat(const StandardizedSample& sample) {
    const Matrix& y = sample.residuals;
    const auto n = y.rows();
    const int d = static_cast<int>(y.cols());
    const double nd = static_cast<double>(n);
    const double rescale = std::sqrt(nd / (nd - 1.0));

    KahanSum to_gaussian;
    for (Eigen::Index j = 0; j < n; ++j)
        to_gaussian.add(expected_norm_to_gaussian(rescale * y.row(j).norm(), d));

    KahanSum pairwise;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j)
            pairwise.add(2.0 * rescale * (y.row(i) - y.row(j)).norm());

    double gaussian_pair = 2.0 * std::exp(std::lgamma((d + 1) / 2.0) - std::lgamma(d / 2.0));
    double value = nd * (2.0 / nd * to_gaussian.value() - gaussian_pair -
                         pairwise.value() / (nd * nd));
    return clamp_nonnegative(value);
}

}  // namespace mvnstein
