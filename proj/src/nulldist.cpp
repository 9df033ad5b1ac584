#include "mvnstein/nulldist.hpp"

#include "mvnstein/parallel.hpp"
#include "mvnstein/statistic.hpp"

#include <algorithm>
#include <cmath>

namespace mvnstein {

double mean_limit(double a, int d) {
    if (!(a > 0.0)) throw std::invalid_argument("mean_limit: a > 0 required");
    if (d < 1) throw std::invalid_argument("mean_limit: d >= 1 required");
    double poly = 16.0 * a * a * a + (8.0 * d + 48.0) * a * a + (12.0 * d + 40.0) * a +
                  d * d + 10.0 * d + 16.0;
    return std::pow(kPi / a, d / 2.0) * d -
           std::pow(kPi / (a + 1.0), d / 2.0) * poly * d / (16.0 * std::pow(a + 1.0, 3));
}

Matrix kernel_K(const Vector& s, const Vector& t) {
    if (s.size() != t.size()) throw std::invalid_argument("kernel_K: dimension mismatch");
    const auto d = s.size();
    Matrix id = Matrix::Identity(d, d);
    Vector diff = s - t;
    double psi_diff = std::exp(-diff.squaredNorm() / 2.0);
    double psi_s = std::exp(-s.squaredNorm() / 2.0);
    double psi_t = std::exp(-t.squaredNorm() / 2.0);
    double st = s.dot(t);

    Matrix ss = s * s.transpose();
    Matrix tt = t * t.transpose();
    Matrix ts = t * s.transpose();
    Matrix stm = s * t.transpose();

    Matrix first = (id - diff * diff.transpose()) * psi_diff;
    Matrix second = (ss + tt - ts - stm - id + st * (ss + tt - stm - id) -
                     st * st / 2.0 * stm) * (psi_s * psi_t);
    return first + second;
}

namespace {

// scaled statistics share one null engine; phase bits keep retry streams
// disjoint from first-attempt streams
constexpr std::uint64_t kRetryPhase = 1ULL << 48;

double one_null_scaled(Eigen::Index n, int d, double a, const SimulationConfig& cfg,
                       std::int64_t rep) {
    for (int attempt = 0; attempt < 10; ++attempt) {
        RngStream stream{cfg.seed,
                         static_cast<std::uint64_t>(rep) + attempt * kRetryPhase};
        Rng rng(stream);
        Matrix x(n, d);
        for (Eigen::Index i = 0; i < n; ++i)
            for (int j = 0; j < d; ++j) x(i, j) = rng.normal();
        try {
            return scaled_t_stat(scaled_residuals(x), a);
        } catch (const SingularCovarianceError&) {
            continue;  // essentially impossible for normal draws; retry fresh stream
        }
    }
    throw SingularCovarianceError("simulate_null_scaled: 10 singular draws in a row");
}

}  // namespace

std::vector<double> simulate_null_scaled(Eigen::Index n, int d, double a,
                                         const SimulationConfig& cfg) {
    if (n < d + 1) throw std::invalid_argument("simulate_null_scaled: need n >= d + 1");
    if (cfg.reps < 100)
        throw std::invalid_argument("simulate_null_scaled: need reps >= 100 for quantiles");
    std::vector<double> values(cfg.reps);
    parallel_for(cfg.reps,
                 [&](std::int64_t rep) { values[rep] = one_null_scaled(n, d, a, cfg, rep); },
                 cfg.workers);
    return values;
}

double empirical_quantile(std::vector<double> values, double level) {
    if (values.empty()) throw std::invalid_argument("empirical_quantile: empty sample");
    if (!(level > 0.0 && level < 1.0))
        throw std::invalid_argument("empirical_quantile: level in (0,1) required");
    std::sort(values.begin(), values.end());
    auto idx = static_cast<std::size_t>(std::floor(level * (values.size() - 1)));
    return values[idx];
}

double mc_critical_value(Eigen::Index n, int d, double a, const SimulationConfig& cfg) {
    return empirical_quantile(simulate_null_scaled(n, d, a, cfg), cfg.level);
}

double mc_pvalue(const Matrix& data, double a, const SimulationConfig& cfg) {
    const auto n = data.rows();
    const int d = static_cast<int>(data.cols());
    double observed = scaled_t_stat(scaled_residuals(data), a);
    std::vector<double> sims = simulate_null_scaled(n, d, a, cfg);
    std::size_t count = 0;
    for (double v : sims)
        if (v >= observed) ++count;
    return static_cast<double>(count + 1) / static_cast<double>(sims.size() + 1);
}

QuadratureSpec cumulant_grid(double a, int d) {
    return {d == 1 ? 256 : 64, std::sqrt(35.0 / a)};
}

CumulantSet cumulants_numeric(double a, const QuadratureSpec& grid) {
    if (!(a > 0.0)) throw std::invalid_argument("cumulants_numeric: a > 0 required");
    if (grid.nodes_per_axis < 16)
        throw std::invalid_argument("cumulants_numeric: need at least 16 nodes");
    double radius = grid.truncation_radius > 0.0 ? grid.truncation_radius : std::sqrt(35.0 / a);
    GaussLegendre rule = gauss_legendre(grid.nodes_per_axis, radius);
    const int m = grid.nodes_per_axis;

    // Symmetrized discretization D^{1/2} K D^{1/2} with D = diag(w_a * weight);
    // tr(A^p) then discretizes the iterated-kernel trace integral.
    Vector dhalf(m);
    for (int i = 0; i < m; ++i)
        dhalf[i] = std::sqrt(std::exp(-a * rule.nodes[i] * rule.nodes[i]) * rule.weights[i]);
    Matrix kernel(m, m);
    Vector s(1), t(1);
    for (int i = 0; i < m; ++i) {
        s[0] = rule.nodes[i];
        for (int j = 0; j <= i; ++j) {
            t[0] = rule.nodes[j];
            double v = kernel_K(s, t)(0, 0) * dhalf[i] * dhalf[j];
            kernel(i, j) = v;
            kernel(j, i) = v;
        }
    }

    CumulantSet out;
    out.a = a;
    Matrix power = kernel;
    double factor = 1.0;  // 2^{m-1} (m-1)!
    for (int p = 1; p <= 4; ++p) {
        if (p > 1) {
            power = power * kernel;
            factor *= 2.0 * (p - 1);
        }
        out.kappa[p - 1] = factor * power.trace();
    }
    double closed_mean = mean_limit(a, 1);
    if (std::abs(out.kappa[0] - closed_mean) > 1e-6 * std::abs(closed_mean))
        throw AccuracyError("cumulants_numeric: grid too coarse (kappa_1 misses the closed-form mean)");
    out.beta1 = out.kappa[2] / std::pow(out.kappa[1], 1.5);
    out.beta2 = 3.0 + out.kappa[3] / (out.kappa[1] * out.kappa[1]);
    return out;
}

std::vector<double> nystrom_eigenvalues(double a, int d, const QuadratureSpec& grid) {
    if (!(a > 0.0)) throw std::invalid_argument("nystrom_eigenvalues: a > 0 required");
    if (d != 1 && d != 2)
        throw UnsupportedDimensionError("nystrom_eigenvalues: supports d in {1,2}");
    double radius = grid.truncation_radius > 0.0 ? grid.truncation_radius : std::sqrt(35.0 / a);
    GaussLegendre rule = gauss_legendre(grid.nodes_per_axis, radius);
    const int m = grid.nodes_per_axis;

    const int points = d == 1 ? m : m * m;
    std::vector<Vector> nodes(points, Vector(d));
    Vector dhalf(points);
    for (int p = 0; p < points; ++p) {
        double weight = 1.0;
        int rem = p;
        for (int k = 0; k < d; ++k) {
            int idx = rem % m;
            rem /= m;
            nodes[p][k] = rule.nodes[idx];
            weight *= rule.weights[idx];
        }
        dhalf[p] = std::sqrt(std::exp(-a * nodes[p].squaredNorm()) * weight);
    }

    // matrix-valued kernel: the operator acts on R^d-valued functions
    Matrix big(points * d, points * d);
    for (int p = 0; p < points; ++p) {
        for (int q = 0; q <= p; ++q) {
            Matrix block = kernel_K(nodes[p], nodes[q]) * (dhalf[p] * dhalf[q]);
            big.block(p * d, q * d, d, d) = block;
            big.block(q * d, p * d, d, d) = block.transpose();
        }
    }
    big = (big + big.transpose()) / 2.0;

    Eigen::SelfAdjointEigenSolver<Matrix> solver(big, Eigen::EigenvaluesOnly);
    std::vector<double> eigenvalues(solver.eigenvalues().data(),
                                    solver.eigenvalues().data() + points * d);
    for (double& v : eigenvalues) v = std::max(v, 0.0);
    std::sort(eigenvalues.rbegin(), eigenvalues.rend());
    return eigenvalues;
}

}  // namespace mvnstein
