#include "mvnstein/inference.hpp"

#include "mvnstein/quadrature.hpp"
#include "mvnstein/statistic.hpp"

#include <cmath>

namespace mvnstein {

HelperIntegrals helper_integrals(double a, const Vector& x, const Vector& y) {
    if (!(a > 0.0)) throw std::invalid_argument("helper_integrals: a > 0 required");
    const int d = static_cast<int>(x.size());
    HelperIntegrals out;

    double xx = x.squaredNorm();
    double decay_x = std::exp(-xx / (4.0 * a + 2.0));
    double c1 = std::pow(2.0 * kPi, d / 2.0) / std::pow(2.0 * a + 1.0, d / 2.0 + 1.0);
    out.l1 = c1 * decay_x * x;
    double c2 = std::pow(2.0 * kPi, d / 2.0) / std::pow(2.0 * a + 1.0, d / 2.0 + 2.0);
    out.l2 = c2 * decay_x * ((2.0 * a + 1.0) * x - xx * x);

    Vector diff = x - y;
    double gauss = std::pow(kPi / a, d / 2.0) * std::exp(-diff.squaredNorm() / (4.0 * a));
    out.i1 = gauss;
    out.i2 = gauss / (2.0 * a) * diff;
    return out;
}

HelperIntegrals helper_integrals(double a, const Vector& x) {
    return helper_integrals(a, x, x);
}

int SigmaHatResult::block_index(int i, int j) {
    // (1,1),(1,2),...,(1,5),(2,2),...,(5,5)
    return (i - 1) * (11 - i) / 2 + (j - i);
}

namespace {

struct PTables {
    Matrix g;       // I1(Y_i, Y_k)
    Matrix i2;      // I2(Y_i, Y_k) in row i*n + k
    Matrix l1, l2;  // L1(Y_k), L2(Y_k) in row k
};

PTables build_tables(const Matrix& y, double a) {
    const auto n = y.rows();
    const auto d = y.cols();
    PTables t;
    t.g.resize(n, n);
    t.i2.resize(n * n, d);
    t.l1.resize(n, d);
    t.l2.resize(n, d);
    for (Eigen::Index k = 0; k < n; ++k) {
        HelperIntegrals h = helper_integrals(a, y.row(k).transpose());
        t.l1.row(k) = h.l1.transpose();
        t.l2.row(k) = h.l2.transpose();
    }
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index k = 0; k < n; ++k) {
            HelperIntegrals h = helper_integrals(a, y.row(i).transpose(), y.row(k).transpose());
            t.g(i, k) = h.i1;
            t.i2.row(i * n + k) = h.i2.transpose();
        }
    return t;
}

SigmaHatResult assemble(const std::array<std::array<double, 5>, 5>& blocks) {
    SigmaHatResult out;
    double total = 0.0;
    for (int i = 1; i <= 5; ++i)
        for (int j = i; j <= 5; ++j) {
            double v = blocks[i - 1][j - 1];
            out.blocks[SigmaHatResult::block_index(i, j)] = v;
            total += i == j ? v : 2.0 * v;
        }
    out.value = clamp_nonnegative(total);
    return out;
}

}  // namespace

SigmaHatResult sigma_hat_naive(const StandardizedSample& sample, double a) {
    const Matrix& y = sample.residuals;
    const auto n = y.rows();
    if (n > 12)
        throw TooLargeForNaiveError("sigma_hat_naive: restricted to n <= 12 (O(n^5) cost)");
    const int d = static_cast<int>(y.cols());
    const double nd = static_cast<double>(n);
    PTables tab = build_tables(y, a);
    Matrix id = Matrix::Identity(d, d);

    auto p1 = [&](Eigen::Index i, Eigen::Index j) {
        return y.row(i).dot(y.row(j)) * tab.g(i, j) - tab.l1.row(j).dot(y.row(j));
    };
    auto p2 = [&](Eigen::Index i, Eigen::Index j, Eigen::Index k) {
        return y.row(i).dot(y.row(j)) * tab.g(i, k) - tab.l1.row(k).dot(y.row(j));
    };
    auto p3 = [&](Eigen::Index i, Eigen::Index j, Eigen::Index k) {
        return y.row(i).dot(y.row(k)) * y.row(j).dot(tab.i2.row(i * n + k)) -
               y.row(j).dot(tab.l2.row(k));
    };
    auto p4 = [&](Eigen::Index i, Eigen::Index j, Eigen::Index k) {
        Matrix m = y.row(j).transpose() * y.row(j) + id;
        Vector mk = m * y.row(k).transpose();
        Vector ml = m * tab.l1.row(k).transpose();
        return y.row(i).dot(mk) * tab.g(i, k) - y.row(k).dot(ml);
    };
    auto p5 = [&](Eigen::Index i, Eigen::Index j, Eigen::Index k) {
        Matrix m = y.row(j).transpose() * y.row(j) - id;
        Vector mi = m * tab.i2.row(i * n + k).transpose();
        Vector ml = m * tab.l2.row(k).transpose();
        return y.row(i).dot(y.row(k)) * y.row(k).dot(mi) - y.row(k).dot(ml);
    };

    std::array<std::array<double, 5>, 5> blocks{};
    double n3 = nd * nd * nd, n4 = n3 * nd, n5 = n4 * nd;

    {
        KahanSum s;
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j)
                for (Eigen::Index k = 0; k < n; ++k) s.add(p1(i, j) * p1(k, j));
        blocks[0][0] = 4.0 / n3 * s.value();
    }
    // the (1,m) blocks share the quadruple-sum shape
    auto quad_block = [&](auto&& pm, double coeff) {
        KahanSum s;
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) {
                double p1ij = p1(i, j);
                for (Eigen::Index k = 0; k < n; ++k)
                    for (Eigen::Index l = 0; l < n; ++l) s.add(p1ij * pm(l, j, k));
            }
        return coeff / n4 * s.value();
    };
    blocks[0][1] = quad_block(p2, -4.0);
    blocks[0][2] = quad_block(p3, -4.0);
    blocks[0][3] = quad_block(p4, -2.0);
    blocks[0][4] = quad_block(p5, -2.0);

    auto quint_block = [&](auto&& pa, auto&& pb, double coeff) {
        KahanSum s;
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j)
                for (Eigen::Index k = 0; k < n; ++k) {
                    double paijk = pa(i, j, k);
                    for (Eigen::Index l = 0; l < n; ++l)
                        for (Eigen::Index m = 0; m < n; ++m) s.add(paijk * pb(m, j, l));
                }
        return coeff / n5 * s.value();
    };
    blocks[1][1] = quint_block(p2, p2, 4.0);
    blocks[1][2] = quint_block(p2, p3, 4.0);
    blocks[1][3] = quint_block(p2, p4, 2.0);
    blocks[1][4] = quint_block(p2, p5, 2.0);
    blocks[2][2] = quint_block(p3, p3, 4.0);
    blocks[2][3] = quint_block(p3, p4, 2.0);
    blocks[2][4] = quint_block(p3, p5, 2.0);
    blocks[3][3] = quint_block(p4, p4, 1.0);
    blocks[3][4] = quint_block(p4, p5, 1.0);
    blocks[4][4] = quint_block(p5, p5, 1.0);
    return assemble(blocks);
}

SigmaHatResult sigma_hat(const StandardizedSample& sample, double a) {
    if (!(a > 0.0)) throw std::invalid_argument("sigma_hat: a > 0 required");
    const Matrix& y = sample.residuals;
    const auto n = y.rows();
    const int d = static_cast<int>(y.cols());
    const double nd = static_cast<double>(n);
    PTables tab = build_tables(y, a);

    // Per-observation inner products q_j^{(m)} = <z_n, W_j-part m>; every
    // block is sigma^{i,j} = (4/n) sum_k q_k^{(i)} q_k^{(j)}.
    Matrix q(5, n);

    Matrix u = tab.g * y;  // u_k = sum_i G(i,k) Y_i (G is symmetric)
    Vector sum_l1 = tab.l1.colwise().sum().transpose();
    Vector sum_l2 = tab.l2.colwise().sum().transpose();

    for (Eigen::Index j = 0; j < n; ++j)
        q(0, j) = u.row(j).dot(y.row(j)) / nd - tab.l1.row(j).dot(y.row(j));

    Vector v2 = u.colwise().sum().transpose() - nd * sum_l1;
    Vector w3 = -nd * sum_l2;
    Matrix c5 = Matrix::Zero(d, d);
    double c5s = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index k = 0; k < n; ++k) {
            double dot = y.row(i).dot(y.row(k));
            auto i2 = tab.i2.row(i * n + k);
            w3 += dot * i2.transpose();
            c5 += dot * y.row(k).transpose() * i2;
            c5s += dot * y.row(k).dot(i2);
        }

    Matrix m4 = u.transpose() * y;  // sum_k u_k Y_k'
    double tr_m4 = m4.trace();
    Matrix b4 = y.transpose() * tab.l1;  // sum_k Y_k L1(Y_k)'
    double tr_b4 = b4.trace();
    Matrix d5 = y.transpose() * tab.l2;
    double d5s = d5.trace();

    const double n2 = nd * nd;
    for (Eigen::Index j = 0; j < n; ++j) {
        Vector yj = y.row(j).transpose();
        q(1, j) = -yj.dot(v2) / n2;
        q(2, j) = -yj.dot(w3) / n2;
        q(3, j) = -(yj.dot(m4 * yj) + tr_m4 - nd * (yj.dot(b4 * yj) + tr_b4)) / (2.0 * n2);
        q(4, j) = -(yj.dot(c5 * yj) - c5s - nd * (yj.dot(d5 * yj) - d5s)) / (2.0 * n2);
    }

    std::array<std::array<double, 5>, 5> blocks{};
    for (int i = 0; i < 5; ++i)
        for (int j = i; j < 5; ++j)
            blocks[i][j] = 4.0 / nd * q.row(i).dot(q.row(j));
    return assemble(blocks);
}

ConfidenceInterval confidence_interval(const Matrix& data, double a, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("confidence_interval: alpha in (0,1) required");
    StandardizedSample sample = scaled_residuals(data);
    const double nd = static_cast<double>(sample.n());
    double center = t_stat(sample, a) / nd;
    double sigma = std::sqrt(sigma_hat(sample, a).value);
    double z = normal_quantile(1.0 - alpha / 2.0);
    ConfidenceInterval ci;
    ci.level = 1.0 - alpha;
    ci.center = center;
    ci.halfwidth = sigma / std::sqrt(nd) * z;
    ci.lower = center - ci.halfwidth;
    ci.upper = center + ci.halfwidth;
    return ci;
}

namespace {

// 1-D CF factors g and g' of the three analytic alternatives point by point;
// removable singularities handled by Taylor series below |t| < 1e-4.
struct CfFactor {
    double (*g)(double);
    double (*gp)(double);
};

double uniform_g(double t) {
    if (std::abs(t) < 1e-4) {
        double t2 = t * t;
        return 1.0 - t2 / 2.0 + 3.0 * t2 * t2 / 40.0 - 3.0 * t2 * t2 * t2 / 560.0 +
               81.0 / 362880.0 * t2 * t2 * t2 * t2;
    }
    double x = std::sqrt(3.0) * t;
    return std::sin(x) / x;
}

double uniform_gp(double t) {
    if (std::abs(t) < 1e-4) {
        double t2 = t * t;
        return t * (-1.0 + 0.3 * t2 - 9.0 / 280.0 * t2 * t2 + 648.0 / 362880.0 * t2 * t2 * t2);
    }
    double s3 = std::sqrt(3.0);
    return (3.0 * std::cos(s3 * t) * t - s3 * std::sin(s3 * t)) / (3.0 * t * t);
}

double laplace_g(double t) { return 2.0 / (2.0 + t * t); }
double laplace_gp(double t) {
    double denom = 2.0 + t * t;
    return -4.0 * t / (denom * denom);
}

double logistic_g(double t) {
    if (std::abs(t) < 1e-4) {
        double t2 = t * t;
        return 1.0 - t2 / 2.0 + 7.0 * t2 * t2 / 40.0 - 31.0 * t2 * t2 * t2 / 560.0 +
               10287.0 / 604800.0 * t2 * t2 * t2 * t2;
    }
    double x = std::sqrt(3.0) * t;
    return x / std::sinh(x);
}

double logistic_gp(double t) {
    if (std::abs(t) < 1e-4) {
        double t2 = t * t;
        return t * (-1.0 + 0.7 * t2 - 93.0 / 280.0 * t2 * t2 + 82296.0 / 604800.0 * t2 * t2 * t2);
    }
    double s3 = std::sqrt(3.0);
    double sh = std::sinh(s3 * t);
    return (s3 * sh - 3.0 * t * std::cosh(s3 * t)) / (sh * sh);
}

CfFactor cf_factor(const AlternativeSpec& alt) {
    using Kind = AlternativeSpec::Kind;
    switch (alt.kind) {
        case Kind::kIIDUniform: return {uniform_g, uniform_gp};
        case Kind::kIIDLaplace: return {laplace_g, laplace_gp};
        case Kind::kIIDLogistic: return {logistic_g, logistic_gp};
        default:
            throw std::invalid_argument(
                "delta_numeric: analytic CF available for uniform, laplace, logistic only");
    }
}

double delta_once(const CfFactor& cf, double a, int d, int nodes) {
    double radius = std::sqrt(35.0 / a);
    GaussLegendre rule = gauss_legendre(nodes, radius);
    if (d == 1) {
        KahanSum acc;
        for (int i = 0; i < nodes; ++i) {
            double t = rule.nodes[i];
            double diff = cf.gp(t) + t * std::exp(-t * t / 2.0);
            acc.add(rule.weights[i] * diff * diff * std::exp(-a * t * t));
        }
        return acc.value();
    }
    std::vector<double> g(nodes), gp(nodes);
    for (int i = 0; i < nodes; ++i) {
        g[i] = cf.g(rule.nodes[i]);
        gp[i] = cf.gp(rule.nodes[i]);
    }
    KahanSum acc;
    for (int i = 0; i < nodes; ++i) {
        double ti = rule.nodes[i];
        for (int j = 0; j < nodes; ++j) {
            double tj = rule.nodes[j];
            double tt = ti * ti + tj * tj;
            double psi = std::exp(-tt / 2.0);
            double d1 = gp[i] * g[j] + ti * psi;
            double d2 = g[i] * gp[j] + tj * psi;
            acc.add(rule.weights[i] * rule.weights[j] * (d1 * d1 + d2 * d2) *
                    std::exp(-a * tt));
        }
    }
    return acc.value();
}

}  // namespace

DeltaValue delta_numeric(const AlternativeSpec& alt, double a, int d) {
    if (!(a > 0.0)) throw std::invalid_argument("delta_numeric: a > 0 required");
    if (d < 1 || d > 2)
        throw UnsupportedDimensionError("delta_numeric: supports d in {1,2}");
    DeltaValue out;
    out.a = a;
    out.alternative = alt;
    out.alternative.d = d;
    out.method = DeltaValue::Method::kQuadrature;
    if (alt.kind == AlternativeSpec::Kind::kStandardNormal) {
        out.value = 0.0;  // the integrand vanishes identically
        return out;
    }
    CfFactor cf = cf_factor(alt);
    double prev = delta_once(cf, a, d, 64);
    for (int nodes : {128, 256, 512}) {
        double next = delta_once(cf, a, d, nodes);
        if (std::abs(next - prev) < 1e-7) {
            out.value = next;
            return out;
        }
        prev = next;
    }
    out.value = prev;
    return out;
}

DeltaLimits delta_limits(const AlternativeSpec& alt, int d, const SimulationConfig& cfg) {
    AlternativeSpec spec = alt;
    spec.d = d;
    spec.validate();
    const Eigen::Index pairs = cfg.reps;
    if (pairs < 2) throw std::invalid_argument("delta_limits: need reps >= 2");

    // one stream, split in half: pair i is (row i, row pairs + i)
    Matrix raw = draw(spec, 2 * pairs, RngStream{cfg.seed, 0});
    Vector mu = population_mean(spec);
    Matrix root = sym_inv_sqrt(population_cov(spec));
    Matrix x = (raw.rowwise() - mu.transpose()) * root;

    KahanSum inf_sum, inf_sq;
    for (Eigen::Index i = 0; i < pairs; ++i) {
        auto x1 = x.row(i);
        auto x2 = x.row(pairs + i);
        double dot = x1.dot(x2);
        double h = dot * x1.squaredNorm() * x2.squaredNorm() + 2.0 * dot * dot * dot;
        inf_sum.add(h);
        inf_sq.add(h * h);
    }
    double m = static_cast<double>(pairs);
    double inf_mean = inf_sum.value() / m;
    double inf_var = std::max(0.0, inf_sq.value() / m - inf_mean * inf_mean);

    KahanSum zero_sum, zero_sq;
    for (Eigen::Index i = 0; i < 2 * pairs; ++i) {
        double norm2 = x.row(i).squaredNorm();
        double h = norm2 * std::exp(-norm2 / 2.0);
        zero_sum.add(h);
        zero_sq.add(h * h);
    }
    double m2 = 2.0 * m;
    double zero_mean = zero_sum.value() / m2;
    double zero_var = std::max(0.0, zero_sq.value() / m2 - zero_mean * zero_mean);
    double coeff = std::pow(2.0, d / 2.0 + 1.0);

    DeltaLimits out;
    out.lim_inf_scaled = inf_mean;
    out.lim_inf_se = std::sqrt(inf_var / m);
    out.lim_zero_scaled = d / 2.0 - coeff * zero_mean;
    out.lim_zero_se = coeff * std::sqrt(zero_var / m2);
    return out;
}

}  // namespace mvnstein
