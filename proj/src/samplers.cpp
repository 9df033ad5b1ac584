#include "mvnstein/samplers.hpp"

#include <cmath>
#include <sstream>

namespace mvnstein {

namespace {

std::vector<double> parse_params(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad alternative parameter '" + item + "'");
        }
    }
    return out;
}

}  // namespace

std::string AlternativeSpec::name() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::kStandardNormal: os << "standard-normal"; break;
        case Kind::kNMix1: os << "nmix1"; break;
        case Kind::kNMix2: os << "nmix2"; break;
        case Kind::kMvt: os << "mvt:" << param1; break;
        case Kind::kIIDChi2: os << "chi2:" << param1; break;
        case Kind::kIIDGamma: os << "gamma:" << param1 << "," << param2; break;
        case Kind::kIIDLogistic: os << "logistic"; break;
        case Kind::kIIDUniform: os << "uniform"; break;
        case Kind::kIIDLaplace: os << "laplace"; break;
        case Kind::kIIDPearson7: os << "pearson7:" << param1; break;
    }
    return os.str();
}

void AlternativeSpec::validate() const {
    if (d < 1) throw std::invalid_argument("alternative: d >= 1 required");
    switch (kind) {
        case Kind::kMvt:
        case Kind::kIIDChi2:
            if (!(param1 > 0.0))
                throw std::invalid_argument("alternative: degrees of freedom must be positive");
            break;
        case Kind::kIIDGamma:
            if (!(param1 > 0.0) || !(param2 > 0.0))
                throw std::invalid_argument("alternative: gamma shape and rate must be positive");
            break;
        case Kind::kIIDPearson7:
            if (!(param1 > 0.0))
                throw std::invalid_argument("alternative: Pearson VII parameter must be positive");
            break;
        default:
            break;
    }
}

AlternativeSpec parse_alternative(const std::string& text, int d) {
    std::string name = text;
    std::string params;
    if (auto pos = text.find(':'); pos != std::string::npos) {
        name = text.substr(0, pos);
        params = text.substr(pos + 1);
    }
    std::vector<double> p = parse_params(params);
    AlternativeSpec spec;
    auto need = [&](std::size_t k) {
        if (p.size() != k)
            throw std::invalid_argument("alternative '" + name + "' expects " +
                                        std::to_string(k) + " parameter(s)");
    };
    if (name == "standard-normal" || name == "normal") {
        need(0);
        spec = AlternativeSpec::standard_normal(d);
    } else if (name == "nmix1") {
        need(0);
        spec = AlternativeSpec::nmix1(d);
    } else if (name == "nmix2") {
        need(0);
        spec = AlternativeSpec::nmix2(d);
    } else if (name == "mvt" || name == "t") {
        need(1);
        spec = AlternativeSpec::mvt(p[0], d);
    } else if (name == "chi2") {
        need(1);
        spec = AlternativeSpec::iid_chi2(p[0], d);
    } else if (name == "gamma") {
        need(2);
        spec = AlternativeSpec::iid_gamma(p[0], p[1], d);
    } else if (name == "logistic") {
        need(0);
        spec = AlternativeSpec::iid_logistic(d);
    } else if (name == "uniform") {
        need(0);
        spec = AlternativeSpec::iid_uniform(d);
    } else if (name == "laplace") {
        need(0);
        spec = AlternativeSpec::iid_laplace(d);
    } else if (name == "pearson7") {
        need(1);
        spec = AlternativeSpec::iid_pearson7(p[0], d);
    } else {
        throw std::invalid_argument("unknown alternative '" + name + "'");
    }
    spec.validate();
    return spec;
}

Matrix nmix2_correlation(int d) {
    Matrix b = Matrix::Constant(d, d, 0.9);
    b.diagonal().setOnes();
    return b;
}

Vector cholesky_correlated(const Matrix& b, const Vector& z) {
    Eigen::LLT<Matrix> llt(b);
    if (llt.info() != Eigen::Success)
        throw std::invalid_argument("cholesky_correlated: matrix is not positive definite");
    return llt.matrixL() * z;
}

Matrix draw(const AlternativeSpec& spec, Eigen::Index n, RngStream stream) {
    spec.validate();
    if (n < 1) throw std::invalid_argument("draw: need n >= 1");
    const int d = spec.d;
    Rng rng(stream);
    Matrix out(n, d);

    using Kind = AlternativeSpec::Kind;
    switch (spec.kind) {
        case Kind::kStandardNormal:
            for (Eigen::Index i = 0; i < n; ++i)
                for (int j = 0; j < d; ++j) out(i, j) = rng.normal();
            break;
        case Kind::kNMix1:
            for (Eigen::Index i = 0; i < n; ++i) {
                double shift = rng.bernoulli(0.1) ? 3.0 : 0.0;
                for (int j = 0; j < d; ++j) out(i, j) = rng.normal() + shift;
            }
            break;
        case Kind::kNMix2: {
            Eigen::LLT<Matrix> llt(nmix2_correlation(d));
            Matrix l = llt.matrixL();
            Vector z(d);
            for (Eigen::Index i = 0; i < n; ++i) {
                for (int j = 0; j < d; ++j) z[j] = rng.normal();
                bool correlated = !rng.bernoulli(0.1);
                if (correlated)
                    out.row(i) = (l * z).transpose();
                else
                    out.row(i) = z.transpose();
            }
            break;
        }
        case Kind::kMvt:
            for (Eigen::Index i = 0; i < n; ++i) {
                double w = rng.chi_squared(spec.param1);
                double scale = 1.0 / std::sqrt(w / spec.param1);
                for (int j = 0; j < d; ++j) out(i, j) = rng.normal() * scale;
            }
            break;
        case Kind::kIIDChi2:
            for (Eigen::Index i = 0; i < n; ++i)
                for (int j = 0; j < d; ++j) out(i, j) = rng.chi_squared(spec.param1);
            break;
        case Kind::kIIDGamma:
            for (Eigen::Index i = 0; i < n; ++i)
                for (int j = 0; j < d; ++j) out(i, j) = rng.gamma(spec.param1, spec.param2);
            break;
        case Kind::kIIDLogistic:
            for (Eigen::Index i = 0; i < n; ++i)
                for (int j = 0; j < d; ++j) out(i, j) = rng.logistic(std::sqrt(3.0) / kPi);
            break;
        case Kind::kIIDUniform:
            for (Eigen::Index i = 0; i < n; ++i)
                for (int j = 0; j < d; ++j)
                    out(i, j) = rng.uniform(-std::sqrt(3.0), std::sqrt(3.0));
            break;
        case Kind::kIIDLaplace:
            for (Eigen::Index i = 0; i < n; ++i)
                for (int j = 0; j < d; ++j) out(i, j) = rng.laplace(1.0 / std::sqrt(2.0));
            break;
        case Kind::kIIDPearson7:
            for (Eigen::Index i = 0; i < n; ++i)
                for (int j = 0; j < d; ++j) out(i, j) = rng.student_t(spec.param1);
            break;
    }
    return out;
}

Vector population_mean(const AlternativeSpec& spec) {
    const int d = spec.d;
    using Kind = AlternativeSpec::Kind;
    switch (spec.kind) {
        case Kind::kNMix1: return Vector::Constant(d, 0.3);
        case Kind::kIIDChi2: return Vector::Constant(d, spec.param1);
        case Kind::kIIDGamma: return Vector::Constant(d, spec.param1 / spec.param2);
        default: return Vector::Zero(d);
    }
}

Matrix population_cov(const AlternativeSpec& spec) {
    const int d = spec.d;
    using Kind = AlternativeSpec::Kind;
    switch (spec.kind) {
        case Kind::kStandardNormal:
        case Kind::kIIDLogistic:
        case Kind::kIIDUniform:
        case Kind::kIIDLaplace:
            return Matrix::Identity(d, d);
        case Kind::kNMix1: {
            // E[XX'] = I + 0.9 J, mean 0.3 per coordinate
            Matrix cov = Matrix::Constant(d, d, 0.9 - 0.09);
            cov.diagonal().array() += 1.0;
            return cov;
        }
        case Kind::kNMix2: {
            Matrix cov = 0.9 * nmix2_correlation(d);
            cov.diagonal().array() += 0.1;
            return cov;
        }
        case Kind::kMvt:
            if (!(spec.param1 > 2.0))
                throw std::invalid_argument("population_cov: mvt needs nu > 2");
            return spec.param1 / (spec.param1 - 2.0) * Matrix::Identity(d, d);
        case Kind::kIIDChi2:
            return 2.0 * spec.param1 * Matrix::Identity(d, d);
        case Kind::kIIDGamma:
            return spec.param1 / (spec.param2 * spec.param2) * Matrix::Identity(d, d);
        case Kind::kIIDPearson7:
            if (!(spec.param1 > 2.0))
                throw std::invalid_argument("population_cov: Pearson VII needs m > 2");
            return spec.param1 / (spec.param1 - 2.0) * Matrix::Identity(d, d);
    }
    throw std::logic_error("population_cov: unreachable");
}

}  // namespace mvnstein
