#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace mvnstein {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Thrown when the sample covariance is (numerically) singular, i.e. the
// smallest eigenvalue falls below 1e-12 times the largest.
class SingularCovarianceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class UnsupportedDimensionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class NumericOverflowError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Signals that a numeric procedure missed its internal accuracy target
// (e.g. a quadrature grid too coarse for the requested quantity).
class AccuracyError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class TooLargeForNaiveError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// CSV parse failure carrying the 1-based row/column location.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& msg, std::size_t row, std::size_t col)
        : std::runtime_error(msg + " (row " + std::to_string(row) + ", column " +
                             std::to_string(col) + ")"),
          row_(row), col_(col) {}

    std::size_t row() const { return row_; }
    std::size_t col() const { return col_; }

  private:
    std::size_t row_;
    std::size_t col_;
};

// Compensated (Kahan) accumulator for the tight-tolerance O(n^2) sums.
class KahanSum {
  public:
    void add(double x) {
        double y = x - c_;
        double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }

  private:
    double s_ = 0.0;
    double c_ = 0.0;
};

// Statistics of integral-of-squared-norm type are nonnegative; tiny negative
// values are cancellation artifacts and get clamped. Anything below -tol is a
// genuine defect and is reported loudly.
inline double clamp_nonnegative(double x, double tol = 1e-9) {
    if (x >= 0.0) return x;
    if (x > -tol) return 0.0;
    throw AccuracyError("nonnegative statistic evaluated to " + std::to_string(x));
}

inline constexpr double kPi = 3.14159265358979323846;

}  // namespace mvnstein
