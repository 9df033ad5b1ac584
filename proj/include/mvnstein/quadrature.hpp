#pragma once

#include "mvnstein/common.hpp"

#include <vector>

namespace mvnstein {

// Tensor-product Gauss-Legendre grid over [-R, R]^d. The truncation radius is
// sized so the neglected tail of w_a(t) = exp(-a*|t|^2) is negligible.
struct QuadratureSpec {
    int nodes_per_axis = 64;
    double truncation_radius = 0.0;  // <= 0: derive from the weight parameter

    static QuadratureSpec for_weight(double a, int nodes = 64) {
        return {nodes, std::sqrt(30.0 / a)};
    }
};

struct GaussLegendre {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

// Nodes and weights by Newton iteration on the Legendre polynomial.
GaussLegendre gauss_legendre(int n);

// Same rule mapped onto [-R, R].
GaussLegendre gauss_legendre(int n, double radius);

// Standard normal quantile (Wichura AS241, |error| < 1e-13).
double normal_quantile(double p);

}  // namespace mvnstein
