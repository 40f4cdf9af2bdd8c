#pragma once

#include <vector>

namespace dmlpg {

struct GaussRule1d {
    std::vector<double> points;   // ascending, on [-1, 1]
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1], 1 <= n <= 64. Rules are computed
/// once per n and shared.
const GaussRule1d& gauss_legendre_1d(int n);

/// Rule mapped to [a, b].
GaussRule1d gauss_legendre_interval(int n, double a, double b);

}  // namespace dmlpg
