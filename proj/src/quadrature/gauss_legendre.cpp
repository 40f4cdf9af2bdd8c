#include "dmlpg/quadrature/gauss_legendre.hpp"

#include "dmlpg/common.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace dmlpg {

namespace {

constexpr int max_points = 64;

GaussRule1d compute(int n)
{
    GaussRule1d rule;
    rule.points.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Newton on P_n from the Chebyshev-like initial guess
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 1.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) p0 = 1.0;
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        if (n == 1) {
            x = 0.0;
            dp = 1.0;
        }
        const double w = n == 1 ? 2.0 : 2.0 / ((1.0 - x * x) * dp * dp);
        rule.points[i] = -x;
        rule.points[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.points[n / 2] = 0.0;
    return rule;
}

const std::array<GaussRule1d, max_points>& table()
{
    static const std::array<GaussRule1d, max_points> rules = [] {
        std::array<GaussRule1d, max_points> r;
        for (int n = 1; n <= max_points; ++n) r[n - 1] = compute(n);
        return r;
    }();
    return rules;
}

}  // namespace

const GaussRule1d& gauss_legendre_1d(int n)
{
    if (n < 1 || n > max_points)
        throw Error("gauss-legendre: point count " + std::to_string(n) + " outside [1, 64]");
    return table()[n - 1];
}

GaussRule1d gauss_legendre_interval(int n, double a, double b)
{
    const auto& ref = gauss_legendre_1d(n);
    GaussRule1d out;
    out.points.resize(n);
    out.weights.resize(n);
    const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    for (int i = 0; i < n; ++i) {
        out.points[i] = mid + half * ref.points[i];
        out.weights[i] = half * ref.weights[i];
    }
    return out;
}

}  // namespace dmlpg
