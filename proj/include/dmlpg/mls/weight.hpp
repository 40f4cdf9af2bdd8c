#pragma once

#include "dmlpg/common.hpp"

#include <cmath>

namespace dmlpg {

/// Truncated Gaussian profile phi(r) on [0, 1], zero for r >= 1.
inline double gaussian_profile(double r, double epsilon)
{
    if (r >= 1.0) return 0.0;
    const double tail = std::exp(-epsilon * epsilon);
    return (std::exp(-(epsilon * r) * (epsilon * r)) - tail) / (1.0 - tail);
}

/// d phi / d r. Only the MLPG baseline and the test functions use this.
inline double gaussian_profile_derivative(double r, double epsilon)
{
    if (r >= 1.0) return 0.0;
    const double tail = std::exp(-epsilon * epsilon);
    return -2.0 * epsilon * epsilon * r * std::exp(-(epsilon * r) * (epsilon * r)) / (1.0 - tail);
}

/// Compactly supported Gaussian weight w(x, y) = phi(|x - y| / delta).
/// Exposes values only.
class WeightFunction {
public:
    explicit WeightFunction(double epsilon = 4.0) : epsilon_(epsilon)
    {
        if (!(epsilon > 0)) throw Error("weight function: epsilon must be positive");
    }

    double epsilon() const { return epsilon_; }

    double operator()(const Point& x, const Point& y, double delta) const
    {
        if (!(delta > 0)) throw Error("weight function: support radius must be positive");
        return gaussian_profile((x - y).norm() / delta, epsilon_);
    }

private:
    double epsilon_;
};

inline double weight_eval(const Point& x, const Point& y, double epsilon, double delta)
{
    return WeightFunction(epsilon)(x, y, delta);
}

}  // namespace dmlpg
