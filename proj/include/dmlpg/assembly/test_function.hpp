#pragma once

#include "dmlpg/common.hpp"
#include "dmlpg/geometry/subdomain.hpp"

namespace dmlpg {

enum class TestKind {
    unit,      // v = 1 (variant 5)
    box,       // prod_i (1 - 4 y_i^2 / s^2) on the unclipped box of side s
    gaussian,  // the weight profile with the support radius replaced by r_k
};

/// Test function in local coordinates y = x - x_k.
struct TestFunction {
    TestKind kind = TestKind::unit;
    int dim = 2;
    double size = 1.0;      // box side or ball radius
    double epsilon = 4.0;

    double value(const Point& y) const;
    Point gradient(const Point& y) const;

    /// True if v vanishes identically on the piece (unclipped box faces and
    /// the subdomain circle/sphere).
    bool vanishes_on(const BoundaryPiece& piece) const;
};

/// Variant 1 test function matching the subdomain shape, or v = 1 for variant 5.
TestFunction make_test_function(const Subdomain& sd, bool unit, double epsilon = 4.0);

}  // namespace dmlpg
