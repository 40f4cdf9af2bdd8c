#include "dmlpg/assembly/test_function.hpp"

#include "dmlpg/mls/weight.hpp"

#include <cmath>

namespace dmlpg {

double TestFunction::value(const Point& y) const
{
    switch (kind) {
    case TestKind::unit:
        return 1.0;
    case TestKind::box: {
        double v = 1.0;
        for (int a = 0; a < dim; ++a) v *= 1.0 - 4.0 * y[a] * y[a] / (size * size);
        return v;
    }
    case TestKind::gaussian:
        return gaussian_profile(y.head(dim).norm() / size, epsilon);
    }
    return 0.0;
}

Point TestFunction::gradient(const Point& y) const
{
    Point g = Point::Zero();
    switch (kind) {
    case TestKind::unit:
        break;
    case TestKind::box: {
        double f[3];
        for (int a = 0; a < dim; ++a) f[a] = 1.0 - 4.0 * y[a] * y[a] / (size * size);
        for (int a = 0; a < dim; ++a) {
            double d = -8.0 * y[a] / (size * size);
            for (int b = 0; b < dim; ++b)
                if (b != a) d *= f[b];
            g[a] = d;
        }
        break;
    }
    case TestKind::gaussian: {
        const double r = y.head(dim).norm();
        if (r > 0.0) g.head(dim) = gaussian_profile_derivative(r / size, epsilon) / (size * r) * y.head(dim);
        break;
    }
    }
    return g;
}

bool TestFunction::vanishes_on(const BoundaryPiece& piece) const
{
    switch (kind) {
    case TestKind::unit:
        return false;
    case TestKind::box:
        return piece.kind == PieceKind::box_face && std::abs(std::abs(piece.position) - 0.5 * size) == 0.0;
    case TestKind::gaussian:
        return piece.kind == PieceKind::arc || piece.kind == PieceKind::sphere_patch;
    }
    return false;
}

TestFunction make_test_function(const Subdomain& sd, bool unit, double epsilon)
{
    TestFunction t;
    t.dim = sd.dim;
    t.size = sd.size;
    t.epsilon = epsilon;
    if (unit) t.kind = TestKind::unit;
    else t.kind = sd.shape == SubdomainShape::box ? TestKind::box : TestKind::gaussian;
    return t;
}

}  // namespace dmlpg
