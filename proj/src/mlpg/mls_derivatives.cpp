#include "dmlpg/mlpg/mls_derivatives.hpp"

#include "dmlpg/mls/poly_basis.hpp"
#include "dmlpg/mls/weight.hpp"

#include <limits>
#include <sstream>

namespace dmlpg {

ShapeFunctionEvaluation mls_shape_with_derivatives(const Point& x, const NodeSet& nodes,
                                                   const std::vector<Index>& candidates, const GmlsSettings& settings)
{
    const int d = nodes.dim;
    ShapeFunctionEvaluation ev;
    ev.x = x;

    std::vector<double> w, r;
    double scale = 0.0;
    for (Index j : candidates) {
        const double dist = (x - nodes.points[j]).norm();
        const double delta = nodes.support_radius[j];
        if (dist >= delta) continue;
        ev.active.push_back(j);
        w.push_back(dist);
        scale = std::max(scale, delta);
    }
    const Index n = static_cast<Index>(ev.active.size());
    // the basis center and scale are fixed constants here: shape functions do
    // not depend on the choice of basis, so x enters only through p(x) and W(x)
    const PolyBasis basis(d, settings.degree, x, scale > 0 ? scale : 1.0);
    const int q = basis.size();
    if (n < q) {
        std::ostringstream msg;
        msg << "node deficiency at (" << x.head(d).transpose() << "): " << n << " nodes cover the point";
        throw NodeDeficiencyError(msg.str(), x, std::numeric_limits<double>::infinity());
    }

    Matrix P(n, q);
    Vector weight(n);
    Matrix dweight(d, n);
    for (Index j = 0; j < n; ++j) {
        const Index node = ev.active[j];
        const Point diff = x - nodes.points[node];
        const double delta = nodes.support_radius[node];
        const double dist = w[j];
        P.row(j) = basis.eval_local(nodes.points[node] - x).transpose();
        weight[j] = gaussian_profile(dist / delta, settings.epsilon);
        const double dphi = gaussian_profile_derivative(dist / delta, settings.epsilon) / delta;
        for (int a = 0; a < d; ++a) dweight(a, j) = dist > 0 ? dphi * diff[a] / dist : 0.0;
    }

    const Matrix A = P.transpose() * weight.asDiagonal() * P;
    Eigen::LLT<Matrix> llt(A);
    const double rc = llt.info() == Eigen::Success ? llt.rcond() : 0.0;
    const double cond = rc > 0 ? 1.0 / rc : std::numeric_limits<double>::infinity();
    if (!(cond <= settings.max_condition)) {
        std::ostringstream msg;
        msg << "node deficiency at (" << x.head(d).transpose() << "): condition estimate " << cond;
        throw NodeDeficiencyError(msg.str(), x, cond);
    }

    Vector values;
    Matrix grads;
    basis.eval_gradient_local(Point::Zero(), values, grads);
    const Vector gamma = llt.solve(values);
    const Vector pg = P * gamma;  // p_j . gamma
    ev.values = pg.cwiseProduct(weight);
    ev.gradients.resize(d, n);
    for (int a = 0; a < d; ++a) {
        const Vector dw = dweight.row(a).transpose();
        const Vector dA_gamma = P.transpose() * dw.cwiseProduct(pg);
        const Vector dgamma = llt.solve(grads.row(a).transpose() - dA_gamma);
        ev.gradients.row(a) = ((P * dgamma).cwiseProduct(weight) + pg.cwiseProduct(dw)).transpose();
    }
    return ev;
}

}  // namespace dmlpg
