#include "dmlpg/mls/gmls.hpp"

#include "dmlpg/mls/weight.hpp"

#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

namespace dmlpg {

Matrix MomentSystem::shape_operator() const
{
    Matrix ptw = P.transpose() * weights.asDiagonal();
    return factor.solve(ptw);
}

MomentSystem build_moment_system(const Point& center, double support, const NodeSet& nodes,
                                 const std::vector<Index>& active, const GmlsSettings& settings, Index node)
{
    const WeightFunction weight(settings.epsilon);
    const PolyBasis basis(nodes.dim, settings.degree, center, support);
    MomentSystem ms;
    ms.center = center;
    ms.scale = support;
    ms.dim = nodes.dim;
    ms.degree = settings.degree;

    std::vector<double> w;
    ms.active.reserve(active.size());
    w.reserve(active.size());
    for (Index j : active) {
        const double wj = weight(center, nodes.points[j], support);
        if (wj > 0.0) {
            ms.active.push_back(j);
            w.push_back(wj);
        }
    }
    const int q = basis.size();
    const Index n = static_cast<Index>(ms.active.size());
    ms.P.resize(n, q);
    ms.weights = Eigen::Map<const Vector>(w.data(), n);
    for (Index r = 0; r < n; ++r) ms.P.row(r) = basis.eval_local(nodes.points[ms.active[r]] - center).transpose();

    auto deficient = [&](double cond) {
        std::ostringstream msg;
        msg << "node deficiency at (" << center.head(nodes.dim).transpose() << ")";
        if (node >= 0) msg << " for node " << node;
        msg << ": " << n << " active nodes, condition estimate " << cond;
        return NodeDeficiencyError(msg.str(), center, cond, node);
    };
    if (n < q) throw deficient(std::numeric_limits<double>::infinity());

    const Matrix a = ms.P.transpose() * ms.weights.asDiagonal() * ms.P;
    ms.factor.compute(a);
    if (ms.factor.info() != Eigen::Success) throw deficient(std::numeric_limits<double>::infinity());
    const double rc = ms.factor.rcond();
    ms.condition = rc > 0 ? 1.0 / rc : std::numeric_limits<double>::infinity();
    if (!(ms.condition <= settings.max_condition)) throw deficient(ms.condition);
    return ms;
}

MomentSystem build_moment_system(const Point& center, double support, const NeighborSearch& search,
                                 const GmlsSettings& settings, Index node)
{
    return build_moment_system(center, support, search.nodes(), search.within(center, support), settings, node);
}

Vector GmlsRow::apply(const Vector& nodal) const
{
    Vector out = Vector::Zero(coefficients.rows());
    for (std::size_t j = 0; j < active.size(); ++j) out += coefficients.col(j) * nodal[active[j]];
    return out;
}

GmlsRow gmls_row(const Matrix& lambda_p, const MomentSystem& moment)
{
    if (lambda_p.cols() != basis_size(moment.dim, moment.degree))
        throw Error("gmls row: functional values do not match the basis size");
    GmlsRow row;
    row.active = moment.active;
    // lambda(p) A^{-1} = (A^{-1} lambda(p)^T)^T since A is symmetric
    const Matrix y = moment.factor.solve(lambda_p.transpose());
    row.coefficients = (moment.P * y).transpose();
    for (Index j = 0; j < row.coefficients.cols(); ++j) row.coefficients.col(j) *= moment.weights[j];
    return row;
}

GmlsRow mls_shape(const Point& x, const NeighborSearch& search, const GmlsSettings& settings)
{
    return gmls_derivative_row(x, {0, 0, 0}, search, settings);
}

GmlsRow gmls_derivative_row(const Point& x, const MultiIndex& alpha, const NeighborSearch& search,
                            const GmlsSettings& settings)
{
    const double delta = search.support_at(x);
    const MomentSystem ms = build_moment_system(x, delta, search, settings);
    const Vector lp = ms.basis().eval_local(Point::Zero(), alpha);
    return gmls_row(lp.transpose(), ms);
}

void write_gmls_row(std::ostream& out, const GmlsRow& row)
{
    out << "# gmls row: index coefficients\n";
    out << std::setprecision(17);
    for (std::size_t j = 0; j < row.active.size(); ++j) {
        out << row.active[j];
        for (Index r = 0; r < row.coefficients.rows(); ++r) out << ' ' << row.coefficients(r, j);
        out << '\n';
    }
}

}  // namespace dmlpg
