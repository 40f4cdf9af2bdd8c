#include "dmlpg/assembly/recovery.hpp"

namespace dmlpg {

FieldRecovery::FieldRecovery(const NodeSet& nodes, const MaterialModel& material, const Vector& u,
                             GmlsSettings settings)
    : nodes_(&nodes), search_(nodes), D_(elastic_matrix(material)), u_(u), settings_(settings)
{
    if (u.size() != nodes.dim * nodes.size()) throw Error("field recovery: solution size does not match the node set");
}

FieldRecovery::Sample FieldRecovery::at(const Point& x) const
{
    const int d = nodes_->dim;
    const MomentSystem ms = build_moment_system(x, search_.support_at(x), search_, settings_);
    const PolyBasis basis = ms.basis();
    Matrix lp(1 + d, basis.size());
    lp.row(0) = basis.eval_local(Point::Zero()).transpose();
    for (int a = 0; a < d; ++a) {
        MultiIndex alpha{0, 0, 0};
        alpha[a] = 1;
        lp.row(1 + a) = basis.eval_local(Point::Zero(), alpha).transpose();
    }
    const GmlsRow row = gmls_row(lp, ms);

    // values (row 0) and gradient (rows 1..d) of each displacement component
    Matrix grad(d, d);  // grad(c, a) = d u_c / d x_a
    Sample s;
    s.displacement = Vector::Zero(d);
    grad.setZero();
    for (std::size_t j = 0; j < row.active.size(); ++j) {
        const Index node = row.active[j];
        for (int c = 0; c < d; ++c) {
            const double uc = u_[d * node + c];
            s.displacement[c] += row.coefficients(0, Index(j)) * uc;
            for (int a = 0; a < d; ++a) grad(c, a) += row.coefficients(1 + a, Index(j)) * uc;
        }
    }
    if (d == 2) {
        s.strain = Eigen::Vector3d(grad(0, 0), grad(1, 1), grad(0, 1) + grad(1, 0));
    } else {
        s.strain.resize(6);
        s.strain << grad(0, 0), grad(1, 1), grad(2, 2), grad(1, 2) + grad(2, 1), grad(0, 2) + grad(2, 0),
            grad(0, 1) + grad(1, 0);
    }
    s.stress = D_ * s.strain;
    s.von_mises = von_mises(s.stress);
    return s;
}

}  // namespace dmlpg
