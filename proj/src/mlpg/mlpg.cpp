#include "dmlpg/mlpg/mlpg.hpp"

#include "dmlpg/assembly/test_function.hpp"
#include "dmlpg/elasticity/material.hpp"
#include "dmlpg/mlpg/mls_derivatives.hpp"

#include <algorithm>

namespace dmlpg {

namespace {

double reach(const Subdomain& sd)
{
    if (sd.shape == SubdomainShape::ball) return sd.size;
    double r2 = 0.0;
    for (int a = 0; a < sd.dim; ++a) {
        const double e = std::max(std::abs(sd.lo[a]), std::abs(sd.hi[a]));
        r2 += e * e;
    }
    return std::sqrt(r2);
}

}  // namespace

WeakRowProvider mlpg_provider()
{
    return [](const AssemblyContext& ctx, Index k, const MomentSystem&) {
        const auto& opt = ctx.options;
        const auto& nodes = ctx.nodes;
        const int d = nodes.dim;
        const Subdomain sd = make_subdomain(k, nodes, ctx.geometry, opt.subdomains);
        const auto rules = ctx.rules.get(sd, opt.effective_quadrature());
        const TestFunction v = make_test_function(sd, is_unit_test(opt.method), opt.gmls.epsilon);
        const Point& xk = nodes.points[k];

        WeakRow row;
        row.columns = ctx.search.within(xk, reach(sd) + nodes.max_support());
        const Index nc = static_cast<Index>(row.columns.size());
        row.block = Matrix::Zero(d, d * nc);
        std::vector<Index> slot_of;  // candidate slot per active entry
        auto accumulate = [&](const Point& y, const Matrix& left /* d x V */) {
            const auto ev = mls_shape_with_derivatives(xk + y, nodes, row.columns, opt.gmls);
            ++row.shape_evaluations;
            for (std::size_t j = 0; j < ev.active.size(); ++j) {
                const Index s = std::lower_bound(row.columns.begin(), row.columns.end(), ev.active[j]) - row.columns.begin();
                row.block.middleCols(d * s, d) += left * strain_basis(ev.gradients.col(Index(j)), d);
            }
        };

        if (v.kind != TestKind::unit) {
            const auto& rule = rules->interior;
            for (std::size_t g = 0; g < rule.size(); ++g) {
                const Point& y = rule.points[g];
                accumulate(y, -rule.weights[g] * test_strain(v.gradient(y).head(d), d) * ctx.D);
            }
        }
        for (std::size_t p = 0; p < sd.pieces.size(); ++p) {
            const auto& piece = sd.pieces[p];
            if (v.vanishes_on(piece)) continue;
            bool any_unknown = false;
            for (int i = 0; i < d; ++i) any_unknown |= !piece.traction_known(i);
            if (!any_unknown) continue;
            const auto& rule = rules->pieces[p];
            for (std::size_t g = 0; g < rule.size(); ++g) {
                const Point& y = rule.points[g];
                const double wv = rule.weights[g] * v.value(y);
                if (wv == 0.0) continue;
                Matrix nd = wv * normal_matrix(rule.normals[g], d) * ctx.D;
                for (int i = 0; i < d; ++i)
                    if (piece.traction_known(i)) nd.row(i).setZero();
                accumulate(y, nd);
            }
        }
        row.beta = weak_form_rhs(sd, *ctx.rules.get(sd, opt.data_quadrature()), v, ctx.D, ctx.data);
        row.measure = sd.measure();
        return row;
    };
}

GlobalSystem assemble_mlpg(const NodeSet& nodes, const DomainGeometry& geometry, const MaterialModel& material,
                           const BoundaryData& data, const AssemblyOptions& options)
{
    if (is_direct(options.method)) throw Error("assemble_mlpg: method is not a classical variant");
    return assemble_with(nodes, geometry, material, data, options, mlpg_provider());
}

}  // namespace dmlpg
