#include "dmlpg/assembly/dmlpg.hpp"

#include <algorithm>
#include <cstdio>

namespace dmlpg {

namespace {

std::string hex(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%a", v);
    return buf;
}

}  // namespace

std::string lambda_key(const Subdomain& sd, const MaterialModel& material, Method method,
                       const QuadratureCounts& counts, int degree, double delta, double epsilon)
{
    return to_string(method) + " m" + std::to_string(degree) + " delta " + hex(delta) + " eps " + hex(epsilon) +
           " q" + std::to_string(counts.box) + "," + std::to_string(counts.curved) + " E " + hex(material.E) +
           " nu " + hex(material.nu) + " " + to_string(material.mode) + " | " + sd.signature();
}

FunctionalRow functional_row(const Subdomain& sd, const MaterialModel& material, Method method,
                             const QuadratureCounts& counts, int degree, double delta, const BoundaryData* data,
                             double epsilon)
{
    if (!is_direct(method)) throw Error("functional row: not a direct variant");
    const SubdomainRules rules = build_rules(sd, counts);
    const TestFunction v = make_test_function(sd, is_unit_test(method), epsilon);
    const Matrix D = elastic_matrix(material);
    const PolyBasis basis(sd.dim, degree, Point::Zero(), delta);
    FunctionalRow row;
    row.node = sd.node;
    row.lambda = weak_form_lambda(sd, rules, v, D, basis);
    if (data) {
        const QuadratureCounts dc{std::max(counts.box, 10), std::max(counts.curved, 10)};
        row.beta = weak_form_rhs(sd, build_rules(sd, dc), v, D, *data);
    } else {
        row.beta = Vector::Zero(sd.dim);
    }
    row.key = lambda_key(sd, material, method, counts, degree, delta, epsilon);
    return row;
}

BlockRow collocation_row(const GmlsRow& shape, int dim, const Vector& u_bar)
{
    BlockRow row;
    row.columns = shape.active;
    const Index n = static_cast<Index>(shape.active.size());
    row.block = Matrix::Zero(dim, dim * n);
    for (Index j = 0; j < n; ++j)
        for (int i = 0; i < dim; ++i) row.block(i, dim * j + i) = shape.coefficients(0, j);
    row.rhs = u_bar.head(dim);
    return row;
}

BlockRow mixed_bc_replace(const WeakRow& weak, const GmlsRow& shape, const BoundaryTag& tag, const Vector& u_bar,
                          int dim)
{
    BlockRow row;
    std::set_union(weak.columns.begin(), weak.columns.end(), shape.active.begin(), shape.active.end(),
                   std::back_inserter(row.columns));
    const Index n = static_cast<Index>(row.columns.size());
    row.block = Matrix::Zero(dim, dim * n);
    row.rhs = weak.beta;
    auto slot = [&](Index node) {
        return static_cast<Index>(std::lower_bound(row.columns.begin(), row.columns.end(), node) - row.columns.begin());
    };
    for (std::size_t j = 0; j < weak.columns.size(); ++j) {
        const Index s = slot(weak.columns[j]);
        for (int i = 0; i < dim; ++i)
            if (!tag.prescribes(i)) row.block.block(i, dim * s, 1, dim) = weak.block.block(i, dim * j, 1, dim);
    }
    for (std::size_t j = 0; j < shape.active.size(); ++j) {
        const Index s = slot(shape.active[j]);
        for (int i = 0; i < dim; ++i)
            if (tag.prescribes(i)) row.block(i, dim * s + i) = shape.coefficients(0, j);
    }
    for (int i = 0; i < dim; ++i)
        if (tag.prescribes(i)) row.rhs[i] = u_bar[i];
    return row;
}

WeakRowProvider dmlpg_provider()
{
    return [](const AssemblyContext& ctx, Index k, const MomentSystem& ms) {
        const auto& opt = ctx.options;
        const int d = ctx.nodes.dim;
        const Subdomain sd = make_subdomain(k, ctx.nodes, ctx.geometry, opt.subdomains);
        const QuadratureCounts counts = opt.effective_quadrature();
        const auto rules = ctx.rules.get(sd, counts);
        const TestFunction v = make_test_function(sd, is_unit_test(opt.method), opt.gmls.epsilon);

        WeakRow row;
        row.key = lambda_key(sd, ctx.material, opt.method, counts, ms.degree, ms.scale, opt.gmls.epsilon);
        std::shared_ptr<const Matrix> lambda;
        if (opt.use_cache) lambda = ctx.lambdas.find(row.key);
        if (!lambda) {
            const PolyBasis basis(d, ms.degree, Point::Zero(), ms.scale);
            Matrix computed = weak_form_lambda(sd, *rules, v, ctx.D, basis);
            lambda = opt.use_cache ? ctx.lambdas.insert(row.key, std::move(computed))
                                   : std::make_shared<const Matrix>(std::move(computed));
        }
        row.beta = weak_form_rhs(sd, *ctx.rules.get(sd, opt.data_quadrature()), v, ctx.D, ctx.data);
        row.measure = sd.measure();

        const Matrix phi = ms.shape_operator();
        const Index n = static_cast<Index>(ms.active.size());
        const int q = static_cast<int>(phi.rows());
        row.columns = ms.active;
        row.block.resize(d, d * n);
        Matrix lc(d, q);
        for (int c = 0; c < d; ++c) {
            for (int b = 0; b < q; ++b) lc.col(b) = lambda->col(b * d + c);
            const Matrix part = lc * phi;  // d x n
            for (Index j = 0; j < n; ++j) row.block.col(d * j + c) = part.col(j);
        }
        return row;
    };
}

GlobalSystem assemble_dmlpg(const NodeSet& nodes, const DomainGeometry& geometry, const MaterialModel& material,
                            const BoundaryData& data, const AssemblyOptions& options, LambdaCache* cache)
{
    if (!is_direct(options.method)) throw Error("assemble_dmlpg: method is not a direct variant");
    return assemble_with(nodes, geometry, material, data, options, dmlpg_provider(), cache);
}

}  // namespace dmlpg
