#include "dmlpg/assembly/system.hpp"

#include "dmlpg/assembly/dmlpg.hpp"
#include "dmlpg/mlpg/mlpg.hpp"

#include <Eigen/SparseLU>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <iomanip>
#include <ostream>

namespace dmlpg {

Method parse_method(const std::string& name)
{
    if (name == "dmlpg1") return Method::dmlpg1;
    if (name == "dmlpg5") return Method::dmlpg5;
    if (name == "mlpg1") return Method::mlpg1;
    if (name == "mlpg5") return Method::mlpg5;
    throw Error("unknown method '" + name + "'");
}

std::string to_string(Method method)
{
    switch (method) {
    case Method::dmlpg1: return "dmlpg1";
    case Method::dmlpg5: return "dmlpg5";
    case Method::mlpg1: return "mlpg1";
    case Method::mlpg5: return "mlpg5";
    }
    return "?";
}

bool is_direct(Method method) { return method == Method::dmlpg1 || method == Method::dmlpg5; }

bool is_unit_test(Method method) { return method == Method::dmlpg5 || method == Method::mlpg5; }

int default_box_points(Method method, int degree)
{
    if (!is_direct(method)) return 10;
    if (is_unit_test(method)) return std::max(1, (degree + 1) / 2);
    const int test_degree = 2;
    return std::max(1, ((degree - 1) + test_degree + 1 + 1) / 2);
}

QuadratureCounts AssemblyOptions::effective_quadrature() const
{
    QuadratureCounts q = quadrature;
    if (q.box <= 0) q.box = default_box_points(method, gmls.degree);
    if (q.curved <= 0) q.curved = 10;
    return q;
}

QuadratureCounts AssemblyOptions::data_quadrature() const
{
    QuadratureCounts q = effective_quadrature();
    q.box = std::max(q.box, data_points);
    q.curved = std::max(q.curved, data_points);
    return q;
}

namespace {

struct NodeOutput {
    std::vector<Eigen::Triplet<double>> triplets;
    Vector rhs;
    RowKind kind = RowKind::weak_form;
    std::size_t evaluations = 0;
    std::size_t active = 0;
    std::string key;
    std::exception_ptr error;
};

void emit(NodeOutput& out, const BlockRow& row, Index k, int d, const std::vector<bool>& scale_row, double scale)
{
    for (std::size_t j = 0; j < row.columns.size(); ++j)
        for (int i = 0; i < d; ++i)
            for (int c = 0; c < d; ++c) {
                double v = row.block(i, d * Index(j) + c);
                if (v == 0.0) continue;
                if (scale_row[i]) v *= scale;
                out.triplets.emplace_back(int(d * k + i), int(d * row.columns[j] + c), v);
            }
    out.rhs = row.rhs;
    for (int i = 0; i < d; ++i)
        if (scale_row[i]) out.rhs[i] *= scale;
}

}  // namespace

GlobalSystem assemble_with(const NodeSet& nodes, const DomainGeometry& geometry, const MaterialModel& material,
                           const BoundaryData& data, const AssemblyOptions& options, const WeakRowProvider& provider,
                           LambdaCache* cache)
{
    const auto start = std::chrono::steady_clock::now();
    const int d = nodes.dim;
    if (geometry.dim() != d || material.dim() != d) throw Error("assemble: dimension mismatch between nodes, domain and material");
    if (!data.displacement) throw Error("assemble: prescribed displacement data missing");
    const Index n = nodes.size();
    const Index nb = nodes.dirichlet_count();
    for (Index k = nb; k < n; ++k)
        if (nodes.tags[k].kind == TagKind::dirichlet) throw Error("assemble: Dirichlet nodes must come first");

    NeighborSearch search(nodes);
    RuleCache rules;
    LambdaCache local;
    LambdaCache& lambdas = cache ? *cache : local;
    AssemblyContext ctx{nodes, geometry, material, data, options, search, elastic_matrix(material), rules, lambdas};

    std::vector<NodeOutput> out(n);
    auto work = [&](Index k) {
        NodeOutput& o = out[k];
        try {
            const Point& x = nodes.points[k];
            const BoundaryTag tag = nodes.tags[k];
            const MomentSystem ms = build_moment_system(x, nodes.support_radius[k], search, options.gmls, k);
            o.active = ms.active.size();
            Vector e1 = Vector::Zero(basis_size(d, ms.degree));
            e1[0] = 1.0;
            const GmlsRow shape = gmls_row(e1.transpose(), ms);
            std::vector<bool> scaled(d, false);
            if (tag.kind == TagKind::dirichlet) {
                o.kind = RowKind::collocation;
                emit(o, collocation_row(shape, d, data.displacement(x)), k, d, scaled, 1.0);
                return;
            }
            WeakRow weak = provider(ctx, k, ms);
            o.evaluations = weak.shape_evaluations;
            o.key = weak.key;
            o.active = std::max(o.active, weak.columns.size());
            for (int i = 0; i < d; ++i) scaled[i] = options.row_scaling && !tag.prescribes(i);
            const double scale = 1.0 / weak.measure;
            if (tag.kind == TagKind::mixed) {
                o.kind = RowKind::mixed;
                emit(o, mixed_bc_replace(weak, shape, tag, data.displacement(x), d), k, d, scaled, scale);
            } else {
                o.kind = RowKind::weak_form;
                BlockRow row{weak.columns, weak.block, weak.beta};
                emit(o, row, k, d, scaled, scale);
            }
        } catch (...) {
            o.error = std::current_exception();
        }
    };

    if (options.parallel) {
#pragma omp parallel for schedule(dynamic, 8)
        for (Index k = 0; k < n; ++k) work(k);
    } else {
        for (Index k = 0; k < n; ++k) work(k);
    }

    GlobalSystem sys;
    sys.dim = d;
    sys.nodes = n;
    sys.R.resize(d * n);
    sys.row_kind.resize(n);
    std::size_t total = 0;
    for (Index k = 0; k < n; ++k) {
        if (out[k].error) {
            try {
                std::rethrow_exception(out[k].error);
            } catch (const NodeDeficiencyError&) {
                throw;
            } catch (const UnsupportedClipError&) {
                throw;
            } catch (const std::exception& e) {
                throw Error("assembly failed at node " + std::to_string(k) + ": " + e.what());
            }
        }
        total += out[k].triplets.size();
    }
    std::vector<Eigen::Triplet<double>> triplets;
    triplets.reserve(total);
    for (Index k = 0; k < n; ++k) {
        triplets.insert(triplets.end(), out[k].triplets.begin(), out[k].triplets.end());
        sys.R.segment(d * k, d) = out[k].rhs;
        sys.row_kind[k] = out[k].kind;
        sys.stats.shape_evaluations += out[k].evaluations;
        sys.stats.max_active = std::max(sys.stats.max_active, out[k].active);
        if (!out[k].key.empty()) ++sys.stats.nodes_by_key[out[k].key];
    }
    sys.K.resize(d * n, d * n);
    sys.K.setFromTriplets(triplets.begin(), triplets.end());
    sys.K.makeCompressed();
    sys.stats.cache_entries = lambdas.entries();
    sys.stats.cache_hits = lambdas.total_hits();
    sys.stats.cache_hits_by_key = lambdas.hits();
    sys.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return sys;
}

GlobalSystem assemble(const NodeSet& nodes, const DomainGeometry& geometry, const MaterialModel& material,
                      const BoundaryData& data, const AssemblyOptions& options, LambdaCache* cache)
{
    if (is_direct(options.method)) return assemble_dmlpg(nodes, geometry, material, data, options, cache);
    return assemble_mlpg(nodes, geometry, material, data, options);
}

SolveResult solve(const GlobalSystem& system, double max_residual)
{
    const auto start = std::chrono::steady_clock::now();
    Eigen::SparseMatrix<double> K = system.K;  // column-major copy for SparseLU
    Eigen::SparseLU<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>> lu;
    lu.analyzePattern(K);
    lu.factorize(K);
    if (lu.info() != Eigen::Success) throw SolveError("sparse LU factorization failed: " + lu.lastErrorMessage());
    SolveResult res;
    res.u = lu.solve(system.R);
    if (lu.info() != Eigen::Success) throw SolveError("sparse LU solve failed: " + lu.lastErrorMessage());
    if (!res.u.allFinite()) throw SolveError("sparse LU produced a non-finite solution (singular system)");
    const double rn = system.R.norm();
    res.residual = (system.K * res.u - system.R).norm() / (rn > 0 ? rn : 1.0);
    if (!(res.residual <= max_residual))
        throw SolveError("linear solve residual " + std::to_string(res.residual) +
                         " exceeds the alert threshold (near-singular system)");
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

void write_system(std::ostream& out, const GlobalSystem& system)
{
    out << std::setprecision(17);
    out << "K " << system.K.rows() << ' ' << system.K.cols() << ' ' << system.K.nonZeros() << '\n';
    for (Index r = 0; r < system.K.outerSize(); ++r)
        for (Eigen::SparseMatrix<double, Eigen::RowMajor>::InnerIterator it(system.K, r); it; ++it)
            out << it.row() << ' ' << it.col() << ' ' << it.value() << '\n';
    out << "R " << system.R.size() << '\n';
    for (Index i = 0; i < system.R.size(); ++i) out << system.R[i] << '\n';
}

}  // namespace dmlpg
