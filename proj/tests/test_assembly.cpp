#include "dmlpg/assembly/dmlpg.hpp"
#include "dmlpg/assembly/recovery.hpp"
#include "dmlpg/assembly/test_function.hpp"
#include "dmlpg/benchmarks/problems.hpp"
#include "dmlpg/benchmarks/study.hpp"
#include "dmlpg/geometry/generators.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <sstream>

using namespace dmlpg;

namespace {

// Coefficients a_n (d per basis entry) of a random polynomial field.
Vector random_coefficients(int d, int q, unsigned seed)
{
    std::srand(seed);
    Vector a = Vector::Random(d * q);
    a.head(d).setZero();  // constants do not enter the weak form
    return a;
}

// Divergence of D eps(u) for u = sum_n p_n a_n, evaluated by differencing the strain.
Vector divergence(const PolyBasis& basis, const Matrix& D, const Vector& a, const Point& y)
{
    const int d = basis.dim();
    auto stress = [&](const Point& z) {
        Vector v;
        Matrix g;
        basis.eval_gradient_local(z, v, g);
        Vector eps = Vector::Zero(voigt_size(d));
        for (int n = 1; n < basis.size(); ++n) eps += strain_basis(n, g) * a.segment(n * d, d);
        return Vector(D * eps);
    };
    Vector div = Vector::Zero(d);
    const double h = 1e-4 * basis.scale();
    for (int j = 0; j < d; ++j) {
        Point p = y, m = y;
        p[j] += h;
        m[j] -= h;
        const Eigen::Matrix3d dS = (voigt_to_stress(stress(p), d) - voigt_to_stress(stress(m), d)) / (2 * h);
        for (int i = 0; i < d; ++i) div[i] += dS(i, j);
    }
    return div;
}

LevelOutcome run_manufactured(int dim, int field_degree, Method method, SubdomainShape shape, int curved = 10)
{
    ProblemConfig cfg;
    cfg.kind = ProblemKind::manufactured;
    cfg.dim = dim;
    cfg.field_degree = field_degree;
    cfg.shape = shape;
    cfg.mode = dim == 3 ? ElasticMode::solid : ElasticMode::plane_stress;
    AssemblyOptions base;
    base.method = method;
    base.quadrature.curved = curved;
    return run_level(cfg, options_for(cfg, base), 0);
}

double nodal_error(const LevelOutcome& o)
{
    const int d = o.setup.nodes.dim;
    Vector exact(o.solution.u.size());
    for (Index j = 0; j < o.setup.nodes.size(); ++j)
        exact.segment(d * j, d) = o.setup.exact.displacement(o.setup.nodes.points[j]);
    return (o.solution.u - exact).norm() / exact.norm();
}

std::size_t max_entry_difference(const GlobalSystem& a, const GlobalSystem& b, double* diff)
{
    Eigen::SparseMatrix<double, Eigen::RowMajor> d = a.K - b.K;
    *diff = 0.0;
    for (int k = 0; k < d.outerSize(); ++k)
        for (Eigen::SparseMatrix<double, Eigen::RowMajor>::InnerIterator it(d, k); it; ++it)
            *diff = std::max(*diff, std::abs(it.value()));
    return static_cast<std::size_t>(d.nonZeros());
}

}  // namespace

TEST(WeakForm, UnitTestFunctionObeysDivergenceTheorem)
{
    // with v = 1 the boundary traction integral equals the volume integral of div sigma
    for (int dim : {2, 3}) {
        const auto g = DomainGeometry::box(dim, Point::Zero(), Point(1, 1, 1), std::vector<unsigned>(2 * dim, 0u));
        const MaterialModel mat(1.0, 0.3, dim == 2 ? ElasticMode::plane_stress : ElasticMode::solid);
        const Matrix D = elastic_matrix(mat);
        for (auto shape : {SubdomainShape::box, SubdomainShape::ball}) {
            const Subdomain sd = build_subdomain(0, Point(0.5, 0.5, dim == 3 ? 0.5 : 0.0), shape, 0.2, g);
            const PolyBasis basis(dim, 2, Point::Zero(), 0.3);
            const FunctionalRow row = functional_row(sd, mat, Method::dmlpg5, {1, 10}, 2, 0.3, nullptr);
            const Vector a = random_coefficients(dim, basis.size(), 7);
            const Vector want = sd.measure() * divergence(basis, D, a, Point::Zero());
            EXPECT_LT((row.lambda * a - want).norm(), 1e-8 * want.norm());
        }
    }
}

TEST(WeakForm, BoxTestFunctionMatchesClosedFormIntegral)
{
    // v vanishes on the box, so the row equals div sigma times the integral of v, (2s/3)^d
    for (int dim : {2, 3}) {
        const auto g = DomainGeometry::box(dim, Point::Zero(), Point(1, 1, 1), std::vector<unsigned>(2 * dim, 0u));
        const MaterialModel mat(2.0, 0.25, dim == 2 ? ElasticMode::plane_strain : ElasticMode::solid);
        const Matrix D = elastic_matrix(mat);
        const double s = 0.2;
        const Subdomain sd = build_subdomain(0, Point(0.5, 0.5, dim == 3 ? 0.5 : 0.0), SubdomainShape::box, s, g);
        const PolyBasis basis(dim, 2, Point::Zero(), 0.4);
        const FunctionalRow row = functional_row(sd, mat, Method::dmlpg1, {2, 10}, 2, 0.4, nullptr);
        const Vector a = random_coefficients(dim, basis.size(), 11);
        const Vector want = std::pow(2 * s / 3, dim) * divergence(basis, D, a, Point::Zero());
        EXPECT_LT((row.lambda * a - want).norm(), 1e-8 * want.norm());
    }
}

TEST(WeakForm, LambdaAgreesWithDirectApplication)
{
    const auto beam = DomainGeometry::beam(8.0, 1.0);
    const MaterialModel mat(1.0, 0.25, ElasticMode::plane_stress);
    const Matrix D = elastic_matrix(mat);
    for (const Point& c : {Point(4, 0.5, 0), Point(4, 1.0, 0), Point(8, 0.5, 0), Point(8, 1, 0)}) {
        for (auto shape : {SubdomainShape::box, SubdomainShape::ball}) {
            for (Method m : {Method::dmlpg1, Method::dmlpg5}) {
                const Subdomain sd = build_subdomain(0, c, shape, 0.25, beam);
                const SubdomainRules rules = build_rules(sd, {3, 12});
                const TestFunction v = make_test_function(sd, is_unit_test(m));
                const PolyBasis basis(2, 3, Point::Zero(), 0.5);
                const Vector a = random_coefficients(2, basis.size(), 5);
                const Vector direct = weak_form_apply(sd, rules, v, D, [&](const Point& y) {
                    Vector val;
                    Matrix g;
                    basis.eval_gradient_local(y, val, g);
                    Vector eps = Vector::Zero(3);
                    for (int n = 1; n < basis.size(); ++n) eps += strain_basis(n, g) * a.segment(2 * n, 2);
                    return eps;
                });
                const Vector via_lambda = weak_form_lambda(sd, rules, v, D, basis) * a;
                EXPECT_LT((direct - via_lambda).norm(), 1e-12 * std::max(1.0, direct.norm()));
            }
        }
    }
}

TEST(FunctionalRow, ConstantBasisBlockIsZero)
{
    const auto beam = DomainGeometry::beam(8.0, 1.0);
    const MaterialModel mat(1.0, 0.25, ElasticMode::plane_stress);
    for (Method m : {Method::dmlpg1, Method::dmlpg5}) {
        const Subdomain sd = build_subdomain(3, Point(2, 0.5, 0), SubdomainShape::box, 0.25, beam);
        const FunctionalRow row = functional_row(sd, mat, m, {2, 10}, 2, 1.0, nullptr);
        EXPECT_EQ(row.lambda.rows(), 2);
        EXPECT_EQ(row.lambda.cols(), 12);
        EXPECT_EQ(row.lambda.leftCols(2).norm(), 0.0);
        EXPECT_GT(row.lambda.norm(), 0.0);
        EXPECT_EQ(row.node, 3);
        EXPECT_EQ(row.beta.norm(), 0.0);
    }
}

TEST(FunctionalRow, ExactWithMinimalGaussRules)
{
    const auto beam = DomainGeometry::beam(8.0, 1.0);
    const MaterialModel mat(1.0, 0.25, ElasticMode::plane_stress);
    for (const Point& c : {Point(4, 0.5, 0), Point(4, 1.0, 0), Point(0, 0, 0), Point(8, 0.5, 0)}) {
        const Subdomain sd = build_subdomain(0, c, SubdomainShape::box, 0.25, beam);
        const Matrix l2 = functional_row(sd, mat, Method::dmlpg1, {2, 10}, 2, 1.0, nullptr).lambda;
        const Matrix l10 = functional_row(sd, mat, Method::dmlpg1, {10, 10}, 2, 1.0, nullptr).lambda;
        EXPECT_LT((l2 - l10).cwiseAbs().maxCoeff(), 1e-12 * l10.cwiseAbs().maxCoeff());
        const Matrix u1 = functional_row(sd, mat, Method::dmlpg5, {1, 10}, 2, 1.0, nullptr).lambda;
        const Matrix u10 = functional_row(sd, mat, Method::dmlpg5, {10, 10}, 2, 1.0, nullptr).lambda;
        EXPECT_LT((u1 - u10).cwiseAbs().maxCoeff(), 1e-12 * u10.cwiseAbs().maxCoeff());
    }
}

TEST(FunctionalRow, SymmetricSubdomainsShareLambda)
{
    const auto beam = DomainGeometry::beam(8.0, 1.0);
    const MaterialModel mat(1.0, 0.25, ElasticMode::plane_stress);
    const Subdomain a = build_subdomain(10, Point(2, 0.5, 0), SubdomainShape::box, 0.25, beam);
    const Subdomain b = build_subdomain(20, Point(6, 0.25, 0), SubdomainShape::box, 0.25, beam);
    const FunctionalRow ra = functional_row(a, mat, Method::dmlpg1, {2, 10}, 2, 1.0, nullptr);
    const FunctionalRow rb = functional_row(b, mat, Method::dmlpg1, {2, 10}, 2, 1.0, nullptr);
    EXPECT_EQ(ra.key, rb.key);
    EXPECT_EQ((ra.lambda - rb.lambda).norm(), 0.0);
    const Subdomain top = build_subdomain(30, Point(6, 1.0, 0), SubdomainShape::box, 0.25, beam);
    EXPECT_NE(functional_row(top, mat, Method::dmlpg1, {2, 10}, 2, 1.0, nullptr).key, ra.key);
}

TEST(BoundaryRows, CollocationReproducesPolynomials)
{
    const NodeSet n = generate_beam_nodes(17, 5, 4.0, 1.0);
    const NeighborSearch search(n);
    const Point x(0.0, 0.5, 0.0);
    const GmlsRow shape = mls_shape(x, search);
    Vector ubar(2);
    ubar << 0.1, -0.2;
    const BlockRow row = collocation_row(shape, 2, ubar);
    EXPECT_EQ(row.columns, shape.active);
    EXPECT_EQ(row.rhs, ubar);
    // nodal values of u = (x^2 + y, 3xy) satisfy the row up to the data
    Vector u(2 * row.columns.size());
    for (std::size_t j = 0; j < row.columns.size(); ++j) {
        const Point& p = n.points[row.columns[j]];
        u[2 * j] = p.x() * p.x() + p.y();
        u[2 * j + 1] = 3 * p.x() * p.y();
    }
    const Vector value = row.block * u;
    EXPECT_NEAR(value[0], x.x() * x.x() + x.y(), 1e-10);
    EXPECT_NEAR(value[1], 3 * x.x() * x.y(), 1e-10);
}

TEST(BoundaryRows, MixedReplacement)
{
    const NodeSet n = generate_beam_nodes(17, 5, 4.0, 1.0);
    const NeighborSearch search(n);
    const Point x(0.0, 0.5, 0.0);
    const GmlsRow shape = mls_shape(x, search);
    WeakRow weak;
    weak.columns = {0, 1, 2};
    weak.block = Matrix::Random(2, 6);
    weak.beta = Vector::Random(2);
    Vector ubar(2);
    ubar << 0.5, 0.7;

    const BlockRow none = mixed_bc_replace(weak, shape, BoundaryTag::mixed(0u), ubar, 2);
    const BlockRow full = mixed_bc_replace(weak, shape, BoundaryTag::mixed(3u), ubar, 2);
    const BlockRow coll = collocation_row(shape, 2, ubar);
    auto dense = [](const BlockRow& r) {
        std::map<Index, Vector> cols;
        for (std::size_t j = 0; j < r.columns.size(); ++j)
            for (int c = 0; c < 2; ++c) {
                auto& v = cols[2 * r.columns[j] + c];
                if (v.size() == 0) v = Vector::Zero(2);
                v += r.block.col(2 * j + c);
            }
        for (auto it = cols.begin(); it != cols.end();) it = it->second.norm() == 0.0 ? cols.erase(it) : std::next(it);
        return cols;
    };
    EXPECT_EQ(none.rhs, weak.beta);
    const auto dn = dense(none);
    for (std::size_t j = 0; j < 3; ++j)
        for (int c = 0; c < 2; ++c) EXPECT_EQ(dn.at(2 * weak.columns[j] + c), weak.block.col(2 * j + c));
    EXPECT_EQ(full.rhs, ubar);
    EXPECT_EQ(dense(full), dense(coll));

    const BlockRow half = mixed_bc_replace(weak, shape, BoundaryTag::mixed(1u), ubar, 2);
    EXPECT_EQ(half.rhs[0], ubar[0]);
    EXPECT_EQ(half.rhs[1], weak.beta[1]);
}

TEST(Assembly, BeamSystemShapeAndResidual)
{
    ProblemConfig cfg;
    AssemblyOptions base;
    const LevelOutcome o = run_level(cfg, options_for(cfg, base), 0);
    EXPECT_EQ(o.system.rows(), 330);
    EXPECT_EQ(o.system.K.cols(), 330);
    EXPECT_LT(o.solution.residual, 1e-10);
    EXPECT_EQ(o.system.stats.shape_evaluations, 0u);
    std::size_t collocation = 0;
    for (auto k : o.system.row_kind) collocation += k == RowKind::collocation;
    EXPECT_EQ(collocation, 5u);
}

TEST(Assembly, SerialAndParallelAreIdentical)
{
    ProblemConfig cfg;
    AssemblyOptions base;
    AssemblyOptions serial = options_for(cfg, base);
    serial.parallel = false;
    AssemblyOptions parallel = serial;
    parallel.parallel = true;
    const ProblemSetup s = make_problem(cfg, 1);
    const auto data = s.exact.boundary_data();
    const GlobalSystem a = assemble(s.nodes, s.geometry, s.exact.material, data, serial);
    const GlobalSystem b = assemble(s.nodes, s.geometry, s.exact.material, data, parallel);
    std::ostringstream da, db;
    write_system(da, a);
    write_system(db, b);
    EXPECT_EQ(da.str(), db.str());
    EXPECT_EQ(a.R, b.R);
}

TEST(Assembly, CacheDoesNotChangeTheSystem)
{
    ProblemConfig cfg;
    AssemblyOptions base;
    AssemblyOptions cached = options_for(cfg, base);
    cached.use_cache = true;
    AssemblyOptions uncached = cached;
    uncached.use_cache = false;
    const ProblemSetup s = make_problem(cfg, 1);
    const auto data = s.exact.boundary_data();
    const GlobalSystem a = assemble(s.nodes, s.geometry, s.exact.material, data, cached);
    const GlobalSystem b = assemble(s.nodes, s.geometry, s.exact.material, data, uncached);
    double diff = 0.0;
    max_entry_difference(a, b, &diff);
    EXPECT_LE(diff, 1e-14);
    EXPECT_EQ(b.stats.cache_hits, 0u);
    // hits per key are the nodes sharing that subdomain minus one
    ASSERT_FALSE(a.stats.nodes_by_key.empty());
    std::size_t modal = 0;
    std::string modal_key;
    for (const auto& [key, count] : a.stats.nodes_by_key) {
        EXPECT_EQ(a.stats.cache_hits_by_key.at(key), count - 1) << key;
        if (count > modal) {
            modal = count;
            modal_key = key;
        }
    }
    // interior nodes of the 65 x 9 grid all share one square
    EXPECT_EQ(modal, std::size_t(63 * 7));
}

TEST(Assembly, DuplicatedNodeIsRejected)
{
    ProblemConfig cfg;
    ProblemSetup s = make_problem(cfg, 0);
    s.nodes.push_back(s.nodes.points[40], s.nodes.tags[40], s.nodes.support_radius[40], s.nodes.spacing[40]);
    AssemblyOptions base;
    const auto opts = options_for(cfg, base);
    EXPECT_THROW(
        {
            const GlobalSystem sys = assemble(s.nodes, s.geometry, s.exact.material, s.exact.boundary_data(), opts);
            solve(sys);
        },
        Error);
}

TEST(Assembly, AllDirichletCloudReproducesData)
{
    // every node collocated: K is the MLS interpolation matrix
    const auto g = DomainGeometry::box(2, Point::Zero(), Point(1, 1, 0), {3u, 3u, 3u, 3u});
    NodeSet n = generate_box_nodes(g, {6, 6, 1}, Point::Zero(), Point(1, 1, 0));
    for (auto& t : n.tags) t = BoundaryTag::dirichlet(2);
    const MaterialModel mat(1.0, 0.25, ElasticMode::plane_stress);
    BoundaryData data;
    data.displacement = [](const Point& x) {
        Vector u(2);
        u << x.x() * x.y(), 1 - x.y() * x.y();
        return u;
    };
    const GlobalSystem sys = assemble(n, g, mat, data, AssemblyOptions{});
    const SolveResult r = solve(sys);
    for (Index j = 0; j < n.size(); ++j)
        EXPECT_LT((r.u.segment(2 * j, 2) - data.displacement(n.points[j])).norm(), 1e-9);
}

TEST(PatchTestQuadrature, GaussianTestFunctionNeedsFinerDiskRules)
{
    // the disk test function is not polynomial, so the patch residual is pure quadrature error
    const double coarse = nodal_error(run_manufactured(2, 2, Method::dmlpg1, SubdomainShape::ball, 10));
    const double fine = nodal_error(run_manufactured(2, 2, Method::dmlpg1, SubdomainShape::ball, 16));
    EXPECT_LT(coarse, 1e-6);
    EXPECT_LT(fine, 1e-12);
    EXPECT_LT(fine, 1e-4 * coarse);
}

struct PatchCase {
    int dim;
    int field_degree;
    Method method;
    SubdomainShape shape;
    int curved = 10;
};

class PatchTest : public ::testing::TestWithParam<PatchCase> {};

TEST_P(PatchTest, RecoversPolynomialField)
{
    const auto c = GetParam();
    const LevelOutcome o = run_manufactured(c.dim, c.field_degree, c.method, c.shape, c.curved);
    EXPECT_LT(nodal_error(o), 1e-8);
    const FieldRecovery rec(o.setup.nodes, o.setup.exact.material, o.solution.u, o.gmls);
    const Point x = c.dim == 2 ? Point(0.37, 0.61, 0) : Point(0.37, 0.61, 0.45);
    EXPECT_LT((rec.strain(x) - o.setup.exact.strain(x)).norm(), 1e-8 * std::max(1.0, o.setup.exact.strain(x).norm()));
}

std::string patch_name(const ::testing::TestParamInfo<PatchCase>& info)
{
    const auto& c = info.param;
    return std::string(c.dim == 2 ? "d2" : "d3") + "_p" + std::to_string(c.field_degree) + "_" + to_string(c.method) +
           "_" + (c.shape == SubdomainShape::box ? "box" : "ball");
}

INSTANTIATE_TEST_SUITE_P(
    Manufactured, PatchTest,
    ::testing::Values(PatchCase{2, 1, Method::dmlpg1, SubdomainShape::box},
                      PatchCase{2, 2, Method::dmlpg1, SubdomainShape::box},
                      PatchCase{2, 1, Method::dmlpg5, SubdomainShape::box},
                      PatchCase{2, 2, Method::dmlpg5, SubdomainShape::box},
                      PatchCase{2, 1, Method::dmlpg1, SubdomainShape::ball, 16},
                      PatchCase{2, 2, Method::dmlpg1, SubdomainShape::ball, 16},
                      PatchCase{2, 1, Method::dmlpg5, SubdomainShape::ball},
                      PatchCase{2, 2, Method::dmlpg5, SubdomainShape::ball},
                      PatchCase{3, 1, Method::dmlpg1, SubdomainShape::box},
                      PatchCase{3, 2, Method::dmlpg1, SubdomainShape::box},
                      PatchCase{3, 1, Method::dmlpg5, SubdomainShape::box},
                      PatchCase{3, 2, Method::dmlpg5, SubdomainShape::box}),
    patch_name);
