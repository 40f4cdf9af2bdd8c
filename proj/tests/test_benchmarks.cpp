#include "dmlpg/assembly/recovery.hpp"
#include "dmlpg/benchmarks/errors.hpp"
#include "dmlpg/benchmarks/exact.hpp"
#include "dmlpg/benchmarks/problems.hpp"
#include "dmlpg/benchmarks/study.hpp"
#include "dmlpg/quadrature/gauss_legendre.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

using namespace dmlpg;

namespace {

constexpr double pi = std::numbers::pi;

// Voigt strain (engineering shear) by central differences of the displacement.
Vector fd_strain(const ExactSolution& s, const Point& x, double step)
{
    const int d = s.dim();
    Matrix G(d, d);  // G(i, j) = du_i / dx_j
    for (int j = 0; j < d; ++j) {
        Point xp = x, xm = x;
        xp[j] += step;
        xm[j] -= step;
        G.col(j) = (s.displacement(xp) - s.displacement(xm)) / (2 * step);
    }
    Vector e(voigt_size(d));
    if (d == 2) {
        e << G(0, 0), G(1, 1), G(0, 1) + G(1, 0);
    } else {
        e << G(0, 0), G(1, 1), G(2, 2), G(1, 2) + G(2, 1), G(0, 2) + G(2, 0), G(0, 1) + G(1, 0);
    }
    return e;
}

// Divergence of the stress by central differences.
Vector fd_divergence(const ExactSolution& s, const Point& x, double step)
{
    const int d = s.dim();
    Vector div = Vector::Zero(d);
    for (int j = 0; j < d; ++j) {
        Point xp = x, xm = x;
        xp[j] += step;
        xm[j] -= step;
        const Eigen::Matrix3d dS = (voigt_to_stress(s.stress(xp), d) - voigt_to_stress(s.stress(xm), d)) / (2 * step);
        for (int i = 0; i < d; ++i) div[i] += dS(i, j);
    }
    return div;
}

// Checks the constitutive law and equilibrium of a closed-form solution.
void expect_consistent(const ExactSolution& s, const std::vector<Point>& points, double step)
{
    const Matrix D = elastic_matrix(s.material);
    for (const Point& x : points) {
        const Vector sigma = s.stress(x);
        const Vector from_u = D * fd_strain(s, x, step);
        EXPECT_LT((from_u - sigma).norm(), 1e-4 * std::max(1.0, sigma.norm())) << x.transpose();
        Vector residual = fd_divergence(s, x, step);
        if (s.body_force) residual += s.body_force(x);
        EXPECT_LT(residual.norm(), 1e-4 * std::max(1.0, sigma.norm())) << x.transpose();
        EXPECT_LT((s.strain(x) - fd_strain(s, x, step)).norm(), 1e-6 * std::max(1.0, s.strain(x).norm()));
    }
}

}  // namespace

TEST(BeamExact, ClosedFormValues)
{
    const ExactSolution s = beam_exact(BeamParams{});
    EXPECT_NEAR(s.displacement(Point(8, 0.5, 0))[1], 2069.0, 1e-9);
    EXPECT_NEAR(s.displacement(Point(0, 0.5, 0)).norm(), 0.0, 1e-12);
    for (double y : {0.0, 0.2, 0.5, 1.0}) EXPECT_NEAR(s.stress(Point(3, y, 0))[1], 0.0, 1e-14);
    EXPECT_NEAR(s.stress(Point(2, 0.5, 0))[2], 1.5, 1e-14);
    EXPECT_NEAR(s.stress(Point(2, 0.0, 0))[2], 0.0, 1e-14);
    EXPECT_NEAR(s.stress(Point(4, 0.0, 0))[0], 24.0, 1e-12);
}

TEST(BeamExact, EndTractionCarriesTheLoad)
{
    const ExactSolution s = beam_exact(BeamParams{});
    const auto g = gauss_legendre_interval(6, 0.0, 1.0);
    double shear = 0.0, axial = 0.0, moment = 0.0;
    for (std::size_t i = 0; i < g.points.size(); ++i) {
        const Vector t = normal_matrix(Point(1, 0, 0), 2) * s.stress(Point(8, g.points[i], 0));
        shear += g.weights[i] * t[1];
        axial += g.weights[i] * t[0];
        moment += g.weights[i] * t[0] * (g.points[i] - 0.5);
    }
    EXPECT_NEAR(shear, 1.0, 1e-13);
    EXPECT_NEAR(axial, 0.0, 1e-13);
    EXPECT_NEAR(moment, 0.0, 1e-13);
}

TEST(BeamExact, ConsistentWithElasticity)
{
    for (auto mode : {ElasticMode::plane_stress, ElasticMode::plane_strain}) {
        BeamParams p;
        p.mode = mode;
        expect_consistent(beam_exact(p), {Point(1, 0.3, 0), Point(4, 0.9, 0), Point(7.5, 0.5, 0)}, 1e-4);
    }
}

TEST(PlateExact, HoleStressConcentration)
{
    const ExactSolution s = plate_exact(PlateParams{});
    EXPECT_NEAR(s.stress(Point(0, 1, 0))[0], 3.0, 1e-13);
    EXPECT_NEAR(s.stress(Point(1, 0, 0))[0], 0.0, 1e-13);
    const Vector far = s.stress(Point(2000, 1500, 0));
    EXPECT_NEAR(far[0], 1.0, 1e-5);
    EXPECT_NEAR(far[1], 0.0, 1e-5);
    EXPECT_NEAR(far[2], 0.0, 1e-5);
    // traction-free hole
    for (double t : {0.1, 0.7, 1.3}) {
        const Point n(std::cos(t), std::sin(t), 0);
        EXPECT_LT((normal_matrix(n, 2) * s.stress(n)).norm(), 1e-13);
    }
}

TEST(PlateExact, ConsistentWithElasticity)
{
    for (auto mode : {ElasticMode::plane_stress, ElasticMode::plane_strain}) {
        PlateParams p;
        p.mode = mode;
        expect_consistent(plate_exact(p), {Point(1.2, 0.4, 0), Point(0.3, 2.5, 0), Point(3, 3, 0)}, 1e-5);
    }
}

TEST(BoussinesqExact, SurfaceValues)
{
    const BoussinesqParams p;
    const ExactSolution s = boussinesq_exact(p);
    EXPECT_NEAR(boussinesq_vertical(Point(1, 0, 0), p), 0.9375 / (1000 * pi), 1e-15);
    EXPECT_NEAR(boussinesq_vertical(Point(1, 0, 0), p), 2.98416e-4, 1e-9);
    const double ur = boussinesq_radial(Point(0.6, 0.8, 0), p);
    EXPECT_NEAR(ur, -1.25 * 0.5 / (2000 * pi), 1e-15);
    EXPECT_LT(ur, 0.0);
    // degree -1 homogeneity
    const Point x(0.3, 0.4, 0.5);
    EXPECT_NEAR(boussinesq_vertical(2.0 * x, p), 0.5 * boussinesq_vertical(x, p), 1e-16);
    EXPECT_NEAR(boussinesq_radial(2.0 * x, p), 0.5 * boussinesq_radial(x, p), 1e-16);
    // the Cartesian field agrees with the cylindrical components
    const Vector u = s.displacement(x);
    const double r = std::hypot(x.x(), x.y());
    EXPECT_NEAR(u[0], boussinesq_radial(x, p) * x.x() / r, 1e-15);
    EXPECT_NEAR(u[1], boussinesq_radial(x, p) * x.y() / r, 1e-15);
    EXPECT_NEAR(std::abs(u[2]), std::abs(boussinesq_vertical(x, p)), 1e-15);
}

TEST(BoussinesqExact, ConsistentAndTractionFreeSurface)
{
    const ExactSolution s = boussinesq_exact(BoussinesqParams{});
    expect_consistent(s, {Point(1, 2, 3), Point(4, 0.5, 2), Point(0.7, 0.7, 0.9)}, 1e-5);
    for (const Point& x : {Point(1, 2, 0), Point(3, 0.5, 0)}) {
        const Vector t = normal_matrix(Point(0, 0, 1), 3) * s.stress(x);
        EXPECT_LT(t.norm(), 1e-12 * s.stress(x).norm() + 1e-18);
    }
}

TEST(BoussinesqExact, HemisphereResultantEqualsLoad)
{
    // the vertical traction on a hemisphere around the load balances P
    const ExactSolution s = boussinesq_exact(BoussinesqParams{});
    const double R = 2.0;
    const auto gt = gauss_legendre_interval(40, 0.0, 2 * pi);
    const auto gc = gauss_legendre_interval(40, 0.0, 1.0);
    double fz = 0.0;
    for (std::size_t i = 0; i < gt.points.size(); ++i)
        for (std::size_t j = 0; j < gc.points.size(); ++j) {
            const double c = gc.points[j], sn = std::sqrt(1 - c * c);
            const Point n(sn * std::cos(gt.points[i]), sn * std::sin(gt.points[i]), c);
            const Vector t = normal_matrix(n, 3) * s.stress(R * n);
            fz += gt.weights[i] * gc.weights[j] * R * R * t[2];
        }
    EXPECT_NEAR(std::abs(fz), 1.0, 1e-8);
}

TEST(ManufacturedExact, BodyForceBalances)
{
    for (int dim : {2, 3}) {
        const MaterialModel m(1.0, 0.3, dim == 2 ? ElasticMode::plane_stress : ElasticMode::solid);
        const ExactSolution s = polynomial_exact(m, 2, manufactured_coefficients(dim, 2));
        const Point x = dim == 2 ? Point(0.3, 0.6, 0) : Point(0.3, 0.6, 0.2);
        expect_consistent(s, {x}, 1e-4);
    }
}

TEST(Errors, RelativeErrorScaling)
{
    std::vector<Vector> exact, same, scaled;
    for (int i = 0; i < 5; ++i) {
        Vector v(2);
        v << i + 1.0, -0.5 * i;
        exact.push_back(v);
        same.push_back(v);
        scaled.push_back(1.01 * v);
    }
    EXPECT_EQ(relative_error(exact, same), 0.0);
    EXPECT_NEAR(relative_error(exact, scaled), 0.01, 1e-12);
    EXPECT_THROW(relative_error(exact, {}), Error);
}

TEST(Errors, ExactNodalValuesGiveZeroError)
{
    ProblemConfig cfg;
    cfg.kind = ProblemKind::manufactured;
    cfg.field_degree = 1;
    const ProblemSetup setup = make_problem(cfg, 0);
    Vector u(setup.nodes.size() * 2);
    for (Index j = 0; j < setup.nodes.size(); ++j) u.segment(2 * j, 2) = setup.exact.displacement(setup.nodes.points[j]);
    const FieldRecovery rec(setup.nodes, setup.exact.material, u);
    const ErrorReport r = relative_errors(rec, setup.exact, setup.evaluation_points);
    EXPECT_LT(r.r_u, 1e-12);
    EXPECT_LT(r.r_eps, 1e-10);
}

TEST(Study, OrdersUseLogRatios)
{
    std::vector<StudyRow> rows(3);
    rows[0].h = 0.4;
    rows[0].r_u = 1.6e-2;
    rows[0].r_eps = 0.4;
    rows[1].h = 0.2;
    rows[1].r_u = 4e-3;
    rows[1].r_eps = 0.2;
    rows[2].h = 0.2;
    rows[2].r_u = 3e-3;
    rows[2].r_eps = 0.1;
    compute_orders(rows);
    EXPECT_TRUE(std::isnan(rows[0].order_u));
    EXPECT_NEAR(rows[1].order_u, 2.0, 1e-12);
    EXPECT_NEAR(rows[1].order_eps, 1.0, 1e-12);
    EXPECT_TRUE(std::isnan(rows[2].order_u));
    EXPECT_EQ(format_number(rows[2].order_u), "nan");
    std::ostringstream csv;
    write_convergence_csv(csv, rows, false);
    std::istringstream in(csv.str());
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "h,N,r_u,r_eps,t_assemble_s,t_solve_s,shape_evals,order_u,order_eps");
}

TEST(Study, ManufacturedProblemIsAtRoundoff)
{
    ProblemConfig cfg;
    cfg.kind = ProblemKind::manufactured;
    cfg.field_degree = 2;
    AssemblyOptions base;
    const auto rows = convergence_study(cfg, options_for(cfg, base), {0, 1});
    ASSERT_EQ(rows.size(), 2u);
    for (const auto& r : rows) {
        EXPECT_LT(r.r_u, 1e-9);
        EXPECT_LT(r.r_eps, 1e-8);
    }
}

TEST(Study, BeamBendingStressAtFinestMesh)
{
    ProblemConfig cfg;
    AssemblyOptions base;
    const LevelOutcome o = run_level(cfg, options_for(cfg, base), 2);
    const FieldRecovery rec(o.setup.nodes, o.setup.exact.material, o.solution.u, o.gmls);
    EXPECT_NEAR(rec.stress(Point(4, 0, 0))[0], 24.0, 0.02 * 24.0);
    EXPECT_LT(o.solution.residual, 1e-10);
    const auto profiles = figure_profiles(o, cfg);
    ASSERT_TRUE(profiles.count("sigma11_mid"));
    ASSERT_TRUE(profiles.count("sigma12_mid"));
    EXPECT_EQ(profiles.at("sigma11_mid").size(), 41u);
    EXPECT_LT(profile_error(profiles.at("sigma11_mid")), 0.02);
}

TEST(Problems, NodeCountsPerLevel)
{
    ProblemConfig beam;
    EXPECT_EQ(make_problem(beam, 0).nodes.size(), 165);
    EXPECT_EQ(make_problem(beam, 1).nodes.size(), 585);
    EXPECT_EQ(make_problem(beam, 2).nodes.size(), 129 * 17);
    EXPECT_EQ(beam.default_delta_factor(), 2.0);
    EXPECT_THROW(parse_problem("sphere"), Error);
}
