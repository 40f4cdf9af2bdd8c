#include "dmlpg/benchmarks/problems.hpp"

#include "dmlpg/geometry/generators.hpp"
#include "dmlpg/mls/poly_basis.hpp"

#include <cmath>
#include <numbers>

namespace dmlpg {

ProblemKind parse_problem(const std::string& name)
{
    if (name == "beam") return ProblemKind::beam;
    if (name == "plate") return ProblemKind::plate;
    if (name == "boussinesq") return ProblemKind::boussinesq;
    if (name == "manufactured") return ProblemKind::manufactured;
    throw Error("unknown problem '" + name + "'");
}

std::string to_string(ProblemKind kind)
{
    switch (kind) {
    case ProblemKind::beam: return "beam";
    case ProblemKind::plate: return "plate";
    case ProblemKind::boussinesq: return "boussinesq";
    case ProblemKind::manufactured: return "manufactured";
    }
    return "?";
}

double ProblemConfig::default_delta_factor() const
{
    switch (kind) {
    case ProblemKind::beam: return 2.0;
    case ProblemKind::boussinesq: return 1.3;
    default: return 2.0;
    }
}

SubdomainPolicy ProblemConfig::subdomain_policy() const
{
    SubdomainPolicy p;
    p.shape = shape;
    p.box_factor = box_factor;
    p.ball_factor = ball_factor;
    p.curved_factor = curved_factor;
    return p;
}

std::vector<Point> beam_evaluation_mesh(double L, double D)
{
    std::vector<Point> pts;
    for (int j = 0; j <= 20; ++j)
        for (int i = 0; i <= 160; ++i) pts.emplace_back(L * i / 160.0, D * j / 20.0, 0.0);
    return pts;
}

std::vector<Point> plate_evaluation_mesh(double a, double b)
{
    std::vector<Point> pts;
    const double r_max = b - 0.05;
    for (int j = 0; j < 80; ++j) {
        const double t = std::numbers::pi / 2.0 * j / 79.0;
        for (int i = 0; i < 80; ++i) {
            const double r = a + (r_max - a) * i / 79.0;
            pts.emplace_back(j == 79 ? 0.0 : r * std::cos(t), j == 0 ? 0.0 : r * std::sin(t), 0.0);
        }
    }
    return pts;
}

std::vector<Point> boussinesq_evaluation_mesh(double r_min, double r_max)
{
    std::vector<Point> pts;
    for (int j = 0; j < 40; ++j) {
        const double t = std::numbers::pi / 2.0 * j / 39.0;
        for (int i = 0; i < 40; ++i) {
            const double r = r_min + (r_max - r_min) * i / 39.0;
            pts.emplace_back(j == 39 ? 0.0 : r * std::cos(t), j == 0 ? 0.0 : r * std::sin(t), 0.0);
        }
    }
    // interior shell sample at rho = 2
    for (int j = 0; j < 10; ++j) {
        const double phi = std::numbers::pi / 2.0 * (j + 0.5) / 10.0;
        for (int i = 0; i < 10; ++i) {
            const double th = std::numbers::pi / 2.0 * (i + 0.5) / 10.0;
            pts.emplace_back(2.0 * std::sin(th) * std::cos(phi), 2.0 * std::sin(th) * std::sin(phi), 2.0 * std::cos(th));
        }
    }
    return pts;
}

Matrix manufactured_coefficients(int dim, int degree)
{
    const int q = basis_size(dim, degree);
    Matrix c(dim, q);
    for (int i = 0; i < dim; ++i)
        for (int n = 0; n < q; ++n) c(i, n) = ((3 * i + 5 * n + 1) % 11 - 5) / 10.0;
    return c;
}

ProblemSetup make_problem(const ProblemConfig& cfg, int level)
{
    if (level < 0) throw Error("problem: negative refinement level");
    const int refine = 1 << level;
    const double factor = cfg.delta_factor > 0 ? cfg.delta_factor : cfg.default_delta_factor();
    ProblemSetup s;
    s.kind = cfg.kind;
    switch (cfg.kind) {
    case ProblemKind::beam: {
        BeamParams p;
        p.L = cfg.L, p.D = cfg.D, p.P = cfg.P, p.nu = cfg.nu, p.mode = cfg.mode;
        p.E = cfg.E > 0 ? cfg.E : 1.0;
        s.exact = beam_exact(p);
        s.geometry = DomainGeometry::beam(cfg.L, cfg.D);
        s.nodes = generate_beam_nodes((cfg.nx - 1) * refine + 1, (cfg.ny - 1) * refine + 1, cfg.L, cfg.D,
                                      {cfg.degree, factor});
        s.evaluation_points = beam_evaluation_mesh(cfg.L, cfg.D);
        s.evaluation_mesh = "beam 161x21 closed grid";
        break;
    }
    case ProblemKind::plate: {
        PlateParams p;
        p.a = cfg.a, p.sigma = cfg.sigma, p.nu = cfg.nu, p.mode = cfg.mode;
        p.E = cfg.E > 0 ? cfg.E : 1.0;
        s.exact = plate_exact(p);
        s.geometry = DomainGeometry::plate_quadrant(cfg.a, cfg.b);
        PlateSupportPolicy support{cfg.degree, cfg.delta_factor_near, cfg.delta_factor_far, 2.0};
        s.nodes = generate_plate_nodes(cfg.a, cfg.b, (cfg.nr - 1) * refine + 1, (cfg.ntheta - 1) * refine + 1,
                                       std::pow(cfg.grading, 1.0 / refine), support);
        s.evaluation_points = plate_evaluation_mesh(cfg.a, cfg.b);
        s.evaluation_mesh = "plate 80x80 polar grid, r in [a, b-0.05]";
        break;
    }
    case ProblemKind::boussinesq: {
        BoussinesqParams p;
        p.P = cfg.P, p.nu = cfg.nu;
        p.E = cfg.E > 0 ? cfg.E : 1000.0;
        s.exact = boussinesq_exact(p);
        s.geometry = DomainGeometry::sphere_octant(cfg.sphere_radius, cfg.inner_radius);
        s.nodes = generate_boussinesq_nodes(cfg.sphere_radius, cfg.inner_radius, cfg.target * (1L << (3 * level)),
                                            {cfg.degree, factor});
        s.evaluation_points = boussinesq_evaluation_mesh(0.3, 9.0);
        s.evaluation_mesh = "boussinesq 40x40 surface grid r in [0.3, 9] plus 10x10 shell at rho = 2";
        break;
    }
    case ProblemKind::manufactured: {
        const int d = cfg.dim;
        const ElasticMode mode = d == 3 ? ElasticMode::solid : cfg.mode;
        const MaterialModel mat(cfg.E > 0 ? cfg.E : 1.0, cfg.nu, mode);
        s.exact = polynomial_exact(mat, cfg.field_degree, manufactured_coefficients(d, cfg.field_degree));
        std::vector<unsigned> masks(2 * d, 0u);
        masks[0] = (1u << d) - 1;  // x = 0 clamped
        masks[2] = 0b10u;          // y = 0: u_2 prescribed
        if (d == 3) masks[4] = 0b100u;
        const Point lo = Point::Zero();
        const Point hi = d == 3 ? Point(1, 1, 1) : Point(1, 1, 0);
        s.geometry = DomainGeometry::box(d, lo, hi, masks);
        const int n = (cfg.grid - 1) * refine + 1;
        s.nodes = generate_box_nodes(s.geometry, {n, n, d == 3 ? n : 1}, lo, hi, {cfg.degree, factor});
        const int ne = 11;
        for (int k = 0; k < (d == 3 ? ne : 1); ++k)
            for (int j = 0; j < ne; ++j)
                for (int i = 0; i < ne; ++i)
                    s.evaluation_points.emplace_back(i / 10.0, j / 10.0, d == 3 ? k / 10.0 : 0.0);
        s.evaluation_mesh = "manufactured 11^d closed grid";
        break;
    }
    }
    return s;
}

}  // namespace dmlpg
