#include "dmlpg/benchmarks/study.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>

namespace dmlpg {

AssemblyOptions options_for(const ProblemConfig& config, const AssemblyOptions& base)
{
    AssemblyOptions o = base;
    o.gmls.degree = config.degree;
    o.subdomains = config.subdomain_policy();
    return o;
}

LevelOutcome run_level(const ProblemConfig& config, const AssemblyOptions& options, int level)
{
    LevelOutcome out;
    out.setup = make_problem(config, level);
    const AssemblyOptions opt = options_for(config, options);
    out.gmls = opt.gmls;
    const BoundaryData data = out.setup.exact.boundary_data();
    out.system = assemble(out.setup.nodes, out.setup.geometry, out.setup.exact.material, data, opt);
    out.solution = solve(out.system);
    const FieldRecovery rec(out.setup.nodes, out.setup.exact.material, out.solution.u, opt.gmls);
    out.errors = relative_errors(rec, out.setup.exact, out.setup.evaluation_points, out.setup.evaluation_mesh);
    out.errors.t_assemble_s = out.system.stats.seconds;
    out.errors.t_solve_s = out.solution.seconds;
    out.errors.shape_evaluations = out.system.stats.shape_evaluations;
    return out;
}

StudyRow study_row(const LevelOutcome& o)
{
    StudyRow r;
    r.h = o.setup.nodes.mesh_size;
    r.N = o.setup.nodes.size();
    r.r_u = o.errors.r_u;
    r.r_eps = o.errors.r_eps;
    r.t_assemble_s = o.errors.t_assemble_s;
    r.t_solve_s = o.errors.t_solve_s;
    r.shape_evals = o.errors.shape_evaluations;
    return r;
}

void compute_orders(std::vector<StudyRow>& rows)
{
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        rows[i].order_u = rows[i].order_eps = nan;
        if (i == 0) continue;
        const double hr = std::log(rows[i - 1].h / rows[i].h);
        if (!(std::abs(hr) > 1e-12)) continue;
        rows[i].order_u = std::log(rows[i - 1].r_u / rows[i].r_u) / hr;
        rows[i].order_eps = std::log(rows[i - 1].r_eps / rows[i].r_eps) / hr;
    }
}

std::vector<StudyRow> convergence_study(const ProblemConfig& config, const AssemblyOptions& options,
                                        const std::vector<int>& levels,
                                        const std::function<void(const LevelOutcome&)>& on_level)
{
    if (levels.size() < 2) throw Error("convergence study: need at least two levels");
    std::vector<StudyRow> rows;
    for (int level : levels) {
        const LevelOutcome o = run_level(config, options, level);
        if (on_level) on_level(o);
        rows.push_back(study_row(o));
    }
    compute_orders(rows);
    return rows;
}

std::string format_number(double v)
{
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

void write_convergence_csv(std::ostream& out, const std::vector<StudyRow>& rows, bool timings)
{
    out << "h,N,r_u,r_eps,t_assemble_s,t_solve_s,shape_evals,order_u,order_eps\n";
    for (const auto& r : rows) {
        out << format_number(r.h) << ',' << r.N << ',' << format_number(r.r_u) << ',' << format_number(r.r_eps) << ','
            << format_number(timings ? r.t_assemble_s : 0.0) << ',' << format_number(timings ? r.t_solve_s : 0.0)
            << ',' << r.shape_evals << ',' << format_number(r.order_u) << ',' << format_number(r.order_eps) << '\n';
    }
}

namespace {

template <class Num, class Ex>
std::vector<ProfileRow> sample(const std::vector<Point>& pts, const std::vector<double>& coord, Num&& num, Ex&& ex)
{
    std::vector<ProfileRow> rows(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) rows[i] = {coord[i], num(pts[i]), ex(pts[i])};
    return rows;
}

}  // namespace

std::map<std::string, std::vector<ProfileRow>> boussinesq_surface_profiles(const LevelOutcome& o, double r_min,
                                                                           double r_max, int count)
{
    const auto& ex = o.setup.exact;
    const FieldRecovery rec(o.setup.nodes, ex.material, o.solution.u, o.gmls);
    std::vector<Point> pts;
    std::vector<double> coord;
    const double c = std::cos(std::numbers::pi / 4.0);
    for (int i = 0; i < count; ++i) {
        const double r = r_min + (r_max - r_min) * i / (count - 1);
        pts.emplace_back(r * c, r * c, 0.0);
        coord.push_back(r);
    }
    auto radial = [c](const Vector& u) { return c * (u[0] + u[1]); };
    std::map<std::string, std::vector<ProfileRow>> out;
    out["u_r"] = sample(pts, coord, [&](const Point& x) { return radial(rec.displacement(x)); },
                        [&](const Point& x) { return radial(ex.displacement(x)); });
    out["w"] = sample(pts, coord, [&](const Point& x) { return rec.displacement(x)[2]; },
                      [&](const Point& x) { return ex.displacement(x)[2]; });
    out["von_mises"] = sample(pts, coord, [&](const Point& x) { return rec.at(x).von_mises; },
                              [&](const Point& x) { return von_mises(ex.stress(x)); });
    return out;
}

std::map<std::string, std::vector<ProfileRow>> figure_profiles(const LevelOutcome& o, const ProblemConfig& cfg)
{
    const auto& ex = o.setup.exact;
    std::map<std::string, std::vector<ProfileRow>> out;
    switch (o.setup.kind) {
    case ProblemKind::beam: {
        const FieldRecovery rec(o.setup.nodes, ex.material, o.solution.u, o.gmls);
        std::vector<Point> pts;
        std::vector<double> coord;
        for (int i = 0; i <= 40; ++i) {
            coord.push_back(cfg.D * i / 40.0);
            pts.emplace_back(cfg.L / 2.0, coord.back(), 0.0);
        }
        out["sigma11_mid"] = sample(pts, coord, [&](const Point& x) { return rec.stress(x)[0]; },
                                    [&](const Point& x) { return ex.stress(x)[0]; });
        out["sigma12_mid"] = sample(pts, coord, [&](const Point& x) { return rec.stress(x)[2]; },
                                    [&](const Point& x) { return ex.stress(x)[2]; });
        break;
    }
    case ProblemKind::plate: {
        const FieldRecovery rec(o.setup.nodes, ex.material, o.solution.u, o.gmls);
        std::vector<Point> pts;
        std::vector<double> coord;
        for (int i = 0; i <= 40; ++i) {
            coord.push_back(cfg.a + (cfg.b - cfg.a) * i / 40.0);
            pts.emplace_back(0.0, coord.back(), 0.0);
        }
        out["sigma11_x0"] = sample(pts, coord, [&](const Point& x) { return rec.stress(x)[0]; },
                                   [&](const Point& x) { return ex.stress(x)[0]; });
        break;
    }
    case ProblemKind::boussinesq:
        out = boussinesq_surface_profiles(o, 0.3, 9.0, 60);
        break;
    case ProblemKind::manufactured: {
        const FieldRecovery rec(o.setup.nodes, ex.material, o.solution.u, o.gmls);
        std::vector<Point> pts;
        std::vector<double> coord;
        for (int i = 0; i <= 20; ++i) {
            const double t = i / 20.0;
            coord.push_back(t);
            pts.emplace_back(t, t, cfg.dim == 3 ? t : 0.0);
        }
        out["u1_diagonal"] = sample(pts, coord, [&](const Point& x) { return rec.displacement(x)[0]; },
                                    [&](const Point& x) { return ex.displacement(x)[0]; });
        break;
    }
    }
    return out;
}

void write_profile_csv(std::ostream& out, const std::vector<ProfileRow>& rows)
{
    out << "coordinate,numerical,exact\n";
    for (const auto& r : rows)
        out << format_number(r.coordinate) << ',' << format_number(r.numerical) << ',' << format_number(r.exact) << '\n';
}

double profile_error(const std::vector<ProfileRow>& rows)
{
    double num = 0.0, den = 0.0;
    for (const auto& r : rows) {
        num += (r.numerical - r.exact) * (r.numerical - r.exact);
        den += r.exact * r.exact;
    }
    return den > 0 ? std::sqrt(num / den) : std::sqrt(num);
}

}  // namespace dmlpg
