#pragma once

#include "dmlpg/assembly/system.hpp"
#include "dmlpg/benchmarks/errors.hpp"
#include "dmlpg/benchmarks/problems.hpp"

#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace dmlpg {

/// Assembly options consistent with a problem configuration (degree,
/// subdomain policy); method and quadrature come from `base`.
AssemblyOptions options_for(const ProblemConfig& config, const AssemblyOptions& base);

/// One assembled, solved and evaluated refinement level.
struct LevelOutcome {
    ProblemSetup setup;
    GlobalSystem system;
    SolveResult solution;
    ErrorReport errors;
    GmlsSettings gmls;  // used for recovery
};

LevelOutcome run_level(const ProblemConfig& config, const AssemblyOptions& options, int level);

struct StudyRow {
    double h = 0.0;
    Index N = 0;
    double r_u = 0.0, r_eps = 0.0;
    double t_assemble_s = 0.0, t_solve_s = 0.0;
    std::size_t shape_evals = 0;
    double order_u = 0.0, order_eps = 0.0;  // NaN where undefined
};

StudyRow study_row(const LevelOutcome& outcome);

/// log(r_prev / r) / log(h_prev / h) between successive rows; NaN on the
/// first row and wherever h does not change.
void compute_orders(std::vector<StudyRow>& rows);

/// Runs the levels in order. `on_level` (optional) sees every outcome.
std::vector<StudyRow> convergence_study(const ProblemConfig& config, const AssemblyOptions& options,
                                        const std::vector<int>& levels,
                                        const std::function<void(const LevelOutcome&)>& on_level = {});

/// CSV: h,N,r_u,r_eps,t_assemble_s,t_solve_s,shape_evals,order_u,order_eps.
/// With timings off the time columns are written as 0.
void write_convergence_csv(std::ostream& out, const std::vector<StudyRow>& rows, bool timings = true);

std::string format_number(double v);

struct ProfileRow {
    double coordinate = 0.0;
    double numerical = 0.0;
    double exact = 0.0;
};

/// Figure-style profiles of a solved level, keyed by quantity name.
std::map<std::string, std::vector<ProfileRow>> figure_profiles(const LevelOutcome& outcome, const ProblemConfig& config);

/// Surface profiles of u_r and w for the Boussinesq problem along the ray
/// phi = pi/4 on z = 0, r in [r_min, r_max].
std::map<std::string, std::vector<ProfileRow>> boussinesq_surface_profiles(const LevelOutcome& outcome, double r_min,
                                                                           double r_max, int count);

/// CSV: coordinate,numerical,exact.
void write_profile_csv(std::ostream& out, const std::vector<ProfileRow>& rows);

/// Relative discrete 2-norm error of a profile.
double profile_error(const std::vector<ProfileRow>& rows);

}  // namespace dmlpg
