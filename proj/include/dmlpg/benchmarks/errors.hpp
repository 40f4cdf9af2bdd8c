#pragma once

#include "dmlpg/assembly/recovery.hpp"
#include "dmlpg/benchmarks/exact.hpp"

#include <string>
#include <vector>

namespace dmlpg {

struct ErrorReport {
    double r_u = 0.0;
    double r_eps = 0.0;
    std::string evaluation_mesh;
    std::size_t evaluation_points = 0;
    double t_assemble_s = 0.0;
    double t_solve_s = 0.0;
    std::size_t shape_evaluations = 0;
};

/// Relative discrete 2-norm |a - b| / |a| of stacked vectors.
double relative_error(const std::vector<Vector>& exact, const std::vector<Vector>& numerical);

/// r_u and r_eps over the evaluation points, using GMLS recovery of the
/// numerical field and the closed form.
ErrorReport relative_errors(const FieldRecovery& numerical, const ExactSolution& exact,
                            const std::vector<Point>& points, const std::string& mesh = {});

}  // namespace dmlpg
