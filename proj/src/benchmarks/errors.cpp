#include "dmlpg/benchmarks/errors.hpp"

#include <cmath>
#include <exception>

namespace dmlpg {

double relative_error(const std::vector<Vector>& exact, const std::vector<Vector>& numerical)
{
    if (exact.size() != numerical.size()) throw Error("relative error: size mismatch");
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < exact.size(); ++i) {
        num += (exact[i] - numerical[i]).squaredNorm();
        den += exact[i].squaredNorm();
    }
    if (!(den > 0)) throw Error("relative error: exact field vanishes on the evaluation mesh");
    return std::sqrt(num / den);
}

ErrorReport relative_errors(const FieldRecovery& numerical, const ExactSolution& exact,
                            const std::vector<Point>& points, const std::string& mesh)
{
    std::vector<Vector> ue(points.size()), un(points.size()), ee(points.size()), en(points.size());
    std::vector<std::exception_ptr> failed(points.size());
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < points.size(); ++i) {
        try {
            const auto s = numerical.at(points[i]);
            un[i] = s.displacement;
            en[i] = s.strain;
            ue[i] = exact.displacement(points[i]);
            ee[i] = exact.strain(points[i]);
        } catch (...) {
            failed[i] = std::current_exception();
        }
    }
    for (const auto& e : failed)
        if (e) std::rethrow_exception(e);
    ErrorReport r;
    r.r_u = relative_error(ue, un);
    r.r_eps = relative_error(ee, en);
    r.evaluation_mesh = mesh;
    r.evaluation_points = points.size();
    return r;
}

}  // namespace dmlpg
