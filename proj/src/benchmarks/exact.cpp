#include "dmlpg/benchmarks/exact.hpp"

#include "dmlpg/mls/poly_basis.hpp"

#include <cmath>
#include <numbers>

namespace dmlpg {

Vector ExactSolution::strain(const Point& x) const
{
    return elastic_matrix(material).ldlt().solve(stress(x));
}

BoundaryData ExactSolution::boundary_data() const { return {displacement, stress, body_force}; }

ExactSolution beam_exact(const BeamParams& p)
{
    ExactSolution s;
    s.material = MaterialModel(p.E, p.nu, p.mode);
    const double I = p.D * p.D * p.D / 12.0;
    const double Eb = s.material.E_bar(), nb = s.material.nu_bar();
    s.displacement = [=](const Point& x) {
        const double x1 = x[0], x2 = x[1], c = p.P / (6.0 * Eb * I);
        Vector u(2);
        u[0] = -c * (x2 - p.D / 2) * (3.0 * x1 * (2.0 * p.L - x1) + (2.0 + nb) * x2 * (x2 - p.D));
        u[1] = c * (x1 * x1 * (3.0 * p.L - x1) + 3.0 * nb * (p.L - x1) * (x2 - p.D / 2) * (x2 - p.D / 2) +
                    (4.0 + 5.0 * nb) / 4.0 * p.D * p.D * x1);
        return u;
    };
    s.stress = [=](const Point& x) {
        Vector sg(3);
        sg[0] = -p.P / I * (p.L - x[0]) * (x[1] - p.D / 2);
        sg[1] = 0.0;
        sg[2] = -p.P * x[1] / (2.0 * I) * (x[1] - p.D);
        return sg;
    };
    return s;
}

ExactSolution plate_exact(const PlateParams& p)
{
    ExactSolution s;
    s.material = MaterialModel(p.E, p.nu, p.mode);
    const double Eb = s.material.E_bar(), nb = s.material.nu_bar();
    const double a2 = p.a * p.a, a4 = a2 * a2;
    s.stress = [=](const Point& x) {
        const double r2 = x[0] * x[0] + x[1] * x[1], r4 = r2 * r2, t = std::atan2(x[1], x[0]);
        Vector sg(3);
        sg[0] = p.sigma * (1.0 - a2 / r2 * (1.5 * std::cos(2 * t) + std::cos(4 * t)) + 1.5 * a4 / r4 * std::cos(4 * t));
        sg[1] = p.sigma * (-a2 / r2 * (0.5 * std::cos(2 * t) - std::cos(4 * t)) - 1.5 * a4 / r4 * std::cos(4 * t));
        sg[2] = p.sigma * (-a2 / r2 * (0.5 * std::sin(2 * t) + std::sin(4 * t)) + 1.5 * a4 / r4 * std::sin(4 * t));
        return sg;
    };
    s.displacement = [=](const Point& x) {
        const double r = std::hypot(x[0], x[1]), t = std::atan2(x[1], x[0]);
        const double c = (1.0 + nb) / Eb * p.sigma;
        Vector u(2);
        u[0] = c * (r * std::cos(t) / (1.0 + nb) + 2.0 / (1.0 + nb) * a2 / r * std::cos(t) +
                    0.5 * a2 / r * std::cos(3 * t) - 0.5 * a4 / (r * r * r) * std::cos(3 * t));
        u[1] = c * (-nb / (1.0 + nb) * r * std::sin(t) - (1.0 - nb) / (1.0 + nb) * a2 / r * std::sin(t) +
                    0.5 * a2 / r * std::sin(3 * t) - 0.5 * a4 / (r * r * r) * std::sin(3 * t));
        return u;
    };
    return s;
}

double boussinesq_radial(const Point& x, const BoussinesqParams& p)
{
    const double r = std::hypot(x[0], x[1]), z = x[2], rho = x.norm();
    return (1.0 + p.nu) * p.P / (2.0 * p.E * std::numbers::pi * rho) *
           (z * r / (rho * rho) - (1.0 - 2.0 * p.nu) * r / (rho + z));
}

double boussinesq_vertical(const Point& x, const BoussinesqParams& p)
{
    const double z = x[2], rho = x.norm();
    return (1.0 + p.nu) * p.P / (2.0 * p.E * std::numbers::pi * rho) * (z * z / (rho * rho) + 2.0 * (1.0 - p.nu));
}

ExactSolution boussinesq_exact(const BoussinesqParams& p)
{
    ExactSolution s;
    s.material = MaterialModel(p.E, p.nu, ElasticMode::solid);
    const double pi = std::numbers::pi;
    s.displacement = [=](const Point& x) {
        const double z = x[2], rho = x.norm();
        // u_r / r, finite on the axis
        const double ur_over_r = (1.0 + p.nu) * p.P / (2.0 * p.E * pi * rho) *
                                 (z / (rho * rho) - (1.0 - 2.0 * p.nu) / (rho + z));
        Vector u(3);
        u << ur_over_r * x[0], ur_over_r * x[1], boussinesq_vertical(x, p);
        return u;
    };
    s.stress = [=](const Point& x) {
        const double r = std::hypot(x[0], x[1]), z = x[2], rho = x.norm();
        const double rho2 = rho * rho, rho5 = rho2 * rho2 * rho;
        const double sr = p.P / (2.0 * pi * rho2) * (-3.0 * z * r * r / (rho2 * rho) + (1.0 - 2.0 * p.nu) * rho / (rho + z));
        const double st = (1.0 - 2.0 * p.nu) * p.P / (2.0 * pi * rho2) * (z / rho - rho / (rho + z));
        const double szz = -3.0 * p.P * z * z * z / (2.0 * pi * rho5);
        const double trz = -3.0 * p.P * r * z * z / (2.0 * pi * rho5);
        const double c = r > 0 ? x[0] / r : 1.0, sn = r > 0 ? x[1] / r : 0.0;
        Vector sg(6);
        sg[0] = sr * c * c + st * sn * sn;
        sg[1] = sr * sn * sn + st * c * c;
        sg[2] = szz;
        sg[3] = trz * sn;
        sg[4] = trz * c;
        sg[5] = (sr - st) * sn * c;
        return sg;
    };
    return s;
}

ExactSolution polynomial_exact(const MaterialModel& material, int degree, const Matrix& coefficients)
{
    const int d = material.dim();
    const PolyBasis basis(d, degree, Point::Zero(), 1.0);
    if (coefficients.rows() != d || coefficients.cols() != basis.size())
        throw Error("polynomial field: coefficient matrix must be d x Q");
    const Matrix D = elastic_matrix(material);
    ExactSolution s;
    s.material = material;
    s.displacement = [=](const Point& x) -> Vector { return coefficients * basis.eval(x); };
    // Voigt strain from the displacement gradient G(c, a) = d u_c / d x_a
    auto voigt = [d](const Matrix& G) {
        Vector e(voigt_size(d));
        if (d == 2) e << G(0, 0), G(1, 1), G(0, 1) + G(1, 0);
        else e << G(0, 0), G(1, 1), G(2, 2), G(1, 2) + G(2, 1), G(0, 2) + G(2, 0), G(0, 1) + G(1, 0);
        return e;
    };
    auto gradient = [=](const Point& x, MultiIndex extra) {
        Matrix G(d, d);
        for (int a = 0; a < d; ++a) {
            MultiIndex alpha = extra;
            ++alpha[a];
            if (order(alpha) > degree) {
                G.col(a).setZero();
                continue;
            }
            G.col(a) = coefficients * basis.eval(x, alpha);
        }
        return G;
    };
    s.stress = [=](const Point& x) -> Vector { return D * voigt(gradient(x, {0, 0, 0})); };
    s.body_force = [=](const Point& x) -> Vector {
        // b_i = -sum_j d sigma_ij / d x_j
        Vector b = Vector::Zero(d);
        for (int j = 0; j < d; ++j) {
            MultiIndex dj{0, 0, 0};
            dj[j] = 1;
            const Matrix t = voigt_to_stress(D * voigt(gradient(x, dj)), d);
            for (int i = 0; i < d; ++i) b[i] -= t(i, j);
        }
        return b;
    };
    return s;
}

}  // namespace dmlpg
