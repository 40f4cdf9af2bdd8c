#pragma once

#include "dmlpg/assembly/weak_form.hpp"
#include "dmlpg/common.hpp"
#include "dmlpg/elasticity/material.hpp"

#include <functional>

namespace dmlpg {

/// Closed-form displacement and Voigt stress fields with their material.
struct ExactSolution {
    MaterialModel material;
    std::function<Vector(const Point&)> displacement;
    std::function<Vector(const Point&)> stress;
    std::function<Vector(const Point&)> body_force;  // empty when b = 0

    int dim() const { return material.dim(); }
    /// Voigt strain D^{-1} sigma.
    Vector strain(const Point& x) const;
    /// Boundary data with prescribed displacements and tractions from the closed form.
    BoundaryData boundary_data() const;
};

struct BeamParams {
    double L = 8.0, D = 1.0, P = 1.0, E = 1.0, nu = 0.25;
    ElasticMode mode = ElasticMode::plane_stress;
};
ExactSolution beam_exact(const BeamParams& p);

struct PlateParams {
    double a = 1.0, sigma = 1.0, E = 1.0, nu = 0.25;
    ElasticMode mode = ElasticMode::plane_stress;
};
ExactSolution plate_exact(const PlateParams& p);

struct BoussinesqParams {
    double P = 1.0, E = 1000.0, nu = 0.25;
};
ExactSolution boussinesq_exact(const BoussinesqParams& p);

/// Axisymmetric components: radial and vertical displacement.
double boussinesq_radial(const Point& x, const BoussinesqParams& p);
double boussinesq_vertical(const Point& x, const BoussinesqParams& p);

/// Polynomial displacement field u_c(x) = sum_n coefficients(c, n) x^{e_n}
/// (graded monomials about the origin) with body force b = -div sigma.
ExactSolution polynomial_exact(const MaterialModel& material, int degree, const Matrix& coefficients);

}  // namespace dmlpg
