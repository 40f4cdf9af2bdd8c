#pragma once

#include "dmlpg/common.hpp"

#include <string>

namespace dmlpg {

enum class ElasticMode { plane_stress, plane_strain, solid };

ElasticMode parse_elastic_mode(const std::string& name);
std::string to_string(ElasticMode mode);

/// Isotropic linear elastic material. Voigt order: 2D (11, 22, 12),
/// 3D (11, 22, 33, 23, 13, 12), engineering shear strains.
struct MaterialModel {
    double E = 1.0;
    double nu = 0.25;
    ElasticMode mode = ElasticMode::plane_stress;

    MaterialModel() = default;
    MaterialModel(double young, double poisson, ElasticMode m);

    int dim() const { return mode == ElasticMode::solid ? 3 : 2; }
    double E_bar() const;
    double nu_bar() const;
};

/// Constitutive matrix D (3x3 in 2D, 6x6 in 3D).
Matrix elastic_matrix(const MaterialModel& mat);

/// Strain matrix P_n (V x d) of one scalar basis function from its gradient.
Matrix strain_basis(const Eigen::Ref<const Eigen::VectorXd>& grad, int dim);

/// Same, for the n-th basis function of `gradients` (dim x Q).
Matrix strain_basis(int n, const Matrix& gradients);

/// Test strain matrix eps_v (d x V) for v_1 = ... = v_d = v.
Matrix test_strain(const Eigen::Ref<const Eigen::VectorXd>& grad_v, int dim);

/// Normal matrix N (d x V); N * sigma is the traction sigma . n.
Matrix normal_matrix(const Point& n, int dim);

/// Von Mises equivalent stress; 2D input is treated as plane stress (s33 = 0).
double von_mises(const Vector& stress);

/// Symmetric tensor <-> Voigt helpers (engineering shear for strains).
Vector stress_to_voigt(const Eigen::Matrix3d& sigma, int dim);
Eigen::Matrix3d voigt_to_stress(const Vector& voigt, int dim);

}  // namespace dmlpg
