#include "dmlpg/elasticity/material.hpp"

#include <cmath>

namespace dmlpg {

ElasticMode parse_elastic_mode(const std::string& name)
{
    if (name == "plane_stress") return ElasticMode::plane_stress;
    if (name == "plane_strain") return ElasticMode::plane_strain;
    if (name == "solid" || name == "3d") return ElasticMode::solid;
    throw Error("unknown elastic mode '" + name + "'");
}

std::string to_string(ElasticMode mode)
{
    switch (mode) {
    case ElasticMode::plane_stress: return "plane_stress";
    case ElasticMode::plane_strain: return "plane_strain";
    case ElasticMode::solid: return "solid";
    }
    return "?";
}

MaterialModel::MaterialModel(double young, double poisson, ElasticMode m) : E(young), nu(poisson), mode(m)
{
    if (!(E > 0)) throw Error("material: E must be positive");
    if (!(nu >= 0 && nu < 0.5)) throw Error("material: Poisson ratio must lie in [0, 0.5)");
}

double MaterialModel::E_bar() const { return mode == ElasticMode::plane_strain ? E / (1.0 - nu * nu) : E; }

double MaterialModel::nu_bar() const { return mode == ElasticMode::plane_strain ? nu / (1.0 - nu) : nu; }

Matrix elastic_matrix(const MaterialModel& mat)
{
    if (mat.mode != ElasticMode::solid) {
        const double e = mat.E_bar(), v = mat.nu_bar();
        Matrix d(3, 3);
        d << 1.0, v, 0.0, v, 1.0, 0.0, 0.0, 0.0, (1.0 - v) / 2.0;
        return e / (1.0 - v * v) * d;
    }
    const double e = mat.E, v = mat.nu;
    Matrix d = Matrix::Zero(6, 6);
    const double c1 = e / ((1.0 - 2.0 * v) * (1.0 + v));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) d(i, j) = c1 * (i == j ? 1.0 - v : v);
    const double c2 = e / (2.0 * (1.0 + v));
    for (int i = 3; i < 6; ++i) d(i, i) = c2;
    return d;
}

Matrix strain_basis(const Eigen::Ref<const Eigen::VectorXd>& g, int dim)
{
    if (dim == 2) {
        Matrix p(3, 2);
        p << g[0], 0.0, 0.0, g[1], g[1], g[0];
        return p;
    }
    Matrix p(6, 3);
    p << g[0], 0.0, 0.0,
         0.0, g[1], 0.0,
         0.0, 0.0, g[2],
         0.0, g[2], g[1],
         g[2], 0.0, g[0],
         g[1], g[0], 0.0;
    return p;
}

Matrix strain_basis(int n, const Matrix& gradients) { return strain_basis(gradients.col(n), int(gradients.rows())); }

Matrix test_strain(const Eigen::Ref<const Eigen::VectorXd>& g, int dim)
{
    if (dim == 2) {
        Matrix e(2, 3);
        e << g[0], 0.0, g[1], 0.0, g[1], g[0];
        return e;
    }
    Matrix e(3, 6);
    e << g[0], 0.0, 0.0, 0.0, g[2], g[1],
         0.0, g[1], 0.0, g[2], 0.0, g[0],
         0.0, 0.0, g[2], g[1], g[0], 0.0;
    return e;
}

Matrix normal_matrix(const Point& n, int dim)
{
    if (std::abs(n.head(dim).norm() - 1.0) > 1e-12 || (dim == 2 && n[2] != 0.0))
        throw Error("normal matrix: normal must be a unit vector");
    // same layout as the test strain with grad v replaced by n
    return test_strain(n.head(dim), dim);
}

double von_mises(const Vector& s)
{
    if (s.size() == 3) return std::sqrt(s[0] * s[0] - s[0] * s[1] + s[1] * s[1] + 3.0 * s[2] * s[2]);
    const double a = s[0] - s[1], b = s[1] - s[2], c = s[2] - s[0];
    return std::sqrt(0.5 * (a * a + b * b + c * c) + 3.0 * (s[3] * s[3] + s[4] * s[4] + s[5] * s[5]));
}

Vector stress_to_voigt(const Eigen::Matrix3d& t, int dim)
{
    if (dim == 2) return Eigen::Vector3d(t(0, 0), t(1, 1), t(0, 1));
    Vector v(6);
    v << t(0, 0), t(1, 1), t(2, 2), t(1, 2), t(0, 2), t(0, 1);
    return v;
}

Eigen::Matrix3d voigt_to_stress(const Vector& v, int dim)
{
    Eigen::Matrix3d t = Eigen::Matrix3d::Zero();
    if (dim == 2) {
        t << v[0], v[2], 0.0, v[2], v[1], 0.0, 0.0, 0.0, 0.0;
    } else {
        t << v[0], v[5], v[4], v[5], v[1], v[3], v[4], v[3], v[2];
    }
    return t;
}

}  // namespace dmlpg
