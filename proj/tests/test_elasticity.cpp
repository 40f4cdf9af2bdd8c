#include "dmlpg/elasticity/material.hpp"
#include "dmlpg/mls/poly_basis.hpp"

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include <cmath>

using namespace dmlpg;

TEST(Material, PlaneStressMatrix)
{
    const Matrix D = elastic_matrix(MaterialModel(1.0, 0.25, ElasticMode::plane_stress));
    Matrix want(3, 3);
    want << 1, 0.25, 0, 0.25, 1, 0, 0, 0, 0.375;
    want *= 16.0 / 15.0;
    EXPECT_TRUE(D.isApprox(want, 1e-15));
    const Matrix D0 = elastic_matrix(MaterialModel(2.0, 0.0, ElasticMode::plane_stress));
    Matrix w0(3, 3);
    w0 << 2, 0, 0, 0, 2, 0, 0, 0, 1;
    EXPECT_TRUE(D0.isApprox(w0, 1e-15));
}

TEST(Material, PlaneStrainUsesModifiedConstants)
{
    const MaterialModel m(1.0, 0.25, ElasticMode::plane_strain);
    EXPECT_NEAR(m.E_bar(), 1.0 / (1 - 0.0625), 1e-15);
    EXPECT_NEAR(m.nu_bar(), 0.25 / 0.75, 1e-15);
    // classical plane-strain form E(1-nu)/((1+nu)(1-2nu)) on the diagonal
    const Matrix D = elastic_matrix(m);
    EXPECT_NEAR(D(0, 0), 0.75 / (1.25 * 0.5), 1e-14);
    EXPECT_NEAR(D(0, 1), 0.25 / (1.25 * 0.5), 1e-14);
    EXPECT_NEAR(D(2, 2), 1.0 / 2.5, 1e-14);
}

TEST(Material, SolidMatrix)
{
    const Matrix D = elastic_matrix(MaterialModel(1000.0, 0.25, ElasticMode::solid));
    ASSERT_EQ(D.rows(), 6);
    EXPECT_NEAR(D(0, 0), 1600 * 0.75, 1e-10);
    EXPECT_NEAR(D(0, 1), 1600 * 0.25, 1e-10);
    for (int i = 3; i < 6; ++i) EXPECT_NEAR(D(i, i), 400.0, 1e-10);
    EXPECT_EQ(D.block(0, 3, 3, 3).norm(), 0.0);
}

TEST(Material, PositiveDefinite)
{
    for (auto mode : {ElasticMode::plane_stress, ElasticMode::plane_strain, ElasticMode::solid})
        for (double nu : {0.0, 0.1, 0.3, 0.49}) {
            const Matrix D = elastic_matrix(MaterialModel(3.0, nu, mode));
            EXPECT_TRUE(D.isApprox(D.transpose()));
            Eigen::SelfAdjointEigenSolver<Matrix> es(D);
            EXPECT_GT(es.eigenvalues().minCoeff(), 0.0);
        }
}

TEST(Material, RejectsInvalidConstants)
{
    EXPECT_THROW(MaterialModel(0.0, 0.25, ElasticMode::solid), Error);
    EXPECT_THROW(MaterialModel(1.0, 0.5, ElasticMode::solid), Error);
    EXPECT_THROW(MaterialModel(1.0, -1.0, ElasticMode::plane_stress), Error);
    EXPECT_THROW(parse_elastic_mode("membrane"), Error);
}

TEST(StrainBasis, TwoDimensionalLayout)
{
    const double s = 0.5;
    const PolyBasis b(2, 2, Point::Zero(), s);
    Vector v;
    Matrix g;
    b.eval_gradient_local(Point(0.1, 0.2, 0), v, g);
    EXPECT_EQ(strain_basis(0, g).norm(), 0.0);
    // shifted x monomial: derivative 1/s along x
    Matrix want(3, 2);
    want << 1 / s, 0, 0, 0, 0, 1 / s;
    EXPECT_TRUE(strain_basis(1, g).isApprox(want, 1e-15));
    Vector grad(2);
    grad << 1 / s, 0;
    EXPECT_TRUE(strain_basis(grad, 2).isApprox(want, 1e-15));
}

TEST(StrainBasis, ThreeDimensionalZColumn)
{
    const double s = 2.0;
    Vector grad(3);
    grad << 0, 0, 1 / s;
    const Matrix P = strain_basis(grad, 3);
    ASSERT_EQ(P.rows(), 6);
    ASSERT_EQ(P.cols(), 3);
    // eps_zz from u_z, shears yz and xz from u_y and u_x
    Matrix want = Matrix::Zero(6, 3);
    want(2, 2) = 1 / s;
    want(3, 1) = 1 / s;
    want(4, 0) = 1 / s;
    EXPECT_TRUE(P.isApprox(want, 1e-15));
}

TEST(StrainBasis, StrainOfLinearFieldMatchesSymmetricGradient)
{
    // u = G x gives Voigt strain (G00, G11, G22, G12+G21, G02+G20, G01+G10)
    Eigen::Matrix3d G;
    G << 0.3, -0.2, 0.5, 0.7, 0.1, -0.4, 0.2, 0.6, -0.9;
    Vector eps = Vector::Zero(6);
    for (int c = 0; c < 3; ++c) {
        Vector grad = G.row(c).transpose();
        eps += strain_basis(grad, 3).col(c);
    }
    Vector want(6);
    want << G(0, 0), G(1, 1), G(2, 2), G(1, 2) + G(2, 1), G(0, 2) + G(2, 0), G(0, 1) + G(1, 0);
    EXPECT_TRUE(eps.isApprox(want, 1e-15));
}

TEST(TestStrain, Layouts)
{
    EXPECT_EQ(test_strain(Vector::Zero(2), 2).norm(), 0.0);
    Vector gx(2);
    gx << 1, 0;
    Matrix want(2, 3);
    want << 1, 0, 0, 0, 0, 1;
    EXPECT_TRUE(test_strain(gx, 2).isApprox(want));
    Vector gz(3);
    gz << 0, 0, 1;
    const Matrix e = test_strain(gz, 3);
    ASSERT_EQ(e.rows(), 3);
    ASSERT_EQ(e.cols(), 6);
    // it is the transpose of the strain operator of the same gradient
    EXPECT_TRUE(e.isApprox(strain_basis(gz, 3).transpose()));
}

TEST(NormalMatrix, TractionsFromStress)
{
    Matrix n1(2, 3), n2(2, 3);
    n1 << 1, 0, 0, 0, 0, 1;
    n2 << 0, 0, 1, 0, 1, 0;
    EXPECT_TRUE(normal_matrix(Point(1, 0, 0), 2).isApprox(n1));
    EXPECT_TRUE(normal_matrix(Point(0, 1, 0), 2).isApprox(n2));
    Vector sigma(3);
    sigma << 1, 0, 0;
    EXPECT_TRUE((normal_matrix(Point(1, 0, 0), 2) * sigma).isApprox(Vector::Unit(2, 0)));
    EXPECT_THROW(normal_matrix(Point(2, 0, 0), 2), Error);
}

TEST(NormalMatrix, MatchesTensorProductIn3D)
{
    Eigen::Matrix3d S;
    S << 1, 2, 3, 2, 4, 5, 3, 5, 6;
    const Point n = Point(1, -2, 2).normalized();
    const Vector t = normal_matrix(n, 3) * stress_to_voigt(S, 3);
    EXPECT_TRUE(t.isApprox(Vector(S * n), 1e-14));
    EXPECT_TRUE(voigt_to_stress(stress_to_voigt(S, 3), 3).isApprox(S));
}

TEST(VonMises, ClosedForms)
{
    EXPECT_EQ(von_mises(Vector::Zero(3)), 0.0);
    Vector uni(3);
    uni << 2.5, 0, 0;
    EXPECT_NEAR(von_mises(uni), 2.5, 1e-15);
    Vector shear(3);
    shear << 0, 0, 1.5;
    EXPECT_NEAR(von_mises(shear), 1.5 * std::sqrt(3.0), 1e-14);
    Vector hydro(6);
    hydro << 2, 2, 2, 0, 0, 0;
    EXPECT_NEAR(von_mises(hydro), 0.0, 1e-14);
    Vector uni3 = Vector::Zero(6);
    uni3[2] = -4.0;
    EXPECT_NEAR(von_mises(uni3), 4.0, 1e-14);
}
