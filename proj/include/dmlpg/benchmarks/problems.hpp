#pragma once

#include "dmlpg/benchmarks/exact.hpp"
#include "dmlpg/geometry/domain.hpp"
#include "dmlpg/geometry/node_set.hpp"
#include "dmlpg/geometry/subdomain.hpp"

#include <string>
#include <vector>

namespace dmlpg {

enum class ProblemKind { beam, plate, boussinesq, manufactured };

ProblemKind parse_problem(const std::string& name);
std::string to_string(ProblemKind kind);

/// Problem constants, node-cloud parameters and discretization sizing.
/// Factors <= 0 select the per-problem default.
struct ProblemConfig {
    ProblemKind kind = ProblemKind::beam;
    int degree = 2;

    double delta_factor = 0.0;       // delta = factor * m * h (beam, manufactured, boussinesq)
    double delta_factor_near = 2.0;  // plate, |x| <= 2a
    double delta_factor_far = 2.5;   // plate, elsewhere

    SubdomainShape shape = SubdomainShape::box;
    double box_factor = 1.0;
    double ball_factor = 0.7;
    double curved_factor = 0.7;

    // beam
    double L = 8.0, D = 1.0, P = 1.0;
    int nx = 33, ny = 5;
    // plate
    double a = 1.0, b = 4.0, sigma = 1.0;
    int nr = 23, ntheta = 23;
    double grading = 1.055;
    // boussinesq
    double sphere_radius = 10.0, inner_radius = 0.25;
    long target = 1386;
    // manufactured: box [0,1]^dim, polynomial field of `field_degree`
    int dim = 2;
    int field_degree = 2;
    int grid = 6;
    // material (defaults per problem when E <= 0)
    double E = 0.0, nu = 0.25;
    ElasticMode mode = ElasticMode::plane_stress;

    double default_delta_factor() const;
    SubdomainPolicy subdomain_policy() const;
};

/// A refinement level of a problem: nodes, domain, closed form and the
/// fixed fine evaluation mesh used for the error norms.
struct ProblemSetup {
    ProblemKind kind = ProblemKind::beam;
    NodeSet nodes;
    DomainGeometry geometry;
    ExactSolution exact;
    std::vector<Point> evaluation_points;
    std::string evaluation_mesh;  // description
};

/// Level 0 is the configured cloud; each level halves the spacing.
ProblemSetup make_problem(const ProblemConfig& config, int level);

/// Evaluation meshes.
std::vector<Point> beam_evaluation_mesh(double L, double D);                // 161 x 21 closed grid
std::vector<Point> plate_evaluation_mesh(double a, double b);               // 80 x 80 polar grid
std::vector<Point> boussinesq_evaluation_mesh(double r_min, double r_max);  // 40 x 40 surface grid + shell at rho = 2

/// Deterministic coefficient matrix for the manufactured polynomial field.
Matrix manufactured_coefficients(int dim, int degree);

}  // namespace dmlpg
