#pragma once

#include "dmlpg/common.hpp"
#include "dmlpg/geometry/neighbor_search.hpp"
#include "dmlpg/mls/poly_basis.hpp"

#include <Eigen/Cholesky>

#include <iosfwd>
#include <vector>

namespace dmlpg {

struct GmlsSettings {
    int degree = 2;
    double epsilon = 4.0;
    double max_condition = 1e12;
};

/// Weighted least-squares system at a point: P (|J| x Q), the weights, and a
/// Cholesky factorization of A = P^T W P.
struct MomentSystem {
    Point center = Point::Zero();
    double scale = 1.0;
    int dim = 2;
    int degree = 2;
    std::vector<Index> active;
    Matrix P;
    Vector weights;
    Eigen::LLT<Matrix> factor;
    double condition = 0.0;

    PolyBasis basis() const { return PolyBasis(dim, degree, center, scale); }

    /// Phi = A^{-1} P^T W, Q x |J|. Every GMLS row is lambda(p) * Phi.
    Matrix shape_operator() const;
};

/// Builds the moment system at `center` over the nodes in `active`. Nodes with
/// zero weight are dropped from the active set. Throws NodeDeficiencyError if
/// the factorization fails or the condition estimate exceeds the threshold.
MomentSystem build_moment_system(const Point& center, double support, const NodeSet& nodes,
                                 const std::vector<Index>& active, const GmlsSettings& settings, Index node = -1);

/// Same, with the active set taken from the nodes within `support` of `center`.
MomentSystem build_moment_system(const Point& center, double support, const NeighborSearch& search,
                                 const GmlsSettings& settings, Index node = -1);

/// Coefficients a_j(lambda) for d' functionals at once (one per row).
struct GmlsRow {
    std::vector<Index> active;
    Matrix coefficients;  // d' x |active|

    /// Sum_j a_j q(x_j) for nodal data q (one value per node of the full set).
    Vector apply(const Vector& nodal) const;
};

/// a(lambda) = lambda(p) A^{-1} P^T W; lambda_p is d' x Q.
GmlsRow gmls_row(const Matrix& lambda_p, const MomentSystem& moment);

/// Point-evaluation row at x with the support radius of the nearest node.
GmlsRow mls_shape(const Point& x, const NeighborSearch& search, const GmlsSettings& settings = {});

/// GMLS derivative row: lambda(p_n) = D^alpha p_n(x).
GmlsRow gmls_derivative_row(const Point& x, const MultiIndex& alpha, const NeighborSearch& search,
                            const GmlsSettings& settings = {});

/// Plain-text dump of a row, one "index coefficient..." line per active node.
void write_gmls_row(std::ostream& out, const GmlsRow& row);

}  // namespace dmlpg
