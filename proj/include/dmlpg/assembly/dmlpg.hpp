#pragma once

#include "dmlpg/assembly/system.hpp"

namespace dmlpg {

/// lambda_k(p) and beta_k of one test node for a direct variant. The basis is
/// centered at x_k with scale `delta`; `data` may be null to skip beta, which
/// is integrated with at least 10 points per direction.
FunctionalRow functional_row(const Subdomain& sd, const MaterialModel& material, Method method,
                             const QuadratureCounts& counts, int degree, double delta, const BoundaryData* data,
                             double epsilon = 4.0);

/// Cache key of lambda_k(p): everything the local integral depends on.
std::string lambda_key(const Subdomain& sd, const MaterialModel& material, Method method,
                       const QuadratureCounts& counts, int degree, double delta, double epsilon);

/// Block row of d equations acting on the nodes in `columns`.
struct BlockRow {
    std::vector<Index> columns;
    Matrix block;  // d x d*|columns|
    Vector rhs;
};

/// B_kl = a_l(x_k) I_d with right-hand side u_bar(x_k).
BlockRow collocation_row(const GmlsRow& shape, int dim, const Vector& u_bar);

/// Replaces the prescribed components of a weak-form row by collocation rows.
BlockRow mixed_bc_replace(const WeakRow& weak, const GmlsRow& shape, const BoundaryTag& tag, const Vector& u_bar,
                          int dim);

/// Weak-row provider of the direct variants: A_k = lambda_k(p) Phi.
WeakRowProvider dmlpg_provider();

GlobalSystem assemble_dmlpg(const NodeSet& nodes, const DomainGeometry& geometry, const MaterialModel& material,
                            const BoundaryData& data, const AssemblyOptions& options, LambdaCache* cache = nullptr);

}  // namespace dmlpg
