#pragma once

#include "dmlpg/assembly/weak_form.hpp"
#include "dmlpg/common.hpp"
#include "dmlpg/elasticity/material.hpp"
#include "dmlpg/geometry/domain.hpp"
#include "dmlpg/geometry/neighbor_search.hpp"
#include "dmlpg/geometry/subdomain.hpp"
#include "dmlpg/mls/gmls.hpp"
#include "dmlpg/quadrature/rules.hpp"

#include <Eigen/Sparse>

#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace dmlpg {

enum class Method { dmlpg1, dmlpg5, mlpg1, mlpg5 };

Method parse_method(const std::string& name);
std::string to_string(Method method);
bool is_direct(Method method);
/// Variant 5 (v = 1, boundary integrals only).
bool is_unit_test(Method method);

/// Default Gauss points per axis on boxes: ceil(((m-1)+2+1)/2) for variant 1
/// with the quadratic box test function, ceil(m/2) for variant 5 boundary
/// integrals, 10 for the classical baseline.
int default_box_points(Method method, int degree);

struct AssemblyOptions {
    Method method = Method::dmlpg1;
    GmlsSettings gmls;
    SubdomainPolicy subdomains;
    QuadratureCounts quadrature{0, 10};  // box == 0 selects default_box_points
    int data_points = 10;                // minimum points per axis for body-force and traction integrals
    bool use_cache = true;
    bool parallel = true;
    bool row_scaling = false;  // scale weak-form rows by 1 / |Omega_k|

    QuadratureCounts effective_quadrature() const;
    /// Rule sizes for the right-hand side, whose data need not be polynomial.
    QuadratureCounts data_quadrature() const;
};

enum class RowKind { collocation, weak_form, mixed };

struct AssemblyStats {
    double seconds = 0.0;
    std::size_t shape_evaluations = 0;  // MLS evaluations inside integration loops
    std::size_t cache_entries = 0;
    std::size_t cache_hits = 0;
    std::map<std::string, std::size_t> cache_hits_by_key;
    std::map<std::string, std::size_t> nodes_by_key;  // weak-form nodes per lambda key
    std::size_t max_active = 0;
};

/// K u = R with node-major unknowns (d consecutive components per node).
struct GlobalSystem {
    int dim = 2;
    Index nodes = 0;
    Eigen::SparseMatrix<double, Eigen::RowMajor> K;
    Vector R;
    std::vector<RowKind> row_kind;  // per node
    AssemblyStats stats;

    Index rows() const { return K.rows(); }
};

/// Weak-form block row of one node: K entries for the d rows of node k.
struct WeakRow {
    std::vector<Index> columns;  // node indices
    Matrix block;                // d x d*|columns|, column d*j + c multiplies u_c(x_columns[j])
    Vector beta;
    double measure = 1.0;
    std::size_t shape_evaluations = 0;
    std::string key;  // lambda cache key, empty if none
};

/// Everything a weak-row provider needs about the discretization.
struct AssemblyContext {
    const NodeSet& nodes;
    const DomainGeometry& geometry;
    const MaterialModel& material;
    const BoundaryData& data;
    const AssemblyOptions& options;
    const NeighborSearch& search;
    Matrix D;
    RuleCache& rules;
    LambdaCache& lambdas;
};

/// Generic driver: collocation rows on prescribed components, weak-form
/// rows from `provider` elsewhere. Per-node work runs in an OpenMP loop when
/// options.parallel is set; the result is identical either way.
using WeakRowProvider = std::function<WeakRow(const AssemblyContext&, Index k, const MomentSystem& at_node)>;
GlobalSystem assemble_with(const NodeSet& nodes, const DomainGeometry& geometry, const MaterialModel& material,
                           const BoundaryData& data, const AssemblyOptions& options, const WeakRowProvider& provider,
                           LambdaCache* cache = nullptr);

/// Dispatches to the direct or classical assembly by options.method.
GlobalSystem assemble(const NodeSet& nodes, const DomainGeometry& geometry, const MaterialModel& material,
                      const BoundaryData& data, const AssemblyOptions& options, LambdaCache* cache = nullptr);

struct SolveResult {
    Vector u;
    double residual = 0.0;  // |K u - R| / |R|
    double seconds = 0.0;
};

/// Sparse LU with COLAMD ordering. Throws SolveError on a singular factorization
/// or a non-finite / inaccurate solution.
SolveResult solve(const GlobalSystem& system, double max_residual = 1e-6);

/// Plain-text coordinate dump: "K rows cols nnz", then "row col value" lines,
/// then "R n" and one value per line. Indices are zero-based.
void write_system(std::ostream& out, const GlobalSystem& system);

}  // namespace dmlpg
