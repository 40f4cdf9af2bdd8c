#pragma once

#include "dmlpg/assembly/test_function.hpp"
#include "dmlpg/common.hpp"
#include "dmlpg/geometry/subdomain.hpp"
#include "dmlpg/mls/poly_basis.hpp"
#include "dmlpg/quadrature/rules.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace dmlpg {

/// Loads and boundary data in global coordinates. Prescribed tractions are
/// t = sigma(x) n with sigma given in Voigt form; body_force may be empty.
struct BoundaryData {
    std::function<Vector(const Point&)> displacement;
    std::function<Vector(const Point&)> stress;
    std::function<Vector(const Point&)> body_force;
};

/// lambda_k(p) (d x dQ, block n in columns n*d .. n*d+d-1) and beta_k (d).
struct FunctionalRow {
    Index node = -1;
    Matrix lambda;
    Vector beta;
    std::string key;
};

/// lambda_k(p) for the local weak form with test function v:
///   row i, block n = sum over pieces with unknown traction i of
///   int (N D P_n)_i v dGamma  -  int (eps_v D P_n)_i dOmega.
/// `basis` must be centered at the local origin. Pieces on which v vanishes
/// identically are skipped; the interior term is skipped for v = 1.
Matrix weak_form_lambda(const Subdomain& sd, const SubdomainRules& rules, const TestFunction& v, const Matrix& D,
                        const PolyBasis& basis);

/// beta_k = -int b v dOmega - sum over pieces with known traction i of int t_i v dGamma.
Vector weak_form_rhs(const Subdomain& sd, const SubdomainRules& rules, const TestFunction& v, const Matrix& D,
                     const BoundaryData& data);

/// Same integral as weak_form_lambda for an arbitrary displacement field
/// given through its Voigt strain at local points; used as a quadrature oracle.
Vector weak_form_apply(const Subdomain& sd, const SubdomainRules& rules, const TestFunction& v, const Matrix& D,
                       const std::function<Vector(const Point&)>& strain_local);

/// Cache of lambda_k(p) keyed by subdomain signature plus everything else the
/// local integral depends on. Records hits per key.
class LambdaCache {
public:
    std::shared_ptr<const Matrix> find(const std::string& key);
    std::shared_ptr<const Matrix> insert(const std::string& key, Matrix value);

    std::size_t entries() const;
    std::size_t total_hits() const;
    std::map<std::string, std::size_t> hits() const;
    void clear();

private:
    struct Entry {
        std::shared_ptr<const Matrix> value;
        std::size_t hits = 0;
    };
    mutable std::mutex mutex_;
    std::map<std::string, Entry> entries_;
};

}  // namespace dmlpg
