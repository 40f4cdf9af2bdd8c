#pragma once

#include "dmlpg/common.hpp"

#include <array>
#include <vector>

namespace dmlpg {

using MultiIndex = std::array<int, 3>;

inline int order(const MultiIndex& alpha) { return alpha[0] + alpha[1] + alpha[2]; }

/// Q = C(m + d, d).
int basis_size(int dim, int degree);

/// Exponents of P_m(R^d) in graded lexicographic order; the first one is the constant.
std::vector<MultiIndex> graded_exponents(int dim, int degree);

/// Shifted and scaled monomials p_n((x - center) / scale).
class PolyBasis {
public:
    PolyBasis(int dim, int degree, const Point& center, double scale);

    int dim() const { return dim_; }
    int degree() const { return degree_; }
    int size() const { return static_cast<int>(exponents_.size()); }
    const Point& center() const { return center_; }
    double scale() const { return scale_; }
    const std::vector<MultiIndex>& exponents() const { return exponents_; }

    /// D^alpha of every basis function at x. Throws for |alpha| > degree.
    Vector eval(const Point& x, const MultiIndex& alpha = {0, 0, 0}) const;

    /// Same as eval, but takes the offset x - center.
    Vector eval_local(const Point& offset, const MultiIndex& alpha = {0, 0, 0}) const;

    /// Values (Q) and first derivatives (dim x Q) at the offset x - center.
    void eval_gradient_local(const Point& offset, Vector& values, Matrix& gradient) const;

private:
    int dim_;
    int degree_;
    Point center_;
    double scale_;
    std::vector<MultiIndex> exponents_;
};

}  // namespace dmlpg
