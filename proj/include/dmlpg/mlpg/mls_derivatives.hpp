#pragma once

#include "dmlpg/common.hpp"
#include "dmlpg/geometry/node_set.hpp"
#include "dmlpg/mls/gmls.hpp"

#include <vector>

namespace dmlpg {

/// MLS shape functions and their standard (full) first derivatives at x.
/// Node j carries its own support radius delta_j: w_j(x) = phi(|x - x_j| / delta_j).
struct ShapeFunctionEvaluation {
    Point x = Point::Zero();
    std::vector<Index> active;
    Vector values;     // a_j(x)
    Matrix gradients;  // d x |active|, d a_j / d x_i
};

/// `candidates` must contain every node whose support covers x (extra nodes
/// are filtered out by their zero weight).
ShapeFunctionEvaluation mls_shape_with_derivatives(const Point& x, const NodeSet& nodes,
                                                   const std::vector<Index>& candidates, const GmlsSettings& settings);

}  // namespace dmlpg
