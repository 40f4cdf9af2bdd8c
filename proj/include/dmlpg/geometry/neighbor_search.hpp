#pragma once

#include "dmlpg/geometry/node_set.hpp"

#include <array>
#include <vector>

namespace dmlpg {

/// Uniform background bin grid over the node cloud. Cell size defaults to the
/// largest support radius so a support-radius query touches at most 3^d cells.
class NeighborSearch {
public:
    explicit NeighborSearch(const NodeSet& nodes, double cell_size = 0.0);

    /// Indices j with |x - x_j| <= radius, ascending.
    std::vector<Index> within(const Point& x, double radius) const;

    /// Index of the closest node; ties resolve to the smallest index.
    Index nearest(const Point& x) const;

    /// Active set of x: nodes within the support radius of the nearest node.
    std::vector<Index> neighbors(const Point& x) const;

    /// Support radius attributed to an arbitrary point (that of its nearest node).
    double support_at(const Point& x) const;

    const NodeSet& nodes() const { return *nodes_; }

private:
    std::array<long, 3> cell_of(const Point& x) const;
    long flat(const std::array<long, 3>& c) const;

    const NodeSet* nodes_;
    int dim_;
    double cell_;
    Point origin_;
    std::array<long, 3> shape_{1, 1, 1};
    std::vector<Index> start_;  // CSR offsets into items_, one per cell + 1
    std::vector<Index> items_;
};

/// Brute-force O(N) reference for `within`.
std::vector<Index> neighbors_brute_force(const NodeSet& nodes, const Point& x, double radius);

}  // namespace dmlpg
