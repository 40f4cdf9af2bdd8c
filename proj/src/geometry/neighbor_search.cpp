#include "dmlpg/geometry/neighbor_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dmlpg {

NeighborSearch::NeighborSearch(const NodeSet& nodes, double cell_size) : nodes_(&nodes), dim_(nodes.dim)
{
    if (nodes.size() == 0) throw Error("neighbor search: empty node set");
    Point lo = nodes.points[0], hi = nodes.points[0];
    for (const auto& p : nodes.points) {
        lo = lo.cwiseMin(p);
        hi = hi.cwiseMax(p);
    }
    cell_ = cell_size > 0 ? cell_size : nodes.max_support();
    const double extent = (hi - lo).maxCoeff();
    if (!(cell_ > 0)) cell_ = extent > 0 ? extent : 1.0;
    // keep the grid bounded for tiny cells
    cell_ = std::max(cell_, extent / 256.0);
    origin_ = lo;
    for (int a = 0; a < dim_; ++a) shape_[a] = static_cast<long>(std::floor((hi[a] - lo[a]) / cell_)) + 1;

    const long ncells = shape_[0] * shape_[1] * shape_[2];
    std::vector<Index> count(ncells + 1, 0);
    std::vector<long> owner(nodes.size());
    for (Index i = 0; i < nodes.size(); ++i) {
        owner[i] = flat(cell_of(nodes.points[i]));
        ++count[owner[i] + 1];
    }
    for (long c = 0; c < ncells; ++c) count[c + 1] += count[c];
    start_ = count;
    items_.resize(nodes.size());
    for (Index i = 0; i < nodes.size(); ++i) items_[count[owner[i]]++] = i;
}

std::array<long, 3> NeighborSearch::cell_of(const Point& x) const
{
    std::array<long, 3> c{0, 0, 0};
    for (int a = 0; a < dim_; ++a) {
        long k = static_cast<long>(std::floor((x[a] - origin_[a]) / cell_));
        c[a] = std::clamp(k, 0L, shape_[a] - 1);
    }
    return c;
}

long NeighborSearch::flat(const std::array<long, 3>& c) const { return (c[2] * shape_[1] + c[1]) * shape_[0] + c[0]; }

std::vector<Index> NeighborSearch::within(const Point& x, double radius) const
{
    std::vector<Index> out;
    std::array<long, 3> lo{0, 0, 0}, hi{0, 0, 0};
    for (int a = 0; a < dim_; ++a) {
        lo[a] = std::clamp(static_cast<long>(std::floor((x[a] - radius - origin_[a]) / cell_)), 0L, shape_[a] - 1);
        hi[a] = std::clamp(static_cast<long>(std::floor((x[a] + radius - origin_[a]) / cell_)), 0L, shape_[a] - 1);
    }
    const double r2 = radius * radius;
    for (long k = lo[2]; k <= hi[2]; ++k)
        for (long j = lo[1]; j <= hi[1]; ++j)
            for (long i = lo[0]; i <= hi[0]; ++i) {
                const long c = flat({i, j, k});
                for (Index s = start_[c]; s < start_[c + 1]; ++s) {
                    const Index n = items_[s];
                    if ((nodes_->points[n] - x).squaredNorm() <= r2) out.push_back(n);
                }
            }
    std::sort(out.begin(), out.end());
    return out;
}

Index NeighborSearch::nearest(const Point& x) const
{
    // grow the search box ring by ring until the best candidate is provably closest
    const auto c0 = cell_of(x);
    Index best = -1;
    double best_d2 = std::numeric_limits<double>::infinity();
    const long max_ring = std::max({shape_[0], shape_[1], shape_[2]});
    for (long ring = 0; ring <= max_ring; ++ring) {
        for (long k = c0[2] - ring; k <= c0[2] + ring; ++k) {
            if (k < 0 || k >= shape_[2]) continue;
            for (long j = c0[1] - ring; j <= c0[1] + ring; ++j) {
                if (j < 0 || j >= shape_[1]) continue;
                for (long i = c0[0] - ring; i <= c0[0] + ring; ++i) {
                    if (i < 0 || i >= shape_[0]) continue;
                    const long cheb = std::max({std::abs(i - c0[0]), std::abs(j - c0[1]), std::abs(k - c0[2])});
                    if (cheb != ring) continue;
                    const long c = flat({i, j, k});
                    for (Index s = start_[c]; s < start_[c + 1]; ++s) {
                        const Index n = items_[s];
                        const double d2 = (nodes_->points[n] - x).squaredNorm();
                        if (d2 < best_d2 || (d2 == best_d2 && n < best)) {
                            best_d2 = d2;
                            best = n;
                        }
                    }
                }
            }
        }
        // every unvisited cell is at least `ring * cell_` away
        if (best >= 0 && std::sqrt(best_d2) <= ring * cell_) break;
    }
    return best;
}

double NeighborSearch::support_at(const Point& x) const { return nodes_->support_radius[nearest(x)]; }

std::vector<Index> NeighborSearch::neighbors(const Point& x) const { return within(x, support_at(x)); }

std::vector<Index> neighbors_brute_force(const NodeSet& nodes, const Point& x, double radius)
{
    std::vector<Index> out;
    for (Index j = 0; j < nodes.size(); ++j)
        if ((nodes.points[j] - x).squaredNorm() <= radius * radius) out.push_back(j);
    return out;
}

}  // namespace dmlpg
