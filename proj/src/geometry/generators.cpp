#include "dmlpg/geometry/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace dmlpg {

namespace {

void finish(NodeSet& nodes) { reorder_dirichlet_first(nodes); }

}  // namespace

NodeSet generate_box_nodes(const DomainGeometry& geometry, const std::array<int, 3>& counts, const Point& lo,
                           const Point& hi, SupportPolicy support)
{
    const int dim = geometry.dim();
    double h = 0.0;
    for (int a = 0; a < dim; ++a) {
        if (counts[a] < 2) throw Error("grid generator: need at least 2 nodes per axis");
        h = std::max(h, (hi[a] - lo[a]) / (counts[a] - 1));
    }
    NodeSet nodes;
    nodes.dim = dim;
    nodes.mesh_size = h;
    const int nz = dim == 3 ? counts[2] : 1;
    const double delta = support.factor * support.m * h;
    for (int k = 0; k < nz; ++k) {
        for (int j = 0; j < counts[1]; ++j) {
            for (int i = 0; i < counts[0]; ++i) {
                Point p = Point::Zero();
                const std::array<int, 3> idx{i, j, k};
                for (int a = 0; a < dim; ++a) {
                    // endpoints are assigned exactly so boundary tests need no tolerance slack
                    p[a] = idx[a] == counts[a] - 1 ? hi[a] : lo[a] + (hi[a] - lo[a]) * idx[a] / (counts[a] - 1);
                }
                nodes.push_back(p, geometry.classify(p), delta, h);
            }
        }
    }
    finish(nodes);
    return nodes;
}

NodeSet generate_beam_nodes(int nx, int ny, double length, double depth, SupportPolicy support)
{
    if (nx < 2 || ny < 2) throw Error("beam generator: nx and ny must be at least 2");
    const auto geometry = DomainGeometry::beam(length, depth);
    return generate_box_nodes(geometry, {nx, ny, 1}, Point(0, 0, 0), Point(length, depth, 0), support);
}

NodeSet generate_plate_nodes(double a, double b, int nr, int ntheta, double grading, PlateSupportPolicy support)
{
    if (!(a < b)) throw Error("plate generator: hole radius must be smaller than the plate half-width");
    if (nr < 2 || ntheta < 2) throw Error("plate generator: nr and ntheta must be at least 2");
    if (!(grading >= 1.0)) throw Error("plate generator: grading must be >= 1");
    const auto geometry = DomainGeometry::plate_quadrant(a, b);

    std::vector<double> t(nr);
    for (int i = 0; i < nr; ++i) {
        t[i] = grading == 1.0 ? double(i) / (nr - 1)
                              : (std::pow(grading, i) - 1.0) / (std::pow(grading, nr - 1) - 1.0);
    }
    t.back() = 1.0;

    const double half_pi = std::numbers::pi / 2.0;
    std::vector<Point> grid(static_cast<std::size_t>(nr) * ntheta);
    auto at = [&](int i, int j) -> Point& { return grid[static_cast<std::size_t>(j) * nr + i]; };
    for (int j = 0; j < ntheta; ++j) {
        const double theta = half_pi * j / (ntheta - 1);
        const double c = j == ntheta - 1 ? 0.0 : std::cos(theta);
        const double s = j == 0 ? 0.0 : std::sin(theta);
        const double outer = b / std::max(c, s);
        for (int i = 0; i < nr; ++i) {
            const double r = i == 0 ? a : a + (outer - a) * t[i];
            Point p(r * c, r * s, 0.0);
            if (i == nr - 1) {
                if (c >= s) p[0] = b;
                if (s >= c) p[1] = b;
            }
            at(i, j) = p;
        }
    }

    NodeSet nodes;
    nodes.dim = 2;
    const double h_r = (at(1, 0) - at(0, 0)).norm();
    const double h_theta = (at(0, 1) - at(0, 0)).norm();
    nodes.mesh_size = std::min(h_r, h_theta);
    for (int j = 0; j < ntheta; ++j) {
        for (int i = 0; i < nr; ++i) {
            const Point& p = at(i, j);
            double local = 0.0;
            if (i > 0) local = std::max(local, (p - at(i - 1, j)).norm());
            if (i + 1 < nr) local = std::max(local, (p - at(i + 1, j)).norm());
            if (j > 0) local = std::max(local, (p - at(i, j - 1)).norm());
            if (j + 1 < ntheta) local = std::max(local, (p - at(i, j + 1)).norm());
            const bool near = p.norm() <= support.near_radius * a;
            const double delta = (near ? support.factor_near : support.factor_far) * support.m * local;
            nodes.push_back(p, geometry.classify(p), delta, local);
        }
    }
    finish(nodes);
    return nodes;
}

int ShellLayout::subdivisions(int layer) const
{
    if (layers <= 1) return n_inner;
    const double f = double(layer) / (layers - 1);
    return static_cast<int>(std::lround(n_inner + (n_outer - n_inner) * f));
}

namespace {

Index shell_count(int layers, int n_inner, int n_outer)
{
    ShellLayout l{layers, n_inner, n_outer, 0};
    Index total = 0;
    for (int i = 0; i < layers; ++i) total += ShellLayout::layer_count(l.subdivisions(i));
    return total;
}

}  // namespace

ShellLayout choose_shell_layout(double b, double r_inner, Index target)
{
    if (!(r_inner < b)) throw Error("shell generator: inner radius must be smaller than the outer radius");
    if (target < 2) throw Error("shell generator: target count must be at least 2");
    const double log_ratio = std::log(b / r_inner);
    const double tolerance = 0.02 * double(target);

    ShellLayout best;
    double best_score = std::numeric_limits<double>::infinity();
    bool best_within = false;
    for (int layers = 2; layers <= 80; ++layers) {
        const double radial = std::expm1(log_ratio / (layers - 1));  // gap / radius
        for (int n_in = 0; n_in <= 48; ++n_in) {
            if (ShellLayout::layer_count(n_in) > target) break;
            for (int n_out = 0; n_out <= n_in; ++n_out) {
                const Index count = shell_count(layers, n_in, n_out);
                const double miss = std::abs(double(count - target));
                const bool within = miss <= tolerance;
                // geometric radii keep gap / radius fixed, so near-isotropic cells need
                // about the same angular count on every layer
                const double angular_in = (std::numbers::pi / 2.0) / std::max(n_in, 1);
                const double angular_out = (std::numbers::pi / 2.0) / std::max(n_out, 1);
                const double shape = std::abs(std::log(angular_in / radial)) + std::abs(std::log(angular_out / radial));
                const double score = within ? shape + miss / target : 1e6 + miss;
                if ((within && !best_within) || (within == best_within && score < best_score)) {
                    best = {layers, n_in, n_out, count};
                    best_score = score;
                    best_within = within;
                }
            }
        }
    }
    return best;
}

NodeSet generate_shell_nodes(double b, double r_inner, const ShellLayout& layout, SupportPolicy support)
{
    if (!(r_inner < b)) throw Error("shell generator: inner radius must be smaller than the outer radius");
    if (layout.layers < 2) throw Error("shell generator: need at least two layers");
    const auto geometry = DomainGeometry::sphere_octant(b, r_inner);
    const int layers = layout.layers;

    std::vector<double> radius(layers);
    for (int i = 0; i < layers; ++i) radius[i] = r_inner * std::pow(b / r_inner, double(i) / (layers - 1));
    radius.front() = r_inner;
    radius.back() = b;

    NodeSet nodes;
    nodes.dim = 3;
    double min_spacing = std::numeric_limits<double>::infinity();
    for (int layer = 0; layer < layers; ++layer) {
        const int n = layout.subdivisions(layer);
        const double rho = radius[layer];
        double radial_gap = 0.0;
        if (layer > 0) radial_gap = std::max(radial_gap, rho - radius[layer - 1]);
        if (layer + 1 < layers) radial_gap = std::max(radial_gap, radius[layer + 1] - rho);

        auto direction = [n](int i, int j) {
            if (n == 0) return Point(Point(1, 1, 1).normalized());
            Point d(i, j, n - i - j);
            d.normalize();
            return d;
        };
        for (int i = 0; i <= n; ++i) {
            for (int j = 0; j <= n - i; ++j) {
                const Point dir = direction(i, j);
                Point p = rho * dir;
                // lattice points with a zero barycentric index lie exactly on a coordinate plane
                if (n > 0) {
                    if (i == 0) p[0] = 0.0;
                    if (j == 0) p[1] = 0.0;
                    if (n - i - j == 0) p[2] = 0.0;
                }
                double angular = n == 0 ? rho * std::numbers::pi / 2.0 : 0.0;
                static const int steps[6][2] = {{1, -1}, {-1, 1}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}};
                for (const auto& s : steps) {
                    const int ii = i + s[0], jj = j + s[1];
                    if (n == 0 || ii < 0 || jj < 0 || ii + jj > n) continue;
                    angular = std::max(angular, rho * (direction(ii, jj) - dir).norm());
                }
                const double local = std::max(radial_gap, angular);
                min_spacing = std::min(min_spacing, local);
                nodes.push_back(p, geometry.classify(p), support.factor * support.m * local, local);
            }
        }
    }
    nodes.mesh_size = min_spacing;
    finish(nodes);
    return nodes;
}

NodeSet generate_boussinesq_nodes(double b, double r_inner, Index target, SupportPolicy support)
{
    return generate_shell_nodes(b, r_inner, choose_shell_layout(b, r_inner, target), support);
}

}  // namespace dmlpg
