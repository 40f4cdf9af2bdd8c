#pragma once

#include "dmlpg/common.hpp"
#include "dmlpg/geometry/subdomain.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace dmlpg {

/// Points and weights with the Jacobian absorbed. Boundary rules also carry
/// the outward unit normal per point. `exactness` is the total polynomial
/// degree integrated exactly, or -1 when the rule is only approximate.
struct QuadratureRule {
    std::vector<Point> points;
    std::vector<double> weights;
    std::vector<Point> normals;
    int exactness = -1;

    std::size_t size() const { return points.size(); }
    double sum() const;
    void append(const QuadratureRule& other);
    /// Copy with every point shifted by `offset`.
    QuadratureRule translated(const Point& offset) const;
};

/// Tensor Gauss rule on the box [lo, hi] (first `dim` axes).
QuadratureRule rule_box(int dim, const Point& lo, const Point& hi, int n_per_axis);

/// Polar (2D) or spherical (3D) product rule on a full disk/ball.
QuadratureRule rule_disk_or_ball(int dim, const Point& center, double radius, int n_radial, int n_angular);

/// Points per axis/direction used for subdomain rules.
struct QuadratureCounts {
    int box = 2;       // Gauss points per axis on boxes and box faces
    int curved = 10;   // Gauss points per direction on disks, balls and their boundaries
};

/// Interior rule of a (possibly clipped) subdomain, in local coordinates.
QuadratureRule rule_clipped(const Subdomain& sd, const QuadratureCounts& counts);

/// Rule for one boundary piece, in local coordinates, with normals.
QuadratureRule rule_piece(const Subdomain& sd, const BoundaryPiece& piece, const QuadratureCounts& counts);

/// Union of the rules of the selected pieces (all pieces when `selector` is empty).
QuadratureRule rule_boundary(const Subdomain& sd, const std::vector<int>& selector, const QuadratureCounts& counts);

/// Interior and per-piece rules of one subdomain, in local coordinates.
struct SubdomainRules {
    QuadratureRule interior;
    std::vector<QuadratureRule> pieces;
};

SubdomainRules build_rules(const Subdomain& sd, const QuadratureCounts& counts);

/// Rules keyed by subdomain signature and point counts. Safe for concurrent use.
class RuleCache {
public:
    std::shared_ptr<const SubdomainRules> get(const Subdomain& sd, const QuadratureCounts& counts);
    std::size_t size() const;

private:
    mutable std::mutex mutex_;
    std::map<std::string, std::shared_ptr<const SubdomainRules>> rules_;
};

}  // namespace dmlpg
