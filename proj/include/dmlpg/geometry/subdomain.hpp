#pragma once

#include "dmlpg/geometry/domain.hpp"
#include "dmlpg/geometry/node_set.hpp"

#include <string>
#include <vector>

namespace dmlpg {

enum class SubdomainShape { box, ball };  // ball is a disk in 2D

enum class PieceKind {
    box_face,      // axis-aligned face of a (clipped) box
    arc,           // 2D: part of the subdomain circle
    hole_arc,      // 2D: part of a domain hole circle passing through the center
    segment,       // 2D: straight radial cut along a domain edge through the center
    sphere_patch,  // 3D: part of the subdomain sphere
    flat_sector,   // 3D: planar circular wedge along a domain plane through the center
};

/// One piece of the subdomain boundary. All coordinates are local, relative
/// to the subdomain center. `surface` is the index of the global boundary
/// surface the piece lies on, or -1 for the interior part of the boundary.
struct BoundaryPiece {
    PieceKind kind = PieceKind::box_face;
    int surface = -1;
    unsigned displacement_mask = 0;  // of the global surface; 0 for interior pieces
    Point normal = Point::Zero();    // outward unit normal for flat pieces

    // box_face
    int axis = 0;
    double position = 0.0;
    Point lo = Point::Zero(), hi = Point::Zero();  // face extent (the `axis` entries equal `position`)

    // angular pieces: arc/hole_arc/segment use t0..t1 as the polar angle range
    // (segment: t0 == t1 is its direction); flat_sector uses in-plane axes u, w
    double t0 = 0.0, t1 = 0.0;
    double radius = 0.0;
    Point u = Point::Zero(), w = Point::Zero();
    double rho_lo0 = 0.0;  // segment: start radius

    // sphere_patch: azimuth t0..t1, cosine of polar angle c0..c1
    double c0 = -1.0, c1 = 1.0;

    bool on_boundary() const { return surface >= 0; }
    /// Traction component i is prescribed on this piece (it lies on a surface
    /// that does not prescribe displacement component i).
    bool traction_known(int component) const
    {
        return surface >= 0 && !((displacement_mask >> component) & 1u);
    }
};

struct Subdomain {
    Index node = -1;
    int dim = 2;
    Point center = Point::Zero();
    SubdomainShape shape = SubdomainShape::box;
    double size = 0.0;  // full side s for boxes, radius r for balls

    // box: local extent after clipping
    Point lo = Point::Zero(), hi = Point::Zero();

    // ball: 2D polar range theta0..theta1, 3D azimuth range theta0..theta1 and
    // cosine-of-polar-angle range cos_lo..cos_hi
    double theta0 = 0.0, theta1 = 0.0;
    double cos_lo = -1.0, cos_hi = 1.0;

    // 2D hole circle through the center: local offset of the hole center
    bool has_hole = false;
    Point hole_offset = Point::Zero();
    double hole_radius = 0.0;
    int hole_surface = -1;

    // 2D balls: angular intervals covering the region, split where the inner
    // radius max(0, 2 o.e) changes form, and whether the hole bounds each one
    struct Sector {
        double t0, t1;
        bool hole;
    };
    std::vector<Sector> sectors;

    std::vector<BoundaryPiece> pieces;

    /// Inner polar radius of the 2D region along direction theta.
    double inner_radius(double theta) const;

    bool clipped() const;
    bool touches_boundary() const;
    double measure() const;  // analytic |Omega_k|
    bool contains_local(const Point& y, double tol = 1e-12) const;

    /// Exact textual key: two subdomains with equal signatures have identical
    /// local geometry and boundary classification.
    std::string signature() const;
};

/// Builds Omega_k = shape(x_k, size) intersected with the domain. Only
/// surfaces through x_k may cut the shape; callers keep `size` small enough
/// for this (see subdomain_size). Throws UnsupportedClipError otherwise.
Subdomain build_subdomain(Index k, const Point& center, SubdomainShape shape, double size,
                          const DomainGeometry& geometry);

/// Subdomain shape/size policy applied per node.
struct SubdomainPolicy {
    SubdomainShape shape = SubdomainShape::box;
    double box_factor = 1.0;     // side s_k = box_factor * h_k
    double ball_factor = 0.7;    // radius r_k = ball_factor * h_k
    double curved_factor = 0.7;  // radius for nodes on curved surfaces (always balls)
};

/// Subdomain of node k per the policy, with the size limited so that only
/// surfaces through x_k can cut it.
Subdomain make_subdomain(Index k, const NodeSet& nodes, const DomainGeometry& geometry, const SubdomainPolicy& policy);

}  // namespace dmlpg
