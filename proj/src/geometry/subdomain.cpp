#include "dmlpg/geometry/subdomain.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace dmlpg {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

Point polar(double t) { return Point(std::cos(t), std::sin(t), 0.0); }

/// Intersection of the half-circles {t : n_i . e(t) <= 0}. Returns false if it
/// degenerates to a ray or less.
bool angular_range(const std::vector<Point>& normals, double& t0, double& t1)
{
    if (normals.empty()) {
        t0 = 0.0;
        t1 = two_pi;
        return true;
    }
    auto start_of = [](const Point& n) { return std::atan2(n[1], n[0]) + std::numbers::pi / 2.0; };
    t0 = start_of(normals[0]);
    t1 = t0 + std::numbers::pi;
    for (std::size_t i = 1; i < normals.size(); ++i) {
        double b = start_of(normals[i]);
        while (b < t0 - std::numbers::pi) b += two_pi;
        while (b >= t0 + std::numbers::pi) b -= two_pi;
        if (b < t0) {
            t1 = std::min(t1, b + std::numbers::pi);
        } else if (b <= t1) {
            t0 = b;
        } else {
            return false;
        }
    }
    return t1 - t0 > 1e-12;
}

std::string hex(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%a", v);
    return buf;
}

bool axis_aligned(const Point& n, int dim, int& axis)
{
    for (int a = 0; a < dim; ++a) {
        if (std::abs(std::abs(n[a]) - 1.0) < 1e-14) {
            axis = a;
            return true;
        }
    }
    return false;
}

void build_box(Subdomain& sd, const DomainGeometry& geometry, const std::vector<int>& through)
{
    const int dim = sd.dim;
    const double half = 0.5 * sd.size;
    std::vector<int> lo_surface(dim, -1), hi_surface(dim, -1);
    for (int a = 0; a < dim; ++a) {
        sd.lo[a] = -half;
        sd.hi[a] = half;
    }
    for (int s : through) {
        const Surface& surf = geometry.surfaces()[s];
        int axis = -1;
        if (surf.curved())
            throw UnsupportedClipError("box subdomain cut by curved surface '" + surf.name + "'", sd.node);
        if (!axis_aligned(surf.normal, dim, axis))
            throw UnsupportedClipError("box subdomain cut by oblique plane '" + surf.name + "'", sd.node);
        // domain is n . y <= 0 in local coordinates
        if (surf.normal[axis] > 0) {
            if (hi_surface[axis] >= 0 || lo_surface[axis] >= 0)
                throw UnsupportedClipError("box subdomain cut twice along one axis", sd.node);
            sd.hi[axis] = 0.0;
            hi_surface[axis] = s;
        } else {
            if (lo_surface[axis] >= 0 || hi_surface[axis] >= 0)
                throw UnsupportedClipError("box subdomain cut twice along one axis", sd.node);
            sd.lo[axis] = 0.0;
            lo_surface[axis] = s;
        }
    }
    for (int a = 0; a < dim; ++a) {
        for (int side = 0; side < 2; ++side) {
            BoundaryPiece p;
            p.kind = PieceKind::box_face;
            p.axis = a;
            p.position = side == 0 ? sd.lo[a] : sd.hi[a];
            p.surface = side == 0 ? lo_surface[a] : hi_surface[a];
            if (p.surface >= 0) p.displacement_mask = geometry.surfaces()[p.surface].displacement_mask;
            p.normal = Point::Zero();
            p.normal[a] = side == 0 ? -1.0 : 1.0;
            p.lo = sd.lo;
            p.hi = sd.hi;
            p.lo[a] = p.hi[a] = p.position;
            sd.pieces.push_back(p);
        }
    }
}

void build_disk(Subdomain& sd, const DomainGeometry& geometry, const std::vector<int>& through)
{
    const double R = sd.size;
    std::vector<Point> normals;
    std::vector<int> planes;
    for (int s : through) {
        const Surface& surf = geometry.surfaces()[s];
        if (!surf.curved()) {
            normals.push_back(surf.normal);
            planes.push_back(s);
            continue;
        }
        if (!surf.domain_outside)
            throw UnsupportedClipError("disk subdomain cut by a convex circle '" + surf.name + "'", sd.node);
        if (sd.has_hole) throw UnsupportedClipError("disk subdomain cut by two circles", sd.node);
        if (!(R < 2.0 * surf.radius))
            throw UnsupportedClipError("disk subdomain larger than the hole diameter", sd.node);
        sd.has_hole = true;
        sd.hole_offset = surf.center - sd.center;
        sd.hole_offset[2] = 0.0;
        sd.hole_radius = surf.radius;
        sd.hole_surface = s;
    }
    double t0 = 0.0, t1 = two_pi;
    if (!angular_range(normals, t0, t1))
        throw UnsupportedClipError("disk subdomain reduced to a degenerate wedge", sd.node);
    const double alpha = sd.has_hole ? std::atan2(sd.hole_offset[1], sd.hole_offset[0]) : 0.0;
    if (normals.empty() && sd.has_hole) {
        // start opposite the hole so the excluded part is interior to [t0, t1]
        t0 = alpha + std::numbers::pi;
        t1 = t0 + two_pi;
    }
    sd.theta0 = t0;
    sd.theta1 = t1;

    // breakpoints where the inner radius changes form
    std::vector<double> cuts{t0, t1};
    if (sd.has_hole) {
        const double c = std::acos(R / (2.0 * sd.hole_radius));
        for (double b : {alpha + std::numbers::pi / 2.0, alpha - std::numbers::pi / 2.0, alpha + c, alpha - c}) {
            for (int k = -2; k <= 2; ++k) {
                const double t = b + k * two_pi;
                if (t > t0 + 1e-13 && t < t1 - 1e-13) cuts.push_back(t);
            }
        }
    }
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double a = cuts[i], b = cuts[i + 1];
        if (b - a < 1e-14) continue;
        const double mid = 0.5 * (a + b);
        double od = sd.has_hole ? sd.hole_offset.dot(polar(mid)) : 0.0;
        if (2.0 * od >= R) continue;  // inside the hole
        sd.sectors.push_back({a, b, od > 0.0});
    }
    if (sd.sectors.empty()) throw UnsupportedClipError("disk subdomain lies inside the hole", sd.node);

    // subdomain circle pieces, merged across hole/free splits
    for (const auto& s : sd.sectors) {
        if (!sd.pieces.empty() && std::abs(sd.pieces.back().t1 - s.t0) < 1e-14) {
            sd.pieces.back().t1 = s.t1;
            continue;
        }
        BoundaryPiece p;
        p.kind = PieceKind::arc;
        p.t0 = s.t0;
        p.t1 = s.t1;
        p.radius = R;
        sd.pieces.push_back(p);
    }
    for (const auto& s : sd.sectors) {
        if (!s.hole) continue;
        BoundaryPiece p;
        p.kind = PieceKind::hole_arc;
        p.surface = sd.hole_surface;
        p.displacement_mask = geometry.surfaces()[sd.hole_surface].displacement_mask;
        p.t0 = s.t0;
        p.t1 = s.t1;
        p.radius = sd.hole_radius;
        sd.pieces.push_back(p);
    }
    // straight edges of the wedge
    if (!normals.empty()) {
        for (double edge : {t0, t1}) {
            const Point e = polar(edge);
            int owner = -1;
            for (std::size_t i = 0; i < normals.size(); ++i)
                if (std::abs(normals[i].dot(e)) < 1e-12) owner = planes[i];
            if (owner < 0) throw UnsupportedClipError("wedge edge not on a clipping plane", sd.node);
            const double rho_lo = sd.inner_radius(edge);
            if (rho_lo >= R) continue;
            BoundaryPiece p;
            p.kind = PieceKind::segment;
            p.surface = owner;
            p.displacement_mask = geometry.surfaces()[owner].displacement_mask;
            p.normal = geometry.surfaces()[owner].normal;
            p.t0 = p.t1 = edge;
            p.rho_lo0 = rho_lo;
            p.radius = R;
            sd.pieces.push_back(p);
        }
    }
}

void build_ball(Subdomain& sd, const DomainGeometry& geometry, const std::vector<int>& through)
{
    const double R = sd.size;
    std::vector<Point> normals;
    std::vector<int> planes;
    int z_surface = -1;
    for (int s : through) {
        const Surface& surf = geometry.surfaces()[s];
        int axis = -1;
        if (surf.curved())
            throw UnsupportedClipError("ball subdomain cut by curved surface '" + surf.name + "'", sd.node);
        if (!axis_aligned(surf.normal, 3, axis))
            throw UnsupportedClipError("ball subdomain cut by oblique plane '" + surf.name + "'", sd.node);
        if (axis == 2) {
            if (z_surface >= 0) throw UnsupportedClipError("ball subdomain cut twice along z", sd.node);
            z_surface = s;
            if (surf.normal[2] > 0) {
                sd.cos_lo = -1.0;
                sd.cos_hi = 0.0;
            } else {
                sd.cos_lo = 0.0;
                sd.cos_hi = 1.0;
            }
        } else {
            normals.push_back(surf.normal);
            planes.push_back(s);
        }
    }
    double t0 = 0.0, t1 = two_pi;
    if (!angular_range(normals, t0, t1))
        throw UnsupportedClipError("ball subdomain reduced to a degenerate wedge", sd.node);
    sd.theta0 = t0;
    sd.theta1 = t1;

    BoundaryPiece patch;
    patch.kind = PieceKind::sphere_patch;
    patch.t0 = t0;
    patch.t1 = t1;
    patch.c0 = sd.cos_lo;
    patch.c1 = sd.cos_hi;
    patch.radius = R;
    sd.pieces.push_back(patch);

    if (z_surface >= 0) {
        BoundaryPiece p;
        p.kind = PieceKind::flat_sector;
        p.surface = z_surface;
        p.displacement_mask = geometry.surfaces()[z_surface].displacement_mask;
        p.normal = geometry.surfaces()[z_surface].normal;
        p.u = Point(1, 0, 0);
        p.w = Point(0, 1, 0);
        p.t0 = t0;
        p.t1 = t1;
        p.radius = R;
        sd.pieces.push_back(p);
    }
    if (!normals.empty()) {
        for (double edge : {t0, t1}) {
            const Point e = polar(edge);
            int owner = -1;
            for (std::size_t i = 0; i < normals.size(); ++i)
                if (std::abs(normals[i].dot(e)) < 1e-12) owner = planes[i];
            if (owner < 0) throw UnsupportedClipError("wedge edge not on a clipping plane", sd.node);
            BoundaryPiece p;
            p.kind = PieceKind::flat_sector;
            p.surface = owner;
            p.displacement_mask = geometry.surfaces()[owner].displacement_mask;
            p.normal = geometry.surfaces()[owner].normal;
            // meridian half-disk: angle measured from +z toward e
            p.u = Point(0, 0, 1);
            p.w = e;
            p.t0 = std::acos(sd.cos_hi);
            p.t1 = std::acos(sd.cos_lo);
            p.radius = R;
            sd.pieces.push_back(p);
        }
    }
}

void check_other_surfaces(const Subdomain& sd, const DomainGeometry& geometry, const std::vector<int>& through)
{
    const double tol = geometry.tolerance();
    const auto& surfaces = geometry.surfaces();
    const int dim = sd.dim;
    for (int i = 0; i < static_cast<int>(surfaces.size()); ++i) {
        if (std::find(through.begin(), through.end(), i) != through.end()) continue;
        const Surface& s = surfaces[i];
        bool crosses = false;
        if (sd.shape == SubdomainShape::ball) {
            crosses = s.distance(sd.center) < sd.size - tol;
        } else if (s.kind == SurfaceKind::plane) {
            double reach = s.normal.dot(sd.center) - s.offset;
            for (int a = 0; a < dim; ++a) reach += std::max(s.normal[a] * sd.lo[a], s.normal[a] * sd.hi[a]);
            crosses = reach > tol;
        } else {
            Point near = Point::Zero(), far = Point::Zero();
            for (int a = 0; a < dim; ++a) {
                const double c = s.center[a] - sd.center[a];
                near[a] = std::clamp(c, sd.lo[a], sd.hi[a]);
                far[a] = std::abs(sd.lo[a] - c) > std::abs(sd.hi[a] - c) ? sd.lo[a] : sd.hi[a];
            }
            const Point c = s.center - sd.center;
            if (s.domain_outside) crosses = (near - c).head(dim).norm() < s.radius - tol;
            else crosses = (far - c).head(dim).norm() > s.radius + tol;
        }
        if (crosses)
            throw UnsupportedClipError("subdomain reaches surface '" + s.name + "' that does not pass through its center",
                                       sd.node);
    }
}

}  // namespace

double Subdomain::inner_radius(double theta) const
{
    if (!has_hole) return 0.0;
    return std::max(0.0, 2.0 * hole_offset.dot(polar(theta)));
}

bool Subdomain::clipped() const
{
    return touches_boundary();
}

bool Subdomain::touches_boundary() const
{
    return std::any_of(pieces.begin(), pieces.end(), [](const BoundaryPiece& p) { return p.on_boundary(); });
}

double Subdomain::measure() const
{
    if (shape == SubdomainShape::box) {
        double m = 1.0;
        for (int a = 0; a < dim; ++a) m *= hi[a] - lo[a];
        return m;
    }
    const double R = size;
    if (dim == 3) return R * R * R / 3.0 * (theta1 - theta0) * (cos_hi - cos_lo);
    double m = 0.0;
    const double alpha = has_hole ? std::atan2(hole_offset[1], hole_offset[0]) : 0.0;
    const double a2 = hole_radius * hole_radius;
    for (const auto& s : sectors) {
        m += 0.5 * R * R * (s.t1 - s.t0);
        if (s.hole) {
            // subtract int 2 a^2 cos^2(t - alpha) dt
            auto F = [&](double t) { return a2 * ((t - alpha) + 0.5 * std::sin(2.0 * (t - alpha))); };
            m -= F(s.t1) - F(s.t0);
        }
    }
    return m;
}

bool Subdomain::contains_local(const Point& y, double tol) const
{
    const double scale = tol * size;
    if (shape == SubdomainShape::box) {
        for (int a = 0; a < dim; ++a)
            if (y[a] < lo[a] - scale || y[a] > hi[a] + scale) return false;
        return true;
    }
    const double r = y.head(dim).norm();
    if (r > size + scale) return false;
    if (r <= scale) return true;
    auto in_range = [&](double t) {
        while (t < theta0 - 1e-12) t += two_pi;
        while (t > theta1 + 1e-12) t -= two_pi;
        return t >= theta0 - 1e-12 && t <= theta1 + 1e-12;
    };
    if (!in_range(std::atan2(y[1], y[0])) && (dim == 2 || std::hypot(y[0], y[1]) > scale)) return false;
    if (dim == 3) {
        const double c = y[2] / r;
        if (c < cos_lo - 1e-12 || c > cos_hi + 1e-12) return false;
    }
    if (has_hole && (y - hole_offset).head(2).norm() < hole_radius - scale) return false;
    return true;
}

std::string Subdomain::signature() const
{
    std::ostringstream s;
    s << (shape == SubdomainShape::box ? "box" : "ball") << dim << ' ' << hex(size);
    if (shape == SubdomainShape::box) {
        for (int a = 0; a < dim; ++a) s << ' ' << hex(lo[a]) << ' ' << hex(hi[a]);
    } else {
        s << ' ' << hex(theta0) << ' ' << hex(theta1) << ' ' << hex(cos_lo) << ' ' << hex(cos_hi);
        if (has_hole) s << " hole " << hex(hole_offset[0]) << ' ' << hex(hole_offset[1]) << ' ' << hex(hole_radius);
    }
    s << " |";
    for (const auto& p : pieces) s << ' ' << static_cast<int>(p.kind) << ':' << (p.on_boundary() ? int(p.displacement_mask) : -1);
    return s.str();
}

Subdomain build_subdomain(Index k, const Point& center, SubdomainShape shape, double size,
                          const DomainGeometry& geometry)
{
    if (!(size > 0)) throw Error("subdomain: size must be positive");
    if (!geometry.contains(center)) throw UnsupportedClipError("subdomain center outside the domain", k);
    Subdomain sd;
    sd.node = k;
    sd.dim = geometry.dim();
    sd.center = center;
    sd.shape = shape;
    sd.size = size;
    const auto through = geometry.surfaces_through(center);
    if (shape == SubdomainShape::box) {
        build_box(sd, geometry, through);
    } else if (sd.dim == 2) {
        build_disk(sd, geometry, through);
    } else {
        build_ball(sd, geometry, through);
    }
    check_other_surfaces(sd, geometry, through);
    return sd;
}

Subdomain make_subdomain(Index k, const NodeSet& nodes, const DomainGeometry& geometry, const SubdomainPolicy& policy)
{
    const Point& x = nodes.points[k];
    const auto through = geometry.surfaces_through(x);
    const bool curved = std::any_of(through.begin(), through.end(),
                                    [&](int s) { return geometry.surfaces()[s].curved(); });
    const SubdomainShape shape = curved ? SubdomainShape::ball : policy.shape;
    const double h = nodes.spacing[k];
    double size = shape == SubdomainShape::box ? policy.box_factor * h
                                               : (curved ? policy.curved_factor : policy.ball_factor) * h;
    const int dim = geometry.dim();
    for (int i = 0; i < static_cast<int>(geometry.surfaces().size()); ++i) {
        if (std::find(through.begin(), through.end(), i) != through.end()) continue;
        const Surface& s = geometry.surfaces()[i];
        const double d = s.distance(x);
        double limit = d;
        if (shape == SubdomainShape::box) {
            if (s.kind == SurfaceKind::plane) limit = 2.0 * d / s.normal.head(dim).lpNorm<1>();
            else limit = 2.0 * d / std::sqrt(double(dim));
        }
        size = std::min(size, limit * (1.0 - 1e-9));
    }
    return build_subdomain(k, x, shape, size, geometry);
}

}  // namespace dmlpg
