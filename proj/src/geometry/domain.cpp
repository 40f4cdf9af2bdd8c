#include "dmlpg/geometry/domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace dmlpg {

double Surface::distance(const Point& x) const
{
    if (kind == SurfaceKind::plane) return std::abs(normal.dot(x) - offset);
    return std::abs((x - center).norm() - radius);
}

Point Surface::outward_normal(const Point& x) const
{
    if (kind == SurfaceKind::plane) return normal;
    const Point radial = (x - center).normalized();
    return domain_outside ? Point(-radial) : radial;
}

namespace {

Surface plane(std::string name, const Point& normal, double offset, unsigned mask)
{
    Surface s;
    s.kind = SurfaceKind::plane;
    s.name = std::move(name);
    s.normal = normal;
    s.offset = offset;
    s.displacement_mask = mask;
    return s;
}

Surface sphere(std::string name, const Point& center, double radius, bool outside, unsigned mask)
{
    Surface s;
    s.kind = SurfaceKind::sphere;
    s.name = std::move(name);
    s.center = center;
    s.radius = radius;
    s.domain_outside = outside;
    s.displacement_mask = mask;
    return s;
}

}  // namespace

DomainGeometry DomainGeometry::box(int dim, const Point& lo, const Point& hi, const std::vector<unsigned>& face_masks)
{
    if (dim != 2 && dim != 3) throw Error("box domain: dim must be 2 or 3");
    if (static_cast<int>(face_masks.size()) != 2 * dim) throw Error("box domain: need one mask per face");
    DomainGeometry g;
    g.dim_ = dim;
    g.kind_ = DomainKind::box;
    static const char* axis_names = "xyz";
    g.measure_ = 1.0;
    double diag = 0.0;
    for (int a = 0; a < dim; ++a) {
        if (!(hi[a] > lo[a])) throw Error("box domain: empty extent");
        Point n = Point::Zero();
        n[a] = -1.0;
        g.surfaces_.push_back(plane(std::string(1, axis_names[a]) + "-lo", n, -lo[a], face_masks[2 * a]));
        n[a] = 1.0;
        g.surfaces_.push_back(plane(std::string(1, axis_names[a]) + "-hi", n, hi[a], face_masks[2 * a + 1]));
        g.measure_ *= hi[a] - lo[a];
        diag += (hi[a] - lo[a]) * (hi[a] - lo[a]);
    }
    g.length_scale_ = std::sqrt(diag);
    return g;
}

DomainGeometry DomainGeometry::beam(double length, double depth)
{
    return box(2, Point(0, 0, 0), Point(length, depth, 0), {0b11u, 0u, 0u, 0u});
}

DomainGeometry DomainGeometry::plate_quadrant(double a, double b)
{
    if (!(a > 0) || !(a < b)) throw Error("plate quadrant: need 0 < a < b");
    DomainGeometry g;
    g.dim_ = 2;
    g.kind_ = DomainKind::plate_quadrant;
    g.surfaces_.push_back(plane("left", Point(-1, 0, 0), 0.0, 0b01u));
    g.surfaces_.push_back(plane("bottom", Point(0, -1, 0), 0.0, 0b10u));
    g.surfaces_.push_back(plane("right", Point(1, 0, 0), b, 0u));
    g.surfaces_.push_back(plane("top", Point(0, 1, 0), b, 0u));
    g.surfaces_.push_back(sphere("hole", Point::Zero(), a, true, 0u));
    g.length_scale_ = b * std::sqrt(2.0);
    g.measure_ = b * b - std::numbers::pi * a * a / 4.0;
    return g;
}

DomainGeometry DomainGeometry::sphere_octant(double b, double r_inner)
{
    if (!(r_inner > 0) || !(r_inner < b)) throw Error("sphere octant: need 0 < r_inner < b");
    DomainGeometry g;
    g.dim_ = 3;
    g.kind_ = DomainKind::sphere_octant;
    g.surfaces_.push_back(plane("yz-plane", Point(-1, 0, 0), 0.0, 0b001u));
    g.surfaces_.push_back(plane("xz-plane", Point(0, -1, 0), 0.0, 0b010u));
    g.surfaces_.push_back(plane("loaded-surface", Point(0, 0, -1), 0.0, 0u));
    g.surfaces_.push_back(sphere("outer-sphere", Point::Zero(), b, false, 0b111u));
    g.surfaces_.push_back(sphere("inner-sphere", Point::Zero(), r_inner, true, 0b111u));
    g.length_scale_ = b;
    g.measure_ = std::numbers::pi / 6.0 * (b * b * b - r_inner * r_inner * r_inner);
    return g;
}

bool DomainGeometry::contains(const Point& x) const
{
    const double tol = tolerance();
    for (const auto& s : surfaces_) {
        if (s.kind == SurfaceKind::plane) {
            if (s.normal.dot(x) > s.offset + tol) return false;
        } else {
            const double r = (x - s.center).norm();
            if (s.domain_outside ? r < s.radius - tol : r > s.radius + tol) return false;
        }
    }
    return true;
}

std::vector<int> DomainGeometry::surfaces_through(const Point& x) const
{
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(surfaces_.size()); ++i)
        if (surfaces_[i].distance(x) <= tolerance()) out.push_back(i);
    return out;
}

BoundaryTag DomainGeometry::classify(const Point& x) const
{
    const auto through = surfaces_through(x);
    if (through.empty()) return BoundaryTag::interior();
    unsigned mask = 0;
    for (int s : through) mask |= surfaces_[s].displacement_mask;
    const unsigned full = (1u << dim_) - 1;
    if (mask == full) return BoundaryTag::dirichlet(dim_);
    if (mask == 0) return BoundaryTag::neumann();
    return BoundaryTag::mixed(mask);
}

double DomainGeometry::distance_to_other_surfaces(const Point& x, const std::vector<int>& through) const
{
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < static_cast<int>(surfaces_.size()); ++i) {
        if (std::find(through.begin(), through.end(), i) != through.end()) continue;
        best = std::min(best, surfaces_[i].distance(x));
    }
    return best;
}

double DomainGeometry::measure() const { return measure_; }

}  // namespace dmlpg
