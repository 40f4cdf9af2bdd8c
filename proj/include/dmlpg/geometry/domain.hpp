#pragma once

#include "dmlpg/common.hpp"
#include "dmlpg/geometry/node_set.hpp"

#include <string>
#include <vector>

namespace dmlpg {

enum class SurfaceKind { plane, sphere };

/// One analytic piece of the global boundary. Planes are lines in 2D and
/// spheres are circles in 2D.
struct Surface {
    SurfaceKind kind = SurfaceKind::plane;
    std::string name;

    // plane: the domain lies in {normal . x <= offset}, normal is the outward unit normal
    Point normal = Point::Zero();
    double offset = 0.0;

    // sphere: domain_outside marks a hole (domain is |x - center| >= radius)
    Point center = Point::Zero();
    double radius = 0.0;
    bool domain_outside = false;

    /// Displacement components prescribed on this surface; the rest carry prescribed tractions.
    unsigned displacement_mask = 0;

    bool curved() const { return kind == SurfaceKind::sphere; }
    double distance(const Point& x) const;
    Point outward_normal(const Point& x) const;
};

enum class DomainKind { box, plate_quadrant, sphere_octant };

/// Global domain with a boundary split into analytic surfaces, each carrying
/// its boundary-condition type per displacement component.
class DomainGeometry {
public:
    /// Axis-aligned box. `face_masks` lists the prescribed-displacement mask of the
    /// faces in order (x-lo, x-hi, y-lo, y-hi[, z-lo, z-hi]).
    static DomainGeometry box(int dim, const Point& lo, const Point& hi, const std::vector<unsigned>& face_masks);

    /// Cantilever [0,L]x[0,D]: displacements on the left edge, tractions elsewhere.
    static DomainGeometry beam(double length, double depth);

    /// Quarter of a plate [0,b]^2 with a hole of radius a at the origin:
    /// symmetry on the axes, tractions on the outer edges and the hole.
    static DomainGeometry plate_quadrant(double a, double b);

    /// First octant of the shell r_inner <= |x| <= b, loaded surface z = 0.
    static DomainGeometry sphere_octant(double b, double r_inner);

    int dim() const { return dim_; }
    DomainKind kind() const { return kind_; }
    const std::vector<Surface>& surfaces() const { return surfaces_; }
    double length_scale() const { return length_scale_; }
    double tolerance() const { return 1e-10 * length_scale_; }

    bool contains(const Point& x) const;
    std::vector<int> surfaces_through(const Point& x) const;
    BoundaryTag classify(const Point& x) const;

    /// Distance from x to the nearest surface not listed in `through`.
    double distance_to_other_surfaces(const Point& x, const std::vector<int>& through) const;

    double measure() const;

private:
    int dim_ = 2;
    DomainKind kind_ = DomainKind::box;
    std::vector<Surface> surfaces_;
    double length_scale_ = 1.0;
    double measure_ = 0.0;
};

}  // namespace dmlpg
