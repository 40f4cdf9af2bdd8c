#pragma once

#include "dmlpg/geometry/domain.hpp"
#include "dmlpg/geometry/node_set.hpp"

#include <array>

namespace dmlpg {

/// Support radius delta = factor * m * h_local.
struct SupportPolicy {
    int m = 2;
    double factor = 2.0;
};

/// Uniform nx-by-ny grid on [0,L]x[0,D] tagged against DomainGeometry::beam.
NodeSet generate_beam_nodes(int nx, int ny, double length, double depth, SupportPolicy support = {});

/// Uniform grid on an axis-aligned box, tagged against `geometry`.
NodeSet generate_box_nodes(const DomainGeometry& geometry, const std::array<int, 3>& counts, const Point& lo,
                           const Point& hi, SupportPolicy support = {});

struct PlateSupportPolicy {
    int m = 2;
    double factor_near = 2.0;
    double factor_far = 2.5;
    double near_radius = 2.0;  // nodes with |x| <= near_radius * a use factor_near
};

/// Polar-graded nodes on the plate quadrant: rays uniform in angle, radial
/// positions growing geometrically by `grading` from the hole to the outer edges.
NodeSet generate_plate_nodes(double a, double b, int nr, int ntheta, double grading, PlateSupportPolicy support = {});

/// Parameters of the layered shell generator.
struct ShellLayout {
    int layers = 0;
    int n_inner = 0;  // angular subdivisions on the innermost layer
    int n_outer = 0;  // angular subdivisions on the outermost layer
    Index count = 0;

    int subdivisions(int layer) const;
    static Index layer_count(int n) { return static_cast<Index>(n + 1) * (n + 2) / 2; }
};

/// Chooses a layout whose node count is within 2% of `target` when possible.
ShellLayout choose_shell_layout(double b, double r_inner, Index target);

/// Concentric octant layers with geometric radii from r_inner to b. Layers
/// never gain angular subdivisions outward; the default layout keeps the count
/// fixed so cells stay near-isotropic.
NodeSet generate_boussinesq_nodes(double b, double r_inner, Index target, SupportPolicy support = {2, 1.3});
NodeSet generate_shell_nodes(double b, double r_inner, const ShellLayout& layout, SupportPolicy support = {2, 1.3});

}  // namespace dmlpg
