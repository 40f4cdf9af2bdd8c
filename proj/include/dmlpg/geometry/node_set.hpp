#pragma once

#include "dmlpg/common.hpp"

#include <iosfwd>
#include <vector>

namespace dmlpg {

enum class TagKind { interior, dirichlet, neumann, mixed };

/// Boundary classification of a node. For mixed nodes `mask` holds the
/// displacement components (bit i = component i) that are prescribed.
struct BoundaryTag {
    TagKind kind = TagKind::interior;
    unsigned mask = 0;

    static BoundaryTag interior() { return {}; }
    static BoundaryTag dirichlet(int dim) { return {TagKind::dirichlet, (1u << dim) - 1}; }
    static BoundaryTag neumann() { return {TagKind::neumann, 0}; }
    static BoundaryTag mixed(unsigned prescribed) { return {TagKind::mixed, prescribed}; }

    bool prescribes(int component) const { return (mask >> component) & 1u; }
    bool on_boundary() const { return kind != TagKind::interior; }

    friend bool operator==(const BoundaryTag&, const BoundaryTag&) = default;
};

/// Integer code used in node tables: 0 interior, 1 dirichlet, 2 neumann,
/// 4 + mask for mixed nodes.
int tag_code(const BoundaryTag& tag);
BoundaryTag tag_from_code(int code, int dim);

struct NodeSet {
    int dim = 2;
    std::vector<Point> points;
    std::vector<BoundaryTag> tags;
    std::vector<double> support_radius;  // delta per node
    std::vector<double> spacing;         // local node spacing per node
    double mesh_size = 0.0;              // h

    Index size() const { return static_cast<Index>(points.size()); }
    double max_support() const;

    /// Number of leading Dirichlet nodes.
    Index dirichlet_count() const;

    void push_back(const Point& p, BoundaryTag tag, double delta, double local_spacing);
};

/// Stable reorder putting Dirichlet nodes first. Returns old index per new slot.
std::vector<Index> reorder_dirichlet_first(NodeSet& nodes);

/// Plain-text node table, one row per node: coordinates, tag code, delta, spacing.
/// Values are written with 17 significant digits so a round trip is exact.
void write_node_table(std::ostream& out, const NodeSet& nodes);
NodeSet read_node_table(std::istream& in);

}  // namespace dmlpg
