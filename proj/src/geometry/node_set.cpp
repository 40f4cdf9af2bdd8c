#include "dmlpg/geometry/node_set.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace dmlpg {

int tag_code(const BoundaryTag& tag)
{
    switch (tag.kind) {
    case TagKind::interior: return 0;
    case TagKind::dirichlet: return 1;
    case TagKind::neumann: return 2;
    case TagKind::mixed: return 4 + static_cast<int>(tag.mask);
    }
    return 0;
}

BoundaryTag tag_from_code(int code, int dim)
{
    const unsigned full = (1u << dim) - 1;
    if (code == 0) return BoundaryTag::interior();
    if (code == 1) return BoundaryTag::dirichlet(dim);
    if (code == 2) return BoundaryTag::neumann();
    if (code >= 5 && static_cast<unsigned>(code - 4) < full) return BoundaryTag::mixed(static_cast<unsigned>(code - 4));
    throw Error("invalid node tag code " + std::to_string(code));
}

double NodeSet::max_support() const
{
    return support_radius.empty() ? 0.0 : *std::max_element(support_radius.begin(), support_radius.end());
}

Index NodeSet::dirichlet_count() const
{
    Index n = 0;
    while (n < size() && tags[n].kind == TagKind::dirichlet) ++n;
    return n;
}

void NodeSet::push_back(const Point& p, BoundaryTag tag, double delta, double local_spacing)
{
    points.push_back(p);
    tags.push_back(tag);
    support_radius.push_back(delta);
    spacing.push_back(local_spacing);
}

std::vector<Index> reorder_dirichlet_first(NodeSet& nodes)
{
    std::vector<Index> order(nodes.size());
    for (Index i = 0; i < nodes.size(); ++i) order[i] = i;
    std::stable_partition(order.begin(), order.end(),
                          [&](Index i) { return nodes.tags[i].kind == TagKind::dirichlet; });

    NodeSet sorted;
    sorted.dim = nodes.dim;
    sorted.mesh_size = nodes.mesh_size;
    for (Index i : order) sorted.push_back(nodes.points[i], nodes.tags[i], nodes.support_radius[i], nodes.spacing[i]);
    nodes = std::move(sorted);
    return order;
}

namespace {

std::string format_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_double(const std::string& token, int line)
{
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw Error("node table line " + std::to_string(line) + ": bad number '" + token + "'");
    return v;
}

}  // namespace

void write_node_table(std::ostream& out, const NodeSet& nodes)
{
    out << "# dmlpg node table\n";
    out << "# dim " << nodes.dim << " count " << nodes.size() << " mesh_size " << format_double(nodes.mesh_size) << "\n";
    out << (nodes.dim == 2 ? "# x y tag delta spacing\n" : "# x y z tag delta spacing\n");
    for (Index i = 0; i < nodes.size(); ++i) {
        for (int c = 0; c < nodes.dim; ++c) out << format_double(nodes.points[i][c]) << ' ';
        out << tag_code(nodes.tags[i]) << ' ' << format_double(nodes.support_radius[i]) << ' '
            << format_double(nodes.spacing[i]) << '\n';
    }
}

NodeSet read_node_table(std::istream& in)
{
    NodeSet nodes;
    std::string line;
    int lineno = 0;
    bool have_header = false;
    Index expected = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream tokens(line);
        std::vector<std::string> fields;
        for (std::string t; tokens >> t;) fields.push_back(t);
        if (fields.empty()) continue;
        if (fields[0] == "#") {
            if (fields.size() >= 7 && fields[1] == "dim") {
                nodes.dim = std::stoi(fields[2]);
                expected = std::stoll(fields[4]);
                nodes.mesh_size = parse_double(fields[6], lineno);
                have_header = true;
            }
            continue;
        }
        if (!have_header) throw Error("node table: missing '# dim' header before line " + std::to_string(lineno));
        const std::size_t want = static_cast<std::size_t>(nodes.dim) + 3;
        if (fields.size() != want)
            throw Error("node table line " + std::to_string(lineno) + ": expected " + std::to_string(want) + " columns");
        Point p = Point::Zero();
        for (int c = 0; c < nodes.dim; ++c) p[c] = parse_double(fields[c], lineno);
        const int code = std::stoi(fields[nodes.dim]);
        nodes.push_back(p, tag_from_code(code, nodes.dim), parse_double(fields[nodes.dim + 1], lineno),
                        parse_double(fields[nodes.dim + 2], lineno));
    }
    if (expected >= 0 && expected != nodes.size())
        throw Error("node table: header announces " + std::to_string(expected) + " nodes, found " +
                    std::to_string(nodes.size()));
    return nodes;
}

}  // namespace dmlpg
