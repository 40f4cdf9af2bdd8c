#pragma once

#include "dmlpg/common.hpp"
#include "dmlpg/elasticity/material.hpp"
#include "dmlpg/geometry/neighbor_search.hpp"
#include "dmlpg/mls/gmls.hpp"

namespace dmlpg {

/// Displacement, strain and stress at arbitrary points from nodal values,
/// via one GMLS value-and-gradient solve per point.
class FieldRecovery {
public:
    FieldRecovery(const NodeSet& nodes, const MaterialModel& material, const Vector& u, GmlsSettings settings = {});

    struct Sample {
        Vector displacement;  // d
        Vector strain;        // Voigt, engineering shear
        Vector stress;        // Voigt
        double von_mises = 0.0;
    };

    Sample at(const Point& x) const;
    Vector displacement(const Point& x) const { return at(x).displacement; }
    Vector strain(const Point& x) const { return at(x).strain; }
    Vector stress(const Point& x) const { return at(x).stress; }

    const NeighborSearch& search() const { return search_; }

private:
    const NodeSet* nodes_;
    NeighborSearch search_;
    Matrix D_;
    Vector u_;
    GmlsSettings settings_;
};

}  // namespace dmlpg
