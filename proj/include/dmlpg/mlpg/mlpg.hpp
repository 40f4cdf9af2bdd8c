#pragma once

#include "dmlpg/assembly/system.hpp"

namespace dmlpg {

/// Weak-row provider of the classical variants: quadrature of the local weak
/// form against MLS shape functions with nodal supports, one MLS evaluation
/// per quadrature point.
WeakRowProvider mlpg_provider();

GlobalSystem assemble_mlpg(const NodeSet& nodes, const DomainGeometry& geometry, const MaterialModel& material,
                           const BoundaryData& data, const AssemblyOptions& options);

}  // namespace dmlpg
