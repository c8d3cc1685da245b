#pragma once

#include <string>
#include <vector>

#include "holoskew/group.hpp"

namespace holoskew {

/// Spec strings of the catalog groups of a given order (empty if none).
const std::vector<std::string>& catalog_specs(std::size_t order);

/// True when the catalog lists every group of that order up to isomorphism.
bool catalog_complete(std::size_t order);

/// Isomorphism type as a spec string: "c4", "ab2x2", "d3", ... Abelian
/// groups are named from their invariants; non-abelian groups by catalog
/// match, or "order<n>?" when the catalog has no match.
std::string identify_group(const Group& g);

}  // namespace holoskew
