#pragma once

#include <set>
#include <vector>

#include "symknot/dt_code.hpp"
#include "symknot/laurent.hpp"
#include "symknot/planar_diagram.hpp"
#include "symknot/scheme.hpp"

namespace symknot::oracle {

// Independent 2^n state-sum bracket: enumerates every smoothing and counts
// circles with union-find. The acceptance oracle for small diagrams.
LaurentPoly naive_bracket(const PlanarDiagram& d);

// Continued-fraction numerator of a1 + 1/(a2 + 1/(...)).
Int continuant(const std::vector<int>& conway);

// All DT codes of the same labeled diagram under cyclic relabeling and
// direction reversal.
std::set<std::vector<int>> dt_variants(const DtCode& code);

// Exhaustive-embedding realizability: tries every per-crossing rotation
// choice and tests the Euler face count.
bool dt_realizable_bruteforce(const DtCode& code);

// Shared corpus pieces.
PlanarDiagram left_trefoil();
PlanarDiagram unknot_loop();

// Deterministic scheme corpus: rational partials with twist regions,
// filtered to single-component expansions.
std::vector<SymmetricUnionScheme> scheme_corpus(std::size_t want);

}  // namespace symknot::oracle
