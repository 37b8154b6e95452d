#pragma once

#include <vector>

#include "symknot/planar_diagram.hpp"
#include "symknot/scheme.hpp"

namespace symknot {

// Open half-diagram produced by cutting one edge of a rational knot
// diagram; the two ports close it back up to the knot.
struct RationalArc {
  std::vector<Crossing> crossings;
  std::vector<HalfArc> arcs;
  EdgeId port_a = 0, port_b = 0;
};

// Closed diagram of the rational knot with fraction a1 + 1/(a2 + 1/(...)).
// Raises NotAKnot when the closure has two components.
PlanarDiagram rational_knot(const std::vector<int>& conway);

RationalArc rational_arc(const std::vector<int>& conway);

// Scheme whose partial knot is the rational knot, with one twist region per
// entry of `twists` (values become the assignment, slots numbered 1.. in
// axis order). `variant` rotates the deterministic choice of cut points.
SymmetricUnionScheme rational_scheme(const std::vector<int>& conway,
                                     const std::vector<int>& twists, int variant = 0);

// Template form: same construction with all twist slots left open.
SymmetricUnionScheme rational_template(const std::vector<int>& conway, int twist_slots,
                                       int variant = 0);

// Trivial partial knot: a bare strand with twist regions strung along the
// axis. Covers arbitrarily many slots.
SymmetricUnionScheme unknot_scheme(const std::vector<int>& twists);
SymmetricUnionScheme unknot_template(int twist_slots);

}  // namespace symknot
