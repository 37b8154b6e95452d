#pragma once

#include "symknot/budget.hpp"
#include "symknot/laurent.hpp"
#include "symknot/planar_diagram.hpp"

namespace symknot {

inline constexpr int kDefaultCrossingCap = 24;

// Kauffman bracket state sum in the variable A, computed by tangle
// contraction with memoization on boundary connectivity states. Exact; the
// unknot gives 1 and a distant circle multiplies by -A^2 - A^-2.
LaurentPoly kauffman_bracket(const PlanarDiagram& d, int crossing_cap = kDefaultCrossingCap,
                             Budget* budget = nullptr);

// (-A^3)^(-writhe) * bracket, re-expressed in x with x^2 = t.
LaurentPoly jones(const PlanarDiagram& d, int crossing_cap = kDefaultCrossingCap,
                  Budget* budget = nullptr);

// Jones value with V(x) and V(1/x) folded together: the lexicographically
// smaller of the two, making the result insensitive to mirroring.
LaurentPoly jones_canonical(const LaurentPoly& jones_in_x);

}  // namespace symknot
