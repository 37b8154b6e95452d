#pragma once

#include <optional>

#include "symknot/budget.hpp"
#include "symknot/laurent.hpp"
#include "symknot/planar_diagram.hpp"

namespace symknot {

// Alexander polynomial from the Wirtinger presentation via Fox derivatives
// and a fraction-free minor determinant. Normalized so the exponents are
// symmetric about 0 and the value at 1 is +1.
LaurentPoly alexander(const OrientedDiagram& d, Budget* budget = nullptr);
LaurentPoly alexander(const PlanarDiagram& d, Budget* budget = nullptr);

// Searches for an integer Laurent factor f with p = f(t) * f(1/t) up to
// units. Degree bound deg(p)/2; coefficient bound 1 + sum |coeffs(p)|.
// Exceeding the work budget raises ResourceLimit instead of answering.
std::optional<LaurentPoly> fox_milnor(const LaurentPoly& p, Budget* budget = nullptr);

// Fraction-free determinant of a square Laurent polynomial matrix.
LaurentPoly bareiss_determinant_poly(std::vector<std::vector<LaurentPoly>> m, Var var,
                                     Budget* budget = nullptr);

}  // namespace symknot
