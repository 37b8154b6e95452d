#include "symknot/fingerprint.hpp"

#include "symknot/alexander.hpp"
#include "symknot/errors.hpp"
#include "symknot/goeritz.hpp"

namespace symknot {

InvariantFingerprint fingerprint(const PlanarDiagram& d, bool with_alexander, int crossing_cap,
                                 Budget* budget) {
  if (component_count(d) != 1)
    raise(ErrorKind::MultiComponent, "fingerprints are defined for knots");
  InvariantFingerprint fp;
  fp.determinant = determinant_checked(d);
  fp.jones_canon = jones_canonical(jones(d, crossing_cap, budget));
  fp.signature_abs = std::abs(signature(d));
  if (with_alexander) fp.alexander = alexander(d, budget);

  // Cheap cross-check: the determinant must match |V(-1)|.
  Int v_at_minus1 = fp.jones_canon.as_t().evaluate(-1);
  if (v_at_minus1 < 0) v_at_minus1 = -v_at_minus1;
  if (v_at_minus1 != fp.determinant)
    raise(ErrorKind::DegenerateDiagram, "determinant disagrees with |V(-1)|");
  return fp;
}

bool candidate_filter(const OrientedDiagram& d, Budget* budget) {
  if (component_count(d.base) != 1)
    raise(ErrorKind::MultiComponent, "candidate filter is defined for knots");
  if (signature(d.base) != 0) return false;
  return fox_milnor(alexander(d, budget), budget).has_value();
}

}  // namespace symknot
