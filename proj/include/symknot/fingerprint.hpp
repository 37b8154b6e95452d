#pragma once

#include <optional>

#include "symknot/bracket.hpp"
#include "symknot/laurent.hpp"
#include "symknot/planar_diagram.hpp"

namespace symknot {

// Mirror-insensitive invariant bundle used for identification.
struct InvariantFingerprint {
  int determinant = 0;
  LaurentPoly jones_canon{Var::x};  // lex-min of V(x), V(1/x)
  int signature_abs = 0;
  std::optional<LaurentPoly> alexander;  // symmetric representative in t

  bool operator==(const InvariantFingerprint& o) const {
    return determinant == o.determinant && signature_abs == o.signature_abs &&
           jones_canon == o.jones_canon;
  }
  bool operator!=(const InvariantFingerprint& o) const { return !(*this == o); }
};

InvariantFingerprint fingerprint(const PlanarDiagram& d, bool with_alexander = false,
                                 int crossing_cap = kDefaultCrossingCap, Budget* budget = nullptr);

// True iff signature vanishes and the Alexander polynomial admits a
// Fox-Milnor factorization.
bool candidate_filter(const OrientedDiagram& d, Budget* budget = nullptr);

}  // namespace symknot
