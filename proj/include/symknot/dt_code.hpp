#pragma once

#include <string>
#include <vector>

#include "symknot/planar_diagram.hpp"

namespace symknot {

// Dowker-Thistlethwaite code: entry i is the signed even partner of odd
// label 2i-1. Sign convention: positive iff the strand passes over at the
// even moment (alternating diagrams traversed from an underpass come out
// all positive).
struct DtCode {
  std::vector<int> labels;

  std::size_t size() const { return labels.size(); }
  bool operator==(const DtCode& o) const { return labels == o.labels; }
};

DtCode parse_dt_text(const std::string& text);
std::string print_dt(const DtCode& code);

// Realizes the code as a planar diagram (canonically relabeled), resolving
// the embedding with the Dowker-Thistlethwaite sign algorithm.
PlanarDiagram parse_dt(const DtCode& code);

// Code of a single-component diagram read from the canonical traversal.
DtCode to_dt(const PlanarDiagram& d);

// The embedding-sign computation on the pairing involution, exposed for the
// realizability check itself: fills f with ±1 per label and returns true,
// or returns false when no planar embedding exists. `partner` is 1-based
// with partner[partner[i]] == i.
bool dt_embedding_signs(const std::vector<int>& partner, std::vector<int>& f);

}  // namespace symknot
