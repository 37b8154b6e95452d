#pragma once

#include <map>
#include <string>
#include <vector>

#include "symknot/scheme.hpp"

namespace symknot {

enum class PassLayer { Over, Under };

struct KnotoidPass {
  int crossing = 0;
  PassLayer layer = PassLayer::Over;
  int sign = 0;  // crossing sign with both strands oriented along the arc

  bool operator==(const KnotoidPass& o) const {
    return crossing == o.crossing && layer == o.layer && sign == o.sign;
  }
};

// Decorated open-arc code for a symmetric ribbon disk: the leg-to-head pass
// sequence plus signed twist decorations on the gaps between passes (gap 0
// precedes the first pass, gap n follows the last).
struct KnotoidDiagram {
  std::vector<KnotoidPass> passes;
  std::map<int, int> decorations;

  bool operator==(const KnotoidDiagram& o) const {
    return passes == o.passes && decorations == o.decorations;
  }
};

enum class FoldSide { Down, Up };

void validate_knotoid(const KnotoidDiagram& k);

// True iff the signed code admits a planar embedding (the signed code fixes
// the rotation system; planarity is the Euler face count).
bool is_realizable(const KnotoidDiagram& k);

// The decorated arc of D-minus (side Down) or of the rotated D-plus (side
// Up). Crossing ids are renumbered in first-visit order from the leg, which
// is the first transversal port in axis order.
KnotoidDiagram scheme_to_knotoid(const SymmetricUnionScheme& s, FoldSide side);

// Rebuilds a scheme whose fold-down knotoid is k (up to relabeling).
SymmetricUnionScheme knotoid_to_scheme(const KnotoidDiagram& k);

// Sums decorations across gaps separated only by under-passes; the merged
// value lands on the first decorated gap of each maximal underpassing run.
KnotoidDiagram merge_underpass_decorations(const KnotoidDiagram& k);

std::string knotoid_to_text(const KnotoidDiagram& k);
KnotoidDiagram knotoid_from_text(const std::string& text);

}  // namespace symknot
