#pragma once

#include <map>
#include <string>
#include <vector>

#include "symknot/planar_diagram.hpp"

namespace symknot {

// The single global sign rule for axis twists: t > 0 inserts t half-twists
// in which the strand entering from the upper-left passes over the strand
// entering from the upper-right; t < 0 is the opposite handedness; t = 0
// means two straight vertical joins.
struct TwistConvention {
  static constexpr const char* description =
      "t>0: upper-left strand passes over; t<0: upper-right passes over";
};

// A crossingless strand of the half-diagram whose two ends are the named
// open edges.
struct HalfArc {
  EdgeId a = 0, b = 0;
  bool operator==(const HalfArc& o) const { return a == o.a && b == o.b; }
};

struct AxisItem {
  enum class Kind { Transversal, Twist };
  Kind kind = Kind::Transversal;
  EdgeId port = 0;             // Transversal
  int slot = 0;                // Twist
  EdgeId upper = 0, lower = 0; // Twist
};

// Half-diagram plus ordered axis items: the paper's D-minus and central
// part. Template form carries open (unassigned) slots.
struct SymmetricUnionScheme {
  std::vector<Crossing> half_crossings;
  std::vector<HalfArc> half_arcs;
  std::vector<AxisItem> axis;       // ordered top to bottom
  std::map<int, int> assignment;    // slot -> signed half-twist count
  std::vector<int> open_slots;      // template slots awaiting parameters

  bool is_template() const { return !open_slots.empty(); }
};

// Structural validation; allow_open tolerates unassigned template slots.
void validate_scheme(const SymmetricUnionScheme& s, bool allow_open = false);

// Full symmetric-union diagram: half joined to its reflected copy across
// the axis with the assigned twist ladders. Canonically relabeled. The
// caller is responsible for checking component_count.
PlanarDiagram expand(const SymmetricUnionScheme& s);

// 2 * |half crossings| + sum of |t| over the twist slots.
int total_crossings(const SymmetricUnionScheme& s);

// The partial knot K-minus: half closed by vertical smoothing at each twist
// region and joining the two transversal ports. Single component, or
// MultiComponent is raised.
PlanarDiagram partial_knot(const SymmetricUnionScheme& s);

SymmetricUnionScheme instantiate_template(const SymmetricUnionScheme& tmpl,
                                          const std::vector<int>& params);

std::string scheme_to_json(const SymmetricUnionScheme& s);
SymmetricUnionScheme scheme_from_json(const std::string& text);
SymmetricUnionScheme load_scheme_file(const std::string& path);

}  // namespace symknot
