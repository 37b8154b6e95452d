#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace symknot {

using EdgeId = int;

// One crossing as a quadruple of edge identifiers, listed counterclockwise
// starting at the incoming under-strand. Slots 0 and 2 carry the under
// strand (0 -> 2), slots 1 and 3 the over strand.
struct Crossing {
  std::array<EdgeId, 4> e;
  EdgeId operator[](int i) const { return e[static_cast<std::size_t>(i)]; }
  bool operator==(const Crossing& o) const { return e == o.e; }
};

// Crossing-list code of a knot or link diagram plus a count of crossingless
// circle components. Immutable by convention: operations return new values.
struct PlanarDiagram {
  std::vector<Crossing> crossings;
  int free_loops = 0;

  bool operator==(const PlanarDiagram& o) const {
    return crossings == o.crossings && free_loops == o.free_loops;
  }
};

// A slot is one of the four edge incidences of a crossing.
struct Slot {
  int crossing = -1;
  int pos = -1;
  bool operator==(const Slot& o) const { return crossing == o.crossing && pos == o.pos; }
  bool valid() const { return crossing >= 0; }
};

// Occurrence table: for every edge id, the one or two slots where it appears.
// Validates the degree condition (every edge exactly twice) on construction.
class EdgeIndex {
 public:
  explicit EdgeIndex(const PlanarDiagram& d, bool require_closed = true);

  const std::vector<EdgeId>& edges() const { return edges_; }
  const std::array<Slot, 2>& slots_of(EdgeId e) const;
  Slot other_slot(EdgeId e, const Slot& s) const;
  bool contains(EdgeId e) const;

 private:
  std::vector<EdgeId> edges_;
  std::vector<std::array<Slot, 2>> slots_;
  std::vector<int> count_;
  EdgeId min_id_ = 0;
  int index_of(EdgeId e) const;
};

// Direction of travel along each component, fixed by the tie-break rule:
// each component starts at its least edge id, pointing away from that
// edge's first occurrence in crossing order.
struct OrientedDiagram {
  PlanarDiagram base;
  // head_slot[i]: the slot where edge edges[i] is entered when traversed
  // forward; tail_slot[i] is where it leaves.
  std::vector<EdgeId> edges;
  std::vector<Slot> head_slot;
  std::vector<Slot> tail_slot;
  std::vector<int> crossing_sign;  // per crossing, ±1
  int writhe = 0;

  bool edge_forward_into(EdgeId e, const Slot& s) const;
  int sign_of(int crossing) const { return crossing_sign[static_cast<std::size_t>(crossing)]; }
};

PlanarDiagram parse_pd(const std::string& text);
std::string print_pd(const PlanarDiagram& d);

int component_count(const PlanarDiagram& d);

// Over/under swapped at every crossing (quadruple rotated by one position).
PlanarDiagram mirror(const PlanarDiagram& d);

OrientedDiagram orient(const PlanarDiagram& d);

// Relabels edges in traversal order (components ordered by least original
// id) and rotates quadruples so slot 0 is the forward under-in edge.
PlanarDiagram canonical_relabel(const PlanarDiagram& d);

PlanarDiagram connected_sum(const PlanarDiagram& a, EdgeId edge_a,
                            const PlanarDiagram& b, EdgeId edge_b);

// Combinatorial map faces. A dart is crossing*4+pos, pointing away from the
// crossing along that arm; its face is the one on the left looking outward,
// which is the corner between arms pos and pos+1.
struct FaceStructure {
  int face_count = 0;
  std::vector<int> face_of_dart;             // indexed by crossing*4+pos
  std::vector<std::vector<int>> face_darts;  // darts of each face in walk order
};

FaceStructure compute_faces(const PlanarDiagram& d, const EdgeIndex& index);

// Euler planarity check for a connected shadow: faces == crossings + 2.
bool is_planar_connected(const PlanarDiagram& d);

}  // namespace symknot
