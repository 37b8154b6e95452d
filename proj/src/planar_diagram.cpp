#include "symknot/planar_diagram.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

#include "symknot/errors.hpp"

namespace symknot {

namespace {

struct Step {
  EdgeId edge;
  Slot tail;  // where the edge leaves a crossing
  Slot head;  // where it enters the next one
};

// Closed-strand traversal. Components are discovered in order of their least
// edge id; within a component the least edge is walked first, pointing away
// from its first occurrence in crossing order.
std::vector<std::vector<Step>> traverse(const PlanarDiagram& d, const EdgeIndex& index) {
  std::vector<std::vector<Step>> components;
  std::map<EdgeId, bool> visited;
  for (EdgeId e : index.edges()) visited[e] = false;

  for (EdgeId start : index.edges()) {
    if (visited[start]) continue;
    std::vector<Step> walk;
    EdgeId e = start;
    Slot tail = index.slots_of(start)[0];
    Slot head = index.slots_of(start)[1];
    while (true) {
      visited[e] = true;
      walk.push_back({e, tail, head});
      Slot exit{head.crossing, (head.pos + 2) % 4};
      if (exit == index.slots_of(start)[0]) break;  // about to re-enter start forward
      e = d.crossings[static_cast<std::size_t>(exit.crossing)][exit.pos];
      tail = exit;
      head = index.other_slot(e, exit);
    }
    components.push_back(std::move(walk));
  }
  return components;
}

int parse_positive_int(const std::string& s, const std::string& token) {
  if (s.empty()) raise(ErrorKind::MalformedToken, "empty edge id in '" + token + "'");
  for (char c : s)
    if (!isdigit(static_cast<unsigned char>(c)))
      raise(ErrorKind::MalformedToken, "bad edge id '" + s + "' in '" + token + "'");
  long v = 0;
  try {
    v = std::stol(s);
  } catch (const std::exception&) {
    raise(ErrorKind::MalformedToken, "edge id out of range in '" + token + "'");
  }
  if (v <= 0 || v > 1000000000)
    raise(ErrorKind::MalformedToken, "edge id out of range in '" + token + "'");
  return static_cast<int>(v);
}

}  // namespace

EdgeIndex::EdgeIndex(const PlanarDiagram& d, bool require_closed) {
  std::map<EdgeId, std::array<Slot, 2>> slots;
  std::map<EdgeId, int> count;
  for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c) {
    for (int p = 0; p < 4; ++p) {
      EdgeId e = d.crossings[static_cast<std::size_t>(c)][p];
      int& n = count[e];
      if (n >= 2)
        raise(ErrorKind::EdgeUsedWrongNumberOfTimes,
              "edge " + std::to_string(e) + " occurs more than twice");
      slots[e][static_cast<std::size_t>(n)] = Slot{c, p};
      ++n;
    }
  }
  if (require_closed) {
    for (const auto& [e, n] : count)
      if (n != 2)
        raise(ErrorKind::EdgeUsedWrongNumberOfTimes,
              "edge " + std::to_string(e) + " occurs " + std::to_string(n) + " times");
  }
  for (const auto& [e, s] : slots) {
    edges_.push_back(e);
    slots_.push_back(s);
    count_.push_back(count[e]);
  }
}

int EdgeIndex::index_of(EdgeId e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e)
    raise(ErrorKind::NoSuchEdge, "edge " + std::to_string(e) + " not in diagram");
  return static_cast<int>(it - edges_.begin());
}

bool EdgeIndex::contains(EdgeId e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  return it != edges_.end() && *it == e;
}

const std::array<Slot, 2>& EdgeIndex::slots_of(EdgeId e) const {
  return slots_[static_cast<std::size_t>(index_of(e))];
}

Slot EdgeIndex::other_slot(EdgeId e, const Slot& s) const {
  const auto& both = slots_of(e);
  return (both[0] == s) ? both[1] : both[0];
}

bool OrientedDiagram::edge_forward_into(EdgeId e, const Slot& s) const {
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  assert(it != edges.end() && *it == e);
  return head_slot[static_cast<std::size_t>(it - edges.begin())] == s;
}

PlanarDiagram parse_pd(const std::string& text) {
  PlanarDiagram d;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    if (token == "O") {
      d.free_loops += 1;
      continue;
    }
    if (token.size() < 2 || token[0] != 'X' || token[1] != '(') {
      // Allow "X(1," style splitting across whitespace by reassembling until ')'.
      raise(ErrorKind::MalformedToken, "expected X(a,b,c,d) or O, got '" + token + "'");
    }
    while (token.find(')') == std::string::npos) {
      std::string more;
      if (!(in >> more))
        raise(ErrorKind::MalformedToken, "unterminated crossing term '" + token + "'");
      token += more;
    }
    if (token.back() != ')')
      raise(ErrorKind::MalformedToken, "trailing characters in '" + token + "'");
    std::string body = token.substr(2, token.size() - 3);
    std::array<EdgeId, 4> edges{};
    std::size_t pos = 0;
    for (int i = 0; i < 4; ++i) {
      std::size_t comma = body.find(',', pos);
      bool last = (i == 3);
      if (!last && comma == std::string::npos)
        raise(ErrorKind::MalformedToken, "expected four edges in '" + token + "'");
      if (last && comma != std::string::npos)
        raise(ErrorKind::MalformedToken, "too many edges in '" + token + "'");
      std::string field = last ? body.substr(pos) : body.substr(pos, comma - pos);
      edges[static_cast<std::size_t>(i)] = parse_positive_int(field, token);
      pos = last ? pos : comma + 1;
    }
    d.crossings.push_back(Crossing{edges});
  }
  EdgeIndex check(d);  // enforces the edge-occurrence invariant
  return d;
}

std::string print_pd(const PlanarDiagram& d) {
  std::ostringstream out;
  bool first = true;
  for (const auto& c : d.crossings) {
    if (!first) out << " ";
    out << "X(" << c[0] << "," << c[1] << "," << c[2] << "," << c[3] << ")";
    first = false;
  }
  for (int i = 0; i < d.free_loops; ++i) {
    if (!first) out << " ";
    out << "O";
    first = false;
  }
  return out.str();
}

int component_count(const PlanarDiagram& d) {
  EdgeIndex index(d);
  return static_cast<int>(traverse(d, index).size()) + d.free_loops;
}

PlanarDiagram mirror(const PlanarDiagram& d) {
  PlanarDiagram m;
  m.free_loops = d.free_loops;
  m.crossings.reserve(d.crossings.size());
  for (const auto& c : d.crossings)
    m.crossings.push_back(Crossing{{c[1], c[2], c[3], c[0]}});
  return m;
}

OrientedDiagram orient(const PlanarDiagram& d) {
  OrientedDiagram o;
  o.base = d;
  EdgeIndex index(d);
  auto components = traverse(d, index);

  o.edges = index.edges();
  o.head_slot.resize(o.edges.size());
  o.tail_slot.resize(o.edges.size());
  for (const auto& comp : components) {
    for (const auto& step : comp) {
      auto it = std::lower_bound(o.edges.begin(), o.edges.end(), step.edge);
      std::size_t i = static_cast<std::size_t>(it - o.edges.begin());
      o.tail_slot[i] = step.tail;
      o.head_slot[i] = step.head;
    }
  }

  o.crossing_sign.resize(d.crossings.size());
  o.writhe = 0;
  for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c) {
    const auto& q = d.crossings[static_cast<std::size_t>(c)];
    int under_in = o.edge_forward_into(q[0], Slot{c, 0}) ? 0 : 2;
    int over_in = o.edge_forward_into(q[1], Slot{c, 1}) ? 1 : 3;
    int sign = ((over_in - under_in + 4) % 4 == 3) ? +1 : -1;
    o.crossing_sign[static_cast<std::size_t>(c)] = sign;
    o.writhe += sign;
  }
  return o;
}

PlanarDiagram canonical_relabel(const PlanarDiagram& d) {
  if (d.crossings.empty()) return d;
  EdgeIndex index(d);
  auto components = traverse(d, index);

  std::map<EdgeId, EdgeId> new_id;
  EdgeId next = 1;
  // Crossing order: first visit during traversal. Quadruples rotated so slot
  // 0 is the under-in edge for the traversal direction.
  std::map<EdgeId, Slot> head_of;
  std::vector<int> crossing_order;
  std::vector<bool> seen(d.crossings.size(), false);
  for (const auto& comp : components)
    for (const auto& step : comp) {
      new_id[step.edge] = next++;
      head_of[step.edge] = step.head;
      if (!seen[static_cast<std::size_t>(step.head.crossing)]) {
        seen[static_cast<std::size_t>(step.head.crossing)] = true;
        crossing_order.push_back(step.head.crossing);
      }
    }

  PlanarDiagram out;
  out.free_loops = d.free_loops;
  for (int c : crossing_order) {
    const auto& q = d.crossings[static_cast<std::size_t>(c)];
    int under_in = (head_of[q[0]] == Slot{c, 0}) ? 0 : 2;
    Crossing rotated{};
    for (int i = 0; i < 4; ++i)
      rotated.e[static_cast<std::size_t>(i)] = new_id[q[(under_in + i) % 4]];
    out.crossings.push_back(rotated);
  }
  return out;
}

PlanarDiagram connected_sum(const PlanarDiagram& a, EdgeId edge_a,
                            const PlanarDiagram& b, EdgeId edge_b) {
  // A crossingless unknot is the identity for connected sum.
  if (a.crossings.empty()) {
    if (component_count(a) != 1) raise(ErrorKind::MultiComponentOperand, "left operand");
    return canonical_relabel(b);
  }
  if (b.crossings.empty()) {
    if (component_count(b) != 1) raise(ErrorKind::MultiComponentOperand, "right operand");
    return canonical_relabel(a);
  }

  EdgeIndex ia(a), ib(b);
  if (!ia.contains(edge_a)) raise(ErrorKind::NoSuchEdge, "edge " + std::to_string(edge_a));
  if (!ib.contains(edge_b)) raise(ErrorKind::NoSuchEdge, "edge " + std::to_string(edge_b));
  if (component_count(a) != 1) raise(ErrorKind::MultiComponentOperand, "left operand");
  if (component_count(b) != 1) raise(ErrorKind::MultiComponentOperand, "right operand");

  OrientedDiagram oa = orient(a), ob = orient(b);

  EdgeId offset = 0;
  for (EdgeId e : ia.edges()) offset = std::max(offset, e);
  EdgeId fresh1 = offset + 1, fresh2 = offset + 2;
  EdgeId shift_b = offset + 2;

  auto slot_index = [](const OrientedDiagram& o, EdgeId e) {
    auto it = std::lower_bound(o.edges.begin(), o.edges.end(), e);
    return static_cast<std::size_t>(it - o.edges.begin());
  };

  PlanarDiagram out;
  out.crossings = a.crossings;
  std::size_t sa = slot_index(oa, edge_a);
  Slot a_tail = oa.tail_slot[sa], a_head = oa.head_slot[sa];
  out.crossings[static_cast<std::size_t>(a_tail.crossing)].e[static_cast<std::size_t>(a_tail.pos)] = fresh1;
  out.crossings[static_cast<std::size_t>(a_head.crossing)].e[static_cast<std::size_t>(a_head.pos)] = fresh2;

  std::size_t base = out.crossings.size();
  for (const auto& c : b.crossings) {
    Crossing shifted{};
    for (int i = 0; i < 4; ++i) shifted.e[static_cast<std::size_t>(i)] = c[i] + shift_b;
    out.crossings.push_back(shifted);
  }
  std::size_t sb = slot_index(ob, edge_b);
  Slot b_tail = ob.tail_slot[sb], b_head = ob.head_slot[sb];
  out.crossings[base + static_cast<std::size_t>(b_tail.crossing)]
      .e[static_cast<std::size_t>(b_tail.pos)] = fresh2;
  out.crossings[base + static_cast<std::size_t>(b_head.crossing)]
      .e[static_cast<std::size_t>(b_head.pos)] = fresh1;

  out.free_loops = a.free_loops + b.free_loops;
  return canonical_relabel(out);
}

FaceStructure compute_faces(const PlanarDiagram& d, const EdgeIndex& index) {
  FaceStructure fs;
  int n = static_cast<int>(d.crossings.size());
  fs.face_of_dart.assign(static_cast<std::size_t>(4 * n), -1);

  auto alpha = [&](int dart) {
    int c = dart / 4, p = dart % 4;
    EdgeId e = d.crossings[static_cast<std::size_t>(c)][p];
    Slot other = index.other_slot(e, Slot{c, p});
    return other.crossing * 4 + other.pos;
  };

  for (int start = 0; start < 4 * n; ++start) {
    if (fs.face_of_dart[static_cast<std::size_t>(start)] != -1) continue;
    int face = fs.face_count++;
    std::vector<int> walk;
    int dart = start;
    do {
      fs.face_of_dart[static_cast<std::size_t>(dart)] = face;
      walk.push_back(dart);
      int a = alpha(dart);
      dart = (a / 4) * 4 + (a % 4 + 3) % 4;
    } while (dart != start);
    fs.face_darts.push_back(std::move(walk));
  }
  return fs;
}

bool is_planar_connected(const PlanarDiagram& d) {
  if (d.crossings.empty()) return true;
  EdgeIndex index(d);
  if (static_cast<int>(traverse(d, index).size()) < 1) return false;
  FaceStructure fs = compute_faces(d, index);
  return fs.face_count == static_cast<int>(d.crossings.size()) + 2;
}

}  // namespace symknot
