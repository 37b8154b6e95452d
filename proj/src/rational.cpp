#include "symknot/rational.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "symknot/errors.hpp"

namespace symknot {

namespace {

// Tangle under construction: a box with four open corner ends. Twists are
// appended on the east side (horizontal) or the south side (vertical).
struct Tangle {
  std::vector<Crossing> crossings;
  std::vector<std::pair<EdgeId, EdgeId>> wires;
  EdgeId nw = 0, ne = 0, sw = 0, se = 0;
  EdgeId fresh = 1;

  EdgeId take() { return fresh++; }

  void add_horizontal(int count) {
    for (int k = 0; k < std::abs(count); ++k) {
      EdgeId ne2 = take(), se2 = take();
      if (count > 0)
        crossings.push_back(Crossing{{ne, se, se2, ne2}});
      else
        crossings.push_back(Crossing{{se, se2, ne2, ne}});
      ne = ne2;
      se = se2;
    }
  }

  void add_vertical(int count) {
    for (int k = 0; k < std::abs(count); ++k) {
      EdgeId sw2 = take(), se2 = take();
      if (count > 0)
        crossings.push_back(Crossing{{sw, sw2, se2, se}});
      else
        crossings.push_back(Crossing{{se, sw, sw2, se2}});
      sw = sw2;
      se = se2;
    }
  }
};

Tangle build_tangle(const std::vector<int>& conway) {
  if (conway.empty()) raise(ErrorKind::MalformedToken, "empty Conway vector");
  for (int a : conway)
    if (a == 0) raise(ErrorKind::MalformedToken, "Conway entries must be nonzero");

  Tangle t;
  t.nw = t.take();
  t.ne = t.take();
  t.sw = t.take();
  t.se = t.take();
  const int k = static_cast<int>(conway.size());
  if (k % 2 == 1) {
    // 0-tangle start: two horizontal strands.
    t.wires.emplace_back(t.nw, t.ne);
    t.wires.emplace_back(t.sw, t.se);
  } else {
    // Infinity-tangle start: two vertical strands.
    t.wires.emplace_back(t.nw, t.sw);
    t.wires.emplace_back(t.ne, t.se);
  }
  // Innermost entry first; odd positions twist horizontally.
  for (int i = k; i >= 1; --i) {
    int a = conway[static_cast<std::size_t>(i - 1)];
    if (i % 2 == 1)
      t.add_horizontal(a);
    else
      t.add_vertical(a);
  }
  return t;
}

// Shared with scheme assembly: resolves wires by union-find and relabels.
PlanarDiagram close_numerator(Tangle t) {
  t.wires.emplace_back(t.nw, t.ne);
  t.wires.emplace_back(t.sw, t.se);

  std::map<EdgeId, EdgeId> parent;
  std::function<EdgeId(EdgeId)> find = [&](EdgeId x) {
    auto it = parent.find(x);
    if (it == parent.end() || it->second == x) {
      parent[x] = x;
      return x;
    }
    EdgeId root = find(it->second);
    parent[x] = root;
    return root;
  };
  for (const auto& c : t.crossings)
    for (int p = 0; p < 4; ++p) find(c[p]);
  for (const auto& [a, b] : t.wires) parent[find(a)] = find(b);

  PlanarDiagram d;
  std::map<EdgeId, int> slot_count;
  for (auto& c : t.crossings) {
    Crossing renamed{};
    for (int p = 0; p < 4; ++p) {
      renamed.e[static_cast<std::size_t>(p)] = find(c[p]);
      slot_count[find(c[p])] += 1;
    }
    d.crossings.push_back(renamed);
  }
  std::set<EdgeId> loops;
  for (const auto& [name, _] : parent)
    if (slot_count.find(find(name)) == slot_count.end()) loops.insert(find(name));
  d.free_loops = static_cast<int>(loops.size());
  return canonical_relabel(d);
}

}  // namespace

PlanarDiagram rational_knot(const std::vector<int>& conway) {
  PlanarDiagram d = close_numerator(build_tangle(conway));
  if (component_count(d) != 1)
    raise(ErrorKind::NotAKnot, "continued-fraction closure has two components");
  return d;
}

RationalArc rational_arc(const std::vector<int>& conway) {
  PlanarDiagram d = rational_knot(conway);
  RationalArc arc;
  if (d.crossings.empty()) {
    // Crossingless unknot: the arc is a single strand.
    arc.arcs.push_back(HalfArc{1, 2});
    arc.port_a = 1;
    arc.port_b = 2;
    return arc;
  }
  EdgeIndex index(d);
  EdgeId cut = index.edges().front();
  EdgeId max_id = index.edges().back();
  const auto& slots = index.slots_of(cut);
  arc.crossings = d.crossings;
  arc.port_a = max_id + 1;
  arc.port_b = max_id + 2;
  arc.crossings[static_cast<std::size_t>(slots[0].crossing)]
      .e[static_cast<std::size_t>(slots[0].pos)] = arc.port_a;
  arc.crossings[static_cast<std::size_t>(slots[1].crossing)]
      .e[static_cast<std::size_t>(slots[1].pos)] = arc.port_b;
  return arc;
}

namespace {

SymmetricUnionScheme bare_strand_template(int twist_slots) {
  SymmetricUnionScheme s;
  EdgeId next = 1;
  EdgeId prev = next++;
  s.axis.push_back(AxisItem{AxisItem::Kind::Transversal, prev, 0, 0, 0});
  for (int i = 1; i <= twist_slots; ++i) {
    EdgeId u = next++, l = next++;
    s.half_arcs.push_back(HalfArc{prev, u});
    AxisItem item;
    item.kind = AxisItem::Kind::Twist;
    item.slot = i;
    item.upper = u;
    item.lower = l;
    s.axis.push_back(item);
    prev = l;
  }
  EdgeId tail = next++;
  s.half_arcs.push_back(HalfArc{prev, tail});
  s.axis.push_back(AxisItem{AxisItem::Kind::Transversal, tail, 0, 0, 0});
  for (int i = 1; i <= twist_slots; ++i) s.open_slots.push_back(i);
  return s;
}

SymmetricUnionScheme rational_scheme_impl(const std::vector<int>& conway, int twist_slots,
                                          const std::vector<int>* twists, int variant) {
  if (twist_slots < 0) raise(ErrorKind::InvalidScheme, "negative twist slot count");
  PlanarDiagram d = rational_knot(conway);

  SymmetricUnionScheme s;
  if (d.crossings.empty()) {
    s = bare_strand_template(twist_slots);
    s.open_slots.clear();
  } else {
    EdgeIndex index(d);
    FaceStructure fs = compute_faces(d, index);

    // Cut edges must border the chosen face exactly once.
    int best_face = -1;
    std::size_t best_count = 0;
    std::vector<std::vector<int>> cuttable(static_cast<std::size_t>(fs.face_count));
    for (int f = 0; f < fs.face_count; ++f) {
      std::map<EdgeId, int> edge_darts;
      for (int dart : fs.face_darts[static_cast<std::size_t>(f)])
        edge_darts[d.crossings[static_cast<std::size_t>(dart / 4)][dart % 4]] += 1;
      for (int dart : fs.face_darts[static_cast<std::size_t>(f)]) {
        EdgeId e = d.crossings[static_cast<std::size_t>(dart / 4)][dart % 4];
        if (edge_darts[e] == 1) cuttable[static_cast<std::size_t>(f)].push_back(dart);
      }
      if (cuttable[static_cast<std::size_t>(f)].size() > best_count) {
        best_count = cuttable[static_cast<std::size_t>(f)].size();
        best_face = f;
      }
    }
    const int needed = twist_slots + 1;
    if (best_face < 0 || static_cast<int>(best_count) < needed)
      raise(ErrorKind::InvalidScheme, "no face offers enough cut points for the twist regions");

    // Evenly spread cut darts along the boundary walk, rotated by variant.
    const auto& candidates = cuttable[static_cast<std::size_t>(best_face)];
    const int m = static_cast<int>(candidates.size());
    std::vector<int> chosen;
    for (int i = 0; i < needed; ++i)
      chosen.push_back(candidates[static_cast<std::size_t>((i * m / needed + variant) % m)]);

    s.half_crossings = d.crossings;
    EdgeId next_name = index.edges().back() + 1;

    // Cut the knot edge (transversal ports), then the twist edges in walk
    // order starting just past the knot cut.
    struct CutInfo {
      EdgeId near_end, far_end;
    };
    std::map<int, CutInfo> cut_at_dart;
    for (int i = 0; i < needed; ++i) {
      int dart = chosen[static_cast<std::size_t>(i)];
      int c = dart / 4, p = dart % 4;
      EdgeId e = d.crossings[static_cast<std::size_t>(c)][p];
      Slot other = index.other_slot(e, Slot{c, p});
      CutInfo info{next_name++, next_name++};
      s.half_crossings[static_cast<std::size_t>(c)].e[static_cast<std::size_t>(p)] = info.near_end;
      s.half_crossings[static_cast<std::size_t>(other.crossing)]
          .e[static_cast<std::size_t>(other.pos)] = info.far_end;
      cut_at_dart[dart] = info;
    }

    // Axis order = boundary walk order, opened at the knot cut.
    const auto& walk = fs.face_darts[static_cast<std::size_t>(best_face)];
    int knot_pos = -1;
    for (int i = 0; i < static_cast<int>(walk.size()); ++i)
      if (walk[static_cast<std::size_t>(i)] == chosen[0]) knot_pos = i;

    s.axis.push_back(AxisItem{AxisItem::Kind::Transversal,
                              cut_at_dart[chosen[0]].far_end, 0, 0, 0});
    int slot = 0;
    for (int step = 1; step < static_cast<int>(walk.size()); ++step) {
      int dart = walk[static_cast<std::size_t>((knot_pos + step) % walk.size())];
      auto it = cut_at_dart.find(dart);
      if (it == cut_at_dart.end()) continue;
      AxisItem item;
      item.kind = AxisItem::Kind::Twist;
      item.slot = ++slot;
      item.upper = it->second.near_end;
      item.lower = it->second.far_end;
      s.axis.push_back(item);
    }
    s.axis.push_back(AxisItem{AxisItem::Kind::Transversal,
                              cut_at_dart[chosen[0]].near_end, 0, 0, 0});
    if (slot != twist_slots)
      raise(ErrorKind::InvalidScheme, "cut bookkeeping failed");
  }

  if (twists) {
    for (int i = 1; i <= twist_slots; ++i)
      s.assignment[i] = (*twists)[static_cast<std::size_t>(i - 1)];
  } else {
    for (int i = 1; i <= twist_slots; ++i) s.open_slots.push_back(i);
  }
  validate_scheme(s, /*allow_open=*/twists == nullptr);
  return s;
}

}  // namespace

SymmetricUnionScheme rational_scheme(const std::vector<int>& conway,
                                     const std::vector<int>& twists, int variant) {
  return rational_scheme_impl(conway, static_cast<int>(twists.size()), &twists, variant);
}

SymmetricUnionScheme rational_template(const std::vector<int>& conway, int twist_slots,
                                       int variant) {
  return rational_scheme_impl(conway, twist_slots, nullptr, variant);
}

SymmetricUnionScheme unknot_template(int twist_slots) {
  SymmetricUnionScheme s = bare_strand_template(twist_slots);
  validate_scheme(s, /*allow_open=*/true);
  return s;
}

SymmetricUnionScheme unknot_scheme(const std::vector<int>& twists) {
  return instantiate_template(unknot_template(static_cast<int>(twists.size())), twists);
}

}  // namespace symknot
