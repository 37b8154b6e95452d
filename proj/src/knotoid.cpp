#include "symknot/knotoid.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>

#include "symknot/errors.hpp"

namespace symknot {

namespace {

struct CrossTimes {
  int under = 0, over = 0, sign = 0;
};

// Crossing visit times (1-based along the arc), keyed by crossing id.
std::map<int, CrossTimes> crossing_times(const KnotoidDiagram& k) {
  std::map<int, CrossTimes> times;
  for (std::size_t i = 0; i < k.passes.size(); ++i) {
    const KnotoidPass& p = k.passes[i];
    CrossTimes& ct = times[p.crossing];
    int t = static_cast<int>(i) + 1;
    if (p.layer == PassLayer::Under) {
      if (ct.under != 0) raise(ErrorKind::MalformedKnotoid, "two under passes at one crossing");
      ct.under = t;
    } else {
      if (ct.over != 0) raise(ErrorKind::MalformedKnotoid, "two over passes at one crossing");
      ct.over = t;
    }
    if (ct.sign == 0)
      ct.sign = p.sign;
    else if (ct.sign != p.sign)
      raise(ErrorKind::MalformedKnotoid, "sign mismatch at crossing " + std::to_string(p.crossing));
  }
  return times;
}

// Combinatorial map of the open arc: crossing vertices plus two degree-one
// endpoints. The signed code determines every rotation, so realizability is
// just the Euler face count.
struct ArcMap {
  int n = 0;  // crossings
  int m = 0;  // passes
  std::vector<std::array<int, 4>> quad;  // arc-edge index per arm, CCW from under-in
  std::vector<int> crossing_ids;         // original id per vertex
  std::vector<int> crossing_signs;       // per vertex
  int leg_dart = 0, head_dart = 0;
  std::vector<int> dart_edge;
  std::vector<int> dart_alpha;
  int face_count = 0;
  std::vector<int> face_of_dart;
  std::vector<std::vector<int>> face_darts;

  // Whether a crossing arm carries the incoming edge of its passage (the
  // high-time end of that arc edge).
  bool arm_incoming(int dart) const {
    int v = dart / 4, a = dart % 4;
    int sgn = crossing_signs[static_cast<std::size_t>(v)];
    if (a == 0) return true;
    if (a == 2) return false;
    return (a == 1) ? sgn < 0 : sgn > 0;
  }
};

ArcMap build_arc_map(const KnotoidDiagram& k) {
  ArcMap map;
  map.m = static_cast<int>(k.passes.size());
  auto times = crossing_times(k);
  for (const auto& [id, ct] : times)
    if (ct.under == 0 || ct.over == 0)
      raise(ErrorKind::MalformedKnotoid, "crossing " + std::to_string(id) + " visited once");

  // Vertices in first-visit order.
  std::map<int, int> vertex_of;
  for (const auto& p : k.passes)
    if (!vertex_of.count(p.crossing)) {
      int v = static_cast<int>(vertex_of.size());
      vertex_of[p.crossing] = v;
      map.crossing_ids.push_back(p.crossing);
    }
  map.n = static_cast<int>(vertex_of.size());
  if (2 * map.n != map.m) raise(ErrorKind::MalformedKnotoid, "pass count is not twice the crossings");

  map.quad.resize(static_cast<std::size_t>(map.n));
  map.crossing_signs.resize(static_cast<std::size_t>(map.n));
  for (const auto& [id, ct] : times) {
    int u = ct.under, o = ct.over;
    std::array<int, 4> q{};
    if (ct.sign > 0)
      q = {u - 1, o, u, o - 1};
    else
      q = {u - 1, o - 1, u, o};
    map.quad[static_cast<std::size_t>(vertex_of[id])] = q;
    map.crossing_signs[static_cast<std::size_t>(vertex_of[id])] = ct.sign;
  }

  const int darts = 4 * map.n + 2;
  map.leg_dart = 4 * map.n;
  map.head_dart = 4 * map.n + 1;
  map.dart_edge.assign(static_cast<std::size_t>(darts), -1);
  for (int v = 0; v < map.n; ++v)
    for (int a = 0; a < 4; ++a)
      map.dart_edge[static_cast<std::size_t>(4 * v + a)] =
          map.quad[static_cast<std::size_t>(v)][static_cast<std::size_t>(a)];
  map.dart_edge[static_cast<std::size_t>(map.leg_dart)] = 0;
  map.dart_edge[static_cast<std::size_t>(map.head_dart)] = map.m;

  std::vector<std::vector<int>> edge_darts(static_cast<std::size_t>(map.m) + 1);
  for (int d = 0; d < darts; ++d)
    edge_darts[static_cast<std::size_t>(map.dart_edge[static_cast<std::size_t>(d)])].push_back(d);
  map.dart_alpha.assign(static_cast<std::size_t>(darts), -1);
  for (const auto& pair : edge_darts) {
    if (pair.size() != 2) raise(ErrorKind::MalformedKnotoid, "arc edge incidence mismatch");
    map.dart_alpha[static_cast<std::size_t>(pair[0])] = pair[1];
    map.dart_alpha[static_cast<std::size_t>(pair[1])] = pair[0];
  }

  auto phi = [&map](int d) {
    int d2 = map.dart_alpha[static_cast<std::size_t>(d)];
    if (d2 >= 4 * map.n) return d2;  // endpoint turns around
    return (d2 / 4) * 4 + (d2 % 4 + 3) % 4;
  };

  map.face_of_dart.assign(static_cast<std::size_t>(darts), -1);
  for (int start = 0; start < darts; ++start) {
    if (map.face_of_dart[static_cast<std::size_t>(start)] != -1) continue;
    int face = map.face_count++;
    std::vector<int> walk;
    int d = start;
    do {
      map.face_of_dart[static_cast<std::size_t>(d)] = face;
      walk.push_back(d);
      d = phi(d);
    } while (d != start);
    map.face_darts.push_back(std::move(walk));
  }
  return map;
}

}  // namespace

void validate_knotoid(const KnotoidDiagram& k) {
  auto times = crossing_times(k);
  for (const auto& [id, ct] : times) {
    if (ct.under == 0 || ct.over == 0)
      raise(ErrorKind::MalformedKnotoid, "crossing " + std::to_string(id) + " visited once");
    if (ct.sign != 1 && ct.sign != -1)
      raise(ErrorKind::MalformedKnotoid, "crossing " + std::to_string(id) + " needs sign ±1");
  }
  const int m = static_cast<int>(k.passes.size());
  for (const auto& [gap, _] : k.decorations)
    if (gap < 0 || gap > m)
      raise(ErrorKind::MalformedKnotoid, "decoration gap " + std::to_string(gap) + " out of range");
}

bool is_realizable(const KnotoidDiagram& k) {
  validate_knotoid(k);
  ArcMap map = build_arc_map(k);
  return map.face_count == map.n + 1;
}

KnotoidDiagram scheme_to_knotoid(const SymmetricUnionScheme& s, FoldSide side) {
  validate_scheme(s, /*allow_open=*/false);
  partial_knot(s);  // raises MultiComponent for inadmissible halves

  std::vector<Crossing> half = s.half_crossings;
  if (side == FoldSide::Up)
    for (auto& c : half) c = Crossing{{c[1], c[2], c[3], c[0]}};

  // Incidence lists per edge name: crossing slots, arc links, twist joins.
  struct Inc {
    enum class Kind { SlotRef, ArcLink, JoinLink } kind;
    int crossing = 0, pos = 0;  // SlotRef
    EdgeId other = 0;           // links
    int link_id = 0;            // arc index or axis index
    int twist_slot = -1;        // JoinLink
    bool used = false;
  };
  std::map<EdgeId, std::vector<Inc>> incs;
  for (int c = 0; c < static_cast<int>(half.size()); ++c)
    for (int p = 0; p < 4; ++p) {
      Inc inc;
      inc.kind = Inc::Kind::SlotRef;
      inc.crossing = c;
      inc.pos = p;
      incs[half[static_cast<std::size_t>(c)][p]].push_back(inc);
    }
  for (int a = 0; a < static_cast<int>(s.half_arcs.size()); ++a) {
    const auto& arc = s.half_arcs[static_cast<std::size_t>(a)];
    Inc i1, i2;
    i1.kind = i2.kind = Inc::Kind::ArcLink;
    i1.link_id = i2.link_id = a;
    i1.other = arc.b;
    i2.other = arc.a;
    incs[arc.a].push_back(i1);
    incs[arc.b].push_back(i2);
  }
  EdgeId leg = 0, head = 0;
  bool have_leg = false;
  for (int i = 0; i < static_cast<int>(s.axis.size()); ++i) {
    const AxisItem& item = s.axis[static_cast<std::size_t>(i)];
    if (item.kind == AxisItem::Kind::Transversal) {
      if (!have_leg) {
        leg = item.port;
        have_leg = true;
      } else {
        head = item.port;
      }
      continue;
    }
    Inc i1, i2;
    i1.kind = i2.kind = Inc::Kind::JoinLink;
    i1.link_id = i2.link_id = i;
    i1.twist_slot = i2.twist_slot = item.slot;
    i1.other = item.lower;
    i2.other = item.upper;
    incs[item.upper].push_back(i1);
    incs[item.lower].push_back(i2);
  }

  auto take = [&incs](EdgeId name, auto pred) -> Inc* {
    for (auto& inc : incs[name])
      if (!inc.used && pred(inc)) {
        inc.used = true;
        return &inc;
      }
    return nullptr;
  };

  KnotoidDiagram k;
  std::map<int, std::array<int, 2>> entered_slots;  // crossing -> entry slots by parity
  std::map<int, int> first_visit;
  std::vector<int> pass_crossing;  // original crossing index per pass

  EdgeId cur = leg;
  while (true) {
    Inc* inc = take(cur, [](const Inc&) { return true; });
    if (!inc) break;  // arrived at the head with everything consumed
    if (inc->kind == Inc::Kind::SlotRef) {
      int c = inc->crossing, p = inc->pos;
      if (!first_visit.count(c)) first_visit[c] = static_cast<int>(first_visit.size()) + 1;
      entered_slots[c][static_cast<std::size_t>(p % 2)] = p;
      KnotoidPass pass;
      pass.crossing = first_visit[c];
      pass.layer = (p % 2 == 0) ? PassLayer::Under : PassLayer::Over;
      pass.sign = 0;  // filled after the walk
      k.passes.push_back(pass);
      pass_crossing.push_back(c);
      int out = (p + 2) % 4;
      cur = half[static_cast<std::size_t>(c)][out];
      Inc* entry = take(cur, [c, out](const Inc& i) {
        return i.kind == Inc::Kind::SlotRef && i.crossing == c && i.pos == out;
      });
      if (!entry) raise(ErrorKind::InvalidScheme, "half traversal lost an edge end");
    } else {
      if (inc->kind == Inc::Kind::JoinLink)
        k.decorations[static_cast<int>(k.passes.size())] += s.assignment.at(inc->twist_slot);
      int link = inc->link_id;
      auto kind = inc->kind;
      cur = inc->other;
      Inc* entry = take(cur, [link, kind](const Inc& i) {
        return i.kind == kind && i.link_id == link;
      });
      if (!entry) raise(ErrorKind::InvalidScheme, "half traversal lost a link end");
    }
  }
  if (cur != head || k.passes.size() != 2 * half.size())
    raise(ErrorKind::InvalidScheme, "half traversal did not finish at the head port");

  // Crossing signs relative to the arc orientation.
  std::map<int, int> sign_of;
  for (const auto& [c, slots] : entered_slots) {
    int s_under = slots[0], s_over = slots[1];
    sign_of[c] = ((s_over - s_under + 4) % 4 == 3) ? +1 : -1;
  }
  for (std::size_t i = 0; i < k.passes.size(); ++i)
    k.passes[i].sign = sign_of.at(pass_crossing[i]);
  return k;
}

SymmetricUnionScheme knotoid_to_scheme(const KnotoidDiagram& k) {
  validate_knotoid(k);
  ArcMap map = build_arc_map(k);
  if (map.face_count != map.n + 1)
    raise(ErrorKind::NotRealizable, "signed code admits no planar embedding");

  int face_leg = map.face_of_dart[static_cast<std::size_t>(map.leg_dart)];
  int face_head = map.face_of_dart[static_cast<std::size_t>(map.head_dart)];
  if (face_leg != face_head)
    raise(ErrorKind::NotRealizable, "arc endpoints do not share a face");
  const int F = face_leg;

  // Chosen boundary dart per decorated gap edge.
  std::map<int, int> cut_dart;  // edge -> dart
  for (const auto& [gap, value] : k.decorations) {
    (void)value;
    int found = -1;
    for (int d : map.face_darts[static_cast<std::size_t>(F)])
      if (map.dart_edge[static_cast<std::size_t>(d)] == gap) {
        found = d;
        break;
      }
    if (found < 0)
      raise(ErrorKind::NotRealizable,
            "decorated gap " + std::to_string(gap) + " is not on the axis face");
    cut_dart[gap] = found;
  }

  SymmetricUnionScheme s;
  EdgeId next_name = 1;
  auto fresh = [&next_name]() { return next_name++; };

  // Per arc edge: name at the low-time side, name at the high-time side.
  // Uncut edges use one name for both.
  std::vector<EdgeId> low_name(static_cast<std::size_t>(map.m) + 1);
  std::vector<EdgeId> high_name(static_cast<std::size_t>(map.m) + 1);
  for (int g = 0; g <= map.m; ++g) {
    EdgeId n1 = fresh();
    low_name[static_cast<std::size_t>(g)] = n1;
    high_name[static_cast<std::size_t>(g)] = cut_dart.count(g) ? fresh() : n1;
  }

  EdgeId leg_port = 0, head_port = 0;
  // Crossings with renamed edges. A passage at time t enters on the high
  // end of edge t-1 and leaves on the low end of edge t.
  s.half_crossings.resize(static_cast<std::size_t>(map.n));
  for (int v = 0; v < map.n; ++v) {
    Crossing c{};
    for (int a = 0; a < 4; ++a) {
      int g = map.quad[static_cast<std::size_t>(v)][static_cast<std::size_t>(a)];
      bool incoming = map.arm_incoming(4 * v + a);
      c.e[static_cast<std::size_t>(a)] =
          incoming ? high_name[static_cast<std::size_t>(g)] : low_name[static_cast<std::size_t>(g)];
    }
    s.half_crossings[static_cast<std::size_t>(v)] = c;
  }

  // Endpoint pieces that touch no crossing become arcs.
  if (map.m == 0) {
    if (cut_dart.count(0)) {
      EdgeId mid1 = low_name[0], mid2 = high_name[0];
      leg_port = fresh();
      head_port = fresh();
      s.half_arcs.push_back(HalfArc{leg_port, mid1});
      s.half_arcs.push_back(HalfArc{mid2, head_port});
    } else {
      leg_port = low_name[0];
      head_port = fresh();
      s.half_arcs.push_back(HalfArc{leg_port, head_port});
    }
  } else {
    if (cut_dart.count(0)) {
      leg_port = fresh();
      s.half_arcs.push_back(HalfArc{leg_port, low_name[0]});
    } else {
      leg_port = low_name[0];
    }
    if (cut_dart.count(map.m)) {
      head_port = fresh();
      s.half_arcs.push_back(HalfArc{high_name[static_cast<std::size_t>(map.m)], head_port});
    } else {
      head_port = high_name[static_cast<std::size_t>(map.m)];
    }
  }

  // Axis: walk the face boundary starting from the leg.
  std::vector<int> walk = map.face_darts[static_cast<std::size_t>(F)];
  auto leg_at = std::find(walk.begin(), walk.end(), map.leg_dart);
  assert(leg_at != walk.end());
  std::rotate(walk.begin(), leg_at, walk.end());

  int slot_seq = 0;
  for (int d : walk) {
    if (d == map.leg_dart)
      s.axis.push_back(AxisItem{AxisItem::Kind::Transversal, leg_port, 0, 0, 0});
    if (d == map.head_dart)
      s.axis.push_back(AxisItem{AxisItem::Kind::Transversal, head_port, 0, 0, 0});
    int g = map.dart_edge[static_cast<std::size_t>(d)];
    auto it = cut_dart.find(g);
    if (it == cut_dart.end() || it->second != d) continue;
    // Walking along the dart meets the piece at its source vertex first.
    // The source sits at the high end when the arm is an incoming one.
    bool source_is_high;
    if (d == map.leg_dart)
      source_is_high = false;
    else if (d == map.head_dart)
      source_is_high = true;
    else
      source_is_high = map.arm_incoming(d);
    EdgeId first = source_is_high ? high_name[static_cast<std::size_t>(g)]
                                  : low_name[static_cast<std::size_t>(g)];
    EdgeId second = source_is_high ? low_name[static_cast<std::size_t>(g)]
                                   : high_name[static_cast<std::size_t>(g)];
    AxisItem item;
    item.kind = AxisItem::Kind::Twist;
    item.slot = ++slot_seq;
    item.upper = first;
    item.lower = second;
    s.axis.push_back(item);
    s.assignment[item.slot] = k.decorations.at(g);
  }
  if (slot_seq != static_cast<int>(k.decorations.size()))
    raise(ErrorKind::NotRealizable, "cut bookkeeping failed");
  validate_scheme(s);
  return s;
}

KnotoidDiagram merge_underpass_decorations(const KnotoidDiagram& k) {
  validate_knotoid(k);
  KnotoidDiagram out = k;
  const int m = static_cast<int>(k.passes.size());

  int run_start = 0;
  for (int boundary = 0; boundary <= m; ++boundary) {
    bool run_ends = (boundary == m) || (k.passes[static_cast<std::size_t>(boundary)].layer ==
                                        PassLayer::Over);
    if (!run_ends) continue;
    // Gaps run_start .. boundary form a maximal underpassing run.
    std::vector<int> decorated;
    for (int g = run_start; g <= boundary; ++g)
      if (out.decorations.count(g)) decorated.push_back(g);
    if (decorated.size() >= 2) {
      int total = 0;
      for (int g : decorated) total += out.decorations[g];
      for (int g : decorated) out.decorations.erase(g);
      if (total != 0) out.decorations[decorated.front()] = total;
    }
    run_start = boundary + 1;
  }
  return out;
}

std::string knotoid_to_text(const KnotoidDiagram& k) {
  std::ostringstream out;
  bool first = true;
  for (const auto& p : k.passes) {
    if (!first) out << " ";
    out << (p.layer == PassLayer::Over ? "O" : "U") << p.crossing << (p.sign > 0 ? "+" : "-");
    first = false;
  }
  for (const auto& [gap, value] : k.decorations) {
    if (!first) out << " ";
    out << "@" << gap << ":" << (value >= 0 ? "+" : "") << value;
    first = false;
  }
  return out.str();
}

KnotoidDiagram knotoid_from_text(const std::string& text) {
  KnotoidDiagram k;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    if (token[0] == '@') {
      std::size_t colon = token.find(':');
      if (colon == std::string::npos)
        raise(ErrorKind::MalformedKnotoid, "bad decoration '" + token + "'");
      try {
        int gap = std::stoi(token.substr(1, colon - 1));
        int value = std::stoi(token.substr(colon + 1));
        k.decorations[gap] += value;
      } catch (const std::exception&) {
        raise(ErrorKind::MalformedKnotoid, "bad decoration '" + token + "'");
      }
      continue;
    }
    if (token.size() < 3 || (token[0] != 'O' && token[0] != 'U'))
      raise(ErrorKind::MalformedKnotoid, "bad pass '" + token + "'");
    char tail = token.back();
    if (tail != '+' && tail != '-')
      raise(ErrorKind::MalformedKnotoid, "pass needs a sign: '" + token + "'");
    KnotoidPass p;
    p.layer = token[0] == 'O' ? PassLayer::Over : PassLayer::Under;
    p.sign = tail == '+' ? +1 : -1;
    try {
      std::size_t used = 0;
      p.crossing = std::stoi(token.substr(1, token.size() - 2), &used);
      if (used != token.size() - 2) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      raise(ErrorKind::MalformedKnotoid, "bad pass '" + token + "'");
    }
    k.passes.push_back(p);
  }
  validate_knotoid(k);
  return k;
}

}  // namespace symknot
