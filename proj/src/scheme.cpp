#include "symknot/scheme.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "symknot/errors.hpp"

namespace symknot {

namespace {

using nlohmann::json;

// Occurrence count of every edge name across crossings and arcs.
std::map<EdgeId, int> half_counts(const SymmetricUnionScheme& s) {
  std::map<EdgeId, int> count;
  for (const auto& c : s.half_crossings)
    for (int p = 0; p < 4; ++p) count[c[p]] += 1;
  for (const auto& a : s.half_arcs) {
    count[a.a] += 1;
    count[a.b] += 1;
  }
  return count;
}

struct UnionFind {
  std::map<EdgeId, EdgeId> parent;
  EdgeId find(EdgeId x) {
    auto it = parent.find(x);
    if (it == parent.end()) {
      parent[x] = x;
      return x;
    }
    if (it->second == x) return x;
    EdgeId root = find(it->second);
    parent[x] = root;
    return root;
  }
  void join(EdgeId a, EdgeId b) { parent[find(a)] = find(b); }
};

// Builds a diagram from crossings plus wire identifications. Wire-only
// classes become free loops; every other class must appear at exactly two
// crossing slots.
PlanarDiagram assemble(std::vector<Crossing> crossings,
                       const std::vector<std::pair<EdgeId, EdgeId>>& wires) {
  UnionFind uf;
  for (const auto& c : crossings)
    for (int p = 0; p < 4; ++p) uf.find(c[p]);
  for (const auto& [a, b] : wires) uf.join(a, b);

  std::map<EdgeId, int> slot_count;
  for (const auto& c : crossings)
    for (int p = 0; p < 4; ++p) slot_count[uf.find(c[p])] += 1;

  std::set<EdgeId> loop_roots;
  for (const auto& [name, _] : uf.parent) {
    EdgeId root = uf.find(name);
    if (slot_count.find(root) == slot_count.end()) loop_roots.insert(root);
  }
  for (const auto& [root, n] : slot_count)
    if (n != 2)
      raise(ErrorKind::InvalidScheme,
            "edge class used at " + std::to_string(n) + " crossing ends");

  PlanarDiagram d;
  d.free_loops = static_cast<int>(loop_roots.size());
  for (auto& c : crossings) {
    Crossing renamed{};
    for (int p = 0; p < 4; ++p) renamed.e[static_cast<std::size_t>(p)] = uf.find(c[p]);
    d.crossings.push_back(renamed);
  }
  return canonical_relabel(d);
}

}  // namespace

void validate_scheme(const SymmetricUnionScheme& s, bool allow_open) {
  int transversals = 0;
  std::set<int> slots;
  std::map<EdgeId, int> axis_port_count;
  for (const auto& item : s.axis) {
    if (item.kind == AxisItem::Kind::Transversal) {
      ++transversals;
      axis_port_count[item.port] += 1;
    } else {
      if (!slots.insert(item.slot).second)
        raise(ErrorKind::InvalidScheme, "slot " + std::to_string(item.slot) + " repeated");
      axis_port_count[item.upper] += 1;
      axis_port_count[item.lower] += 1;
    }
  }
  if (transversals != 2)
    raise(ErrorKind::InvalidScheme,
          "axis needs exactly two transversal items, found " + std::to_string(transversals));

  for (const auto& [port, n] : axis_port_count)
    if (n != 1)
      raise(ErrorKind::InvalidScheme, "port " + std::to_string(port) + " repeated on axis");

  for (const auto& a : s.half_arcs)
    if (a.a == a.b)
      raise(ErrorKind::InvalidScheme, "arc with identical ends " + std::to_string(a.a));

  std::map<EdgeId, int> count = half_counts(s);
  for (const auto& [e, n] : count) {
    if (n > 2)
      raise(ErrorKind::InvalidScheme, "edge " + std::to_string(e) + " used more than twice");
    bool on_axis = axis_port_count.count(e) > 0;
    if (n == 1 && !on_axis)
      raise(ErrorKind::InvalidScheme, "open end " + std::to_string(e) + " not on the axis");
    if (n == 2 && on_axis)
      raise(ErrorKind::InvalidScheme, "internal edge " + std::to_string(e) + " on the axis");
  }
  for (const auto& [port, _] : axis_port_count)
    if (count.find(port) == count.end() || count[port] != 1)
      raise(ErrorKind::InvalidScheme,
            "axis port " + std::to_string(port) + " is not an open end of the half");

  for (int open : s.open_slots) {
    if (slots.find(open) == slots.end())
      raise(ErrorKind::InvalidScheme, "open slot " + std::to_string(open) + " has no twist region");
    if (s.assignment.count(open))
      raise(ErrorKind::InvalidScheme, "open slot " + std::to_string(open) + " is also assigned");
  }
  for (const auto& [slot, _] : s.assignment)
    if (slots.find(slot) == slots.end())
      raise(ErrorKind::InvalidScheme, "assignment names unknown slot " + std::to_string(slot));
  for (int slot : slots) {
    bool open = std::find(s.open_slots.begin(), s.open_slots.end(), slot) != s.open_slots.end();
    if (!open && !s.assignment.count(slot)) {
      if (!allow_open)
        raise(ErrorKind::InvalidScheme, "slot " + std::to_string(slot) + " has no assignment");
    }
    if (open && !allow_open)
      raise(ErrorKind::InvalidScheme, "template slot " + std::to_string(slot) + " is unassigned");
  }
}

PlanarDiagram expand(const SymmetricUnionScheme& s) {
  validate_scheme(s);

  EdgeId max_id = 1;
  std::map<EdgeId, int> count = half_counts(s);
  for (const auto& [e, _] : count) max_id = std::max(max_id, e);
  const EdgeId offset = max_id;  // rho(e) = e + offset
  EdgeId fresh = 2 * max_id + 1;

  std::vector<Crossing> crossings;
  std::vector<std::pair<EdgeId, EdgeId>> wires;

  for (const auto& c : s.half_crossings) {
    crossings.push_back(c);
    // Reflection across the axis reverses the rotation, keeping over/under.
    crossings.push_back(Crossing{{c[0] + offset, c[3] + offset, c[2] + offset, c[1] + offset}});
  }
  for (const auto& a : s.half_arcs) {
    wires.emplace_back(a.a, a.b);
    wires.emplace_back(a.a + offset, a.b + offset);
  }

  for (const auto& item : s.axis) {
    if (item.kind == AxisItem::Kind::Transversal) {
      wires.emplace_back(item.port, item.port + offset);
      continue;
    }
    int t = s.assignment.at(item.slot);
    if (t == 0) {
      wires.emplace_back(item.upper, item.lower);
      wires.emplace_back(item.upper + offset, item.lower + offset);
      continue;
    }
    EdgeId x = item.upper;            // left strand, running down
    EdgeId y = item.upper + offset;   // right strand
    int steps = std::abs(t);
    for (int k = 1; k <= steps; ++k) {
      EdgeId xn = (k == steps) ? item.lower : fresh++;
      EdgeId yn = (k == steps) ? item.lower + offset : fresh++;
      if (t > 0)
        crossings.push_back(Crossing{{y, x, xn, yn}});
      else
        crossings.push_back(Crossing{{x, xn, yn, y}});
      x = xn;
      y = yn;
    }
  }
  return assemble(std::move(crossings), wires);
}

int total_crossings(const SymmetricUnionScheme& s) {
  validate_scheme(s);
  int total = 2 * static_cast<int>(s.half_crossings.size());
  for (const auto& [slot, t] : s.assignment) total += std::abs(t);
  return total;
}

PlanarDiagram partial_knot(const SymmetricUnionScheme& s) {
  validate_scheme(s, /*allow_open=*/true);

  std::vector<std::pair<EdgeId, EdgeId>> wires;
  for (const auto& a : s.half_arcs) wires.emplace_back(a.a, a.b);
  std::vector<EdgeId> transversal_ports;
  for (const auto& item : s.axis) {
    if (item.kind == AxisItem::Kind::Transversal)
      transversal_ports.push_back(item.port);
    else
      wires.emplace_back(item.upper, item.lower);
  }
  wires.emplace_back(transversal_ports[0], transversal_ports[1]);

  PlanarDiagram d = assemble(std::vector<Crossing>(s.half_crossings), wires);
  if (component_count(d) != 1)
    raise(ErrorKind::MultiComponent, "half does not close to a knot");
  return d;
}

SymmetricUnionScheme instantiate_template(const SymmetricUnionScheme& tmpl,
                                          const std::vector<int>& params) {
  validate_scheme(tmpl, /*allow_open=*/true);
  if (params.size() != tmpl.open_slots.size())
    raise(ErrorKind::ArityMismatch,
          "template has " + std::to_string(tmpl.open_slots.size()) + " open slots, got " +
              std::to_string(params.size()) + " parameters");
  SymmetricUnionScheme s = tmpl;
  for (std::size_t i = 0; i < params.size(); ++i)
    s.assignment[s.open_slots[i]] = params[i];
  s.open_slots.clear();
  validate_scheme(s);
  return s;
}

std::string scheme_to_json(const SymmetricUnionScheme& s) {
  json half = json::array();
  for (const auto& c : s.half_crossings) half.push_back({c[0], c[1], c[2], c[3]});
  for (const auto& a : s.half_arcs) half.push_back({a.a, a.b});
  json axis = json::array();
  for (const auto& item : s.axis) {
    if (item.kind == AxisItem::Kind::Transversal)
      axis.push_back({{"transversal", item.port}});
    else
      axis.push_back({{"slot", item.slot}, {"upper", item.upper}, {"lower", item.lower}});
  }
  json assignment = json::object();
  for (const auto& [slot, t] : s.assignment) assignment[std::to_string(slot)] = t;
  json out{{"half", half}, {"axis", axis}, {"assignment", assignment}};
  if (!s.open_slots.empty()) out["slots_open"] = s.open_slots;
  return out.dump(2);
}

SymmetricUnionScheme scheme_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    raise(ErrorKind::InvalidScheme, std::string("bad JSON: ") + e.what());
  }
  SymmetricUnionScheme s;
  try {
    for (const auto& entry : j.at("half")) {
      if (entry.size() == 4)
        s.half_crossings.push_back(Crossing{{entry[0].get<EdgeId>(), entry[1].get<EdgeId>(),
                                             entry[2].get<EdgeId>(), entry[3].get<EdgeId>()}});
      else if (entry.size() == 2)
        s.half_arcs.push_back(HalfArc{entry[0].get<EdgeId>(), entry[1].get<EdgeId>()});
      else
        raise(ErrorKind::InvalidScheme, "half entries are quadruples or arc pairs");
    }
    for (const auto& entry : j.at("axis")) {
      AxisItem item;
      if (entry.contains("transversal")) {
        item.kind = AxisItem::Kind::Transversal;
        item.port = entry.at("transversal").get<EdgeId>();
      } else {
        item.kind = AxisItem::Kind::Twist;
        item.slot = entry.at("slot").get<int>();
        item.upper = entry.at("upper").get<EdgeId>();
        item.lower = entry.at("lower").get<EdgeId>();
      }
      s.axis.push_back(item);
    }
    if (j.contains("assignment"))
      for (const auto& [key, value] : j.at("assignment").items())
        s.assignment[std::stoi(key)] = value.get<int>();
    if (j.contains("slots_open"))
      for (const auto& v : j.at("slots_open")) s.open_slots.push_back(v.get<int>());
  } catch (const json::exception& e) {
    raise(ErrorKind::InvalidScheme, std::string("bad scheme JSON: ") + e.what());
  } catch (const std::invalid_argument&) {
    raise(ErrorKind::InvalidScheme, "assignment keys must be integers");
  }
  validate_scheme(s, /*allow_open=*/true);
  return s;
}

SymmetricUnionScheme load_scheme_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorKind::InvalidScheme, "cannot open scheme file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return scheme_from_json(buf.str());
}

}  // namespace symknot
