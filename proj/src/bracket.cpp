#include "symknot/bracket.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <vector>

#include "symknot/errors.hpp"

namespace symknot {

namespace {

LaurentPoly delta_poly() {
  LaurentPoly d(Var::A);
  d.set_coeff(2, -1);
  d.set_coeff(-2, -1);
  return d;
}

// Pairing of the open boundary edges, canonically keyed by the sorted edge
// list (shared by all states of a step) and partner indices into it.
using Pairing = std::map<EdgeId, EdgeId>;
using StateKey = std::vector<int>;
using StateMap = std::map<StateKey, LaurentPoly>;

StateKey key_of(const Pairing& match, const std::vector<EdgeId>& boundary) {
  StateKey key(boundary.size());
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    EdgeId partner = match.at(boundary[i]);
    key[i] = static_cast<int>(
        std::lower_bound(boundary.begin(), boundary.end(), partner) - boundary.begin());
  }
  return key;
}

Pairing pairing_of(const StateKey& key, const std::vector<EdgeId>& boundary) {
  Pairing match;
  for (std::size_t i = 0; i < key.size(); ++i)
    match[boundary[i]] = boundary[static_cast<std::size_t>(key[i])];
  return match;
}

struct StepResult {
  Pairing match;
  int loops = 0;
};

// Splices one crossing, smoothed with the given slot wires, into the open
// pairing. Returns the updated pairing and the number of circles closed.
StepResult splice(const Pairing& old_match, const Crossing& q, const std::array<int, 4>& wire_of) {
  StepResult r;
  r.match = old_match;

  std::array<int, 4> intlink{-1, -1, -1, -1};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (q[i] == q[j] && intlink[static_cast<std::size_t>(i)] == -1 &&
          intlink[static_cast<std::size_t>(j)] == -1) {
        intlink[static_cast<std::size_t>(i)] = j;
        intlink[static_cast<std::size_t>(j)] = i;
      }

  auto resolve = [&r](EdgeId e) {
    auto it = r.match.find(e);
    if (it == r.match.end()) return e;  // e opens here
    EdgeId far = it->second;
    r.match.erase(far);
    r.match.erase(e);
    return far;
  };

  std::array<bool, 4> visited{false, false, false, false};
  // Strand paths through the smoothed crossing start at slots whose edge
  // leaves the crossing (no internal continuation).
  for (int s = 0; s < 4; ++s) {
    if (visited[static_cast<std::size_t>(s)] || intlink[static_cast<std::size_t>(s)] != -1) continue;
    int cur = s;
    visited[static_cast<std::size_t>(cur)] = true;
    while (true) {
      int w = wire_of[static_cast<std::size_t>(cur)];
      visited[static_cast<std::size_t>(w)] = true;
      if (intlink[static_cast<std::size_t>(w)] == -1) {
        EdgeId ea = q[s], eb = q[w];
        EdgeId u = resolve(ea);
        EdgeId v = resolve(eb);
        if (u == v) {
          r.loops += 1;
        } else {
          r.match[u] = v;
          r.match[v] = u;
        }
        break;
      }
      cur = intlink[static_cast<std::size_t>(w)];
      visited[static_cast<std::size_t>(cur)] = true;
    }
  }
  // Remaining unvisited slots sit on closed cycles inside the crossing.
  for (int s = 0; s < 4; ++s) {
    if (visited[static_cast<std::size_t>(s)]) continue;
    int cur = s;
    while (!visited[static_cast<std::size_t>(cur)]) {
      visited[static_cast<std::size_t>(cur)] = true;
      int w = wire_of[static_cast<std::size_t>(cur)];
      visited[static_cast<std::size_t>(w)] = true;
      cur = intlink[static_cast<std::size_t>(w)];
    }
    r.loops += 1;
  }
  return r;
}

std::vector<int> contraction_order(const PlanarDiagram& d) {
  int n = static_cast<int>(d.crossings.size());
  std::vector<int> order;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::map<EdgeId, int> open_count;
  for (int step = 0; step < n; ++step) {
    int best = -1, best_score = -1;
    for (int c = 0; c < n; ++c) {
      if (used[static_cast<std::size_t>(c)]) continue;
      int score = 0;
      for (int p = 0; p < 4; ++p) {
        auto it = open_count.find(d.crossings[static_cast<std::size_t>(c)][p]);
        if (it != open_count.end() && it->second == 1) ++score;
      }
      if (score > best_score) {
        best = c;
        best_score = score;
      }
    }
    used[static_cast<std::size_t>(best)] = true;
    order.push_back(best);
    for (int p = 0; p < 4; ++p) open_count[d.crossings[static_cast<std::size_t>(best)][p]] += 1;
  }
  return order;
}

}  // namespace

LaurentPoly kauffman_bracket(const PlanarDiagram& d, int crossing_cap, Budget* budget) {
  const int n = static_cast<int>(d.crossings.size());
  if (n > crossing_cap)
    raise(ErrorKind::ResourceLimit,
          "diagram has " + std::to_string(n) + " crossings, cap is " + std::to_string(crossing_cap));
  if (n == 0 && d.free_loops == 0)
    raise(ErrorKind::DegenerateDiagram, "empty diagram has no bracket");

  EdgeIndex index(d);  // validates the edge-occurrence invariant
  const LaurentPoly delta = delta_poly();

  if (n == 0) return delta.pow(static_cast<unsigned>(d.free_loops - 1));

  // A-smoothing joins the slot pairs (0,1) and (2,3); B joins (1,2) and (3,0).
  const std::array<int, 4> wires_a{1, 0, 3, 2};
  const std::array<int, 4> wires_b{3, 2, 1, 0};
  const LaurentPoly mono_a = LaurentPoly::monomial(Var::A, 1, 1);
  const LaurentPoly mono_b = LaurentPoly::monomial(Var::A, -1, 1);

  std::vector<int> order = contraction_order(d);

  std::map<EdgeId, int> seen_ends;
  std::vector<EdgeId> boundary;
  StateMap states;
  states[{}] = LaurentPoly::constant(Var::A, 1);

  for (int c : order) {
    const Crossing& q = d.crossings[static_cast<std::size_t>(c)];

    std::vector<EdgeId> new_boundary;
    {
      std::map<EdgeId, int> next_seen = seen_ends;
      for (int p = 0; p < 4; ++p) next_seen[q[p]] += 1;
      for (const auto& [e, cnt] : next_seen)
        if (cnt == 1) new_boundary.push_back(e);
      seen_ends = std::move(next_seen);
    }

    StateMap next;
    for (const auto& [key, poly] : states) {
      if (budget) budget->charge(2, "kauffman_bracket");
      Pairing match = pairing_of(key, boundary);
      for (int smoothing = 0; smoothing < 2; ++smoothing) {
        StepResult step = splice(match, q, smoothing == 0 ? wires_a : wires_b);
        LaurentPoly contrib = poly * (smoothing == 0 ? mono_a : mono_b);
        for (int l = 0; l < step.loops; ++l) contrib = contrib * delta;
        StateKey new_key = key_of(step.match, new_boundary);
        auto [it, fresh] = next.emplace(std::move(new_key), contrib);
        if (!fresh) it->second += contrib;
      }
    }
    states = std::move(next);
    boundary = std::move(new_boundary);
  }

  assert(states.size() == 1 && states.begin()->first.empty());
  LaurentPoly total = states.begin()->second;
  for (int i = 0; i < d.free_loops; ++i) total = total * delta;
  auto result = total.divided_exact(delta);
  if (!result)
    raise(ErrorKind::DegenerateDiagram, "bracket normalization failed");
  return *result;
}

LaurentPoly jones(const PlanarDiagram& d, int crossing_cap, Budget* budget) {
  LaurentPoly bracket = kauffman_bracket(d, crossing_cap, budget);
  int w = d.crossings.empty() ? 0 : orient(d).writhe;
  // (-A^3)^(-w) = (-1)^w A^(-3w)
  LaurentPoly norm = bracket.shifted(-3 * w);
  if (w % 2 != 0) norm = -norm;
  // x = A^(-2)
  LaurentPoly v(Var::x);
  for (const auto& [e, c] : norm.coeffs()) {
    if (e % 2 != 0) raise(ErrorKind::DegenerateDiagram, "odd A-exponent in normalized bracket");
    v.set_coeff(-e / 2, c);
  }
  return v;
}

LaurentPoly jones_canonical(const LaurentPoly& jones_in_x) {
  LaurentPoly inv = jones_in_x.inverted_variable();
  return LaurentPoly::compare(jones_in_x, inv) <= 0 ? jones_in_x : inv;
}

}  // namespace symknot
