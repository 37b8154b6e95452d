#include "symknot/dt_code.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

#include "symknot/errors.hpp"

namespace symknot {

DtCode parse_dt_text(const std::string& text) {
  DtCode code;
  std::string body = text;
  for (char& ch : body)
    if (ch == ',') ch = ' ';
  std::istringstream in(body);
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      int v = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      code.labels.push_back(v);
    } catch (const std::exception&) {
      raise(ErrorKind::MalformedToken, "bad DT entry '" + token + "'");
    }
  }
  return code;
}

std::string print_dt(const DtCode& code) {
  std::ostringstream out;
  for (std::size_t i = 0; i < code.labels.size(); ++i) {
    if (i) out << ",";
    out << code.labels[i];
  }
  return out.str();
}

// Dowker-Thistlethwaite's sign-resolution algorithm. Walks loops of the
// pairing, propagating an inside/outside function e and deducing the
// embedding sign f of each label; inconsistencies mean the involution has
// no planar realization.
bool dt_embedding_signs(const std::vector<int>& partner, std::vector<int>& f) {
  const int np = static_cast<int>(partner.size()) - 1;  // labels 1..np
  const int n = np - 1;
  const auto& a = partner;
  std::vector<int> e(static_cast<std::size_t>(np) + 1, 0);
  std::vector<int> g(static_cast<std::size_t>(np) + 1, 0);
  std::vector<int> h(static_cast<std::size_t>(np) + 1, 0);
  f.assign(static_cast<std::size_t>(np) + 1, 0);

  f[1] = 1;
  f[static_cast<std::size_t>(a[1])] = -1;
  h[1] = 1;
  h[static_cast<std::size_t>(a[1])] = 1;

  // Each component of the interlacement graph is seeded separately; the
  // propagation below determines f on one component per seed.
  int t = 1;
  while (t != 0) {
    e[static_cast<std::size_t>(t)] = 1;
    for (int i = t + 1; i <= np; ++i)
      e[static_cast<std::size_t>(i)] =
          (a[static_cast<std::size_t>(i)] >= t && a[static_cast<std::size_t>(i)] <= a[static_cast<std::size_t>(t)])
              ? -e[static_cast<std::size_t>(i - 1)]
              : e[static_cast<std::size_t>(i - 1)];
    for (int i = t - 1; i >= 1; --i)
      e[static_cast<std::size_t>(i)] =
          (a[static_cast<std::size_t>(i + 1)] >= t && a[static_cast<std::size_t>(i + 1)] <= a[static_cast<std::size_t>(t)])
              ? -e[static_cast<std::size_t>(i + 1)]
              : e[static_cast<std::size_t>(i + 1)];

    for (int i = 1; i <= t - 1; ++i) g[static_cast<std::size_t>(i)] = 1;
    for (int i = a[static_cast<std::size_t>(t)] + 1; i <= np; ++i) g[static_cast<std::size_t>(i)] = 1;

    int s = 0;
    for (int i = 1; i <= np && s == 0; ++i)
      if (g[static_cast<std::size_t>(i)] == 1) s = i;

    while (s != 0) {
      g[static_cast<std::size_t>(s)] = 0;
      g[static_cast<std::size_t>(a[static_cast<std::size_t>(s)])] = 0;
      int as = a[static_cast<std::size_t>(s)];
      if (as < t || as > a[static_cast<std::size_t>(t)]) {
        if (e[static_cast<std::size_t>(s)] * e[static_cast<std::size_t>(as)] == -1) return false;
      } else {
        if (f[static_cast<std::size_t>(s)] != 0) {
          if (e[static_cast<std::size_t>(s)] * e[static_cast<std::size_t>(as)] * f[static_cast<std::size_t>(t)] !=
              f[static_cast<std::size_t>(s)])
            return false;
        } else {
          f[static_cast<std::size_t>(s)] =
              e[static_cast<std::size_t>(s)] * e[static_cast<std::size_t>(as)] * f[static_cast<std::size_t>(t)];
          f[static_cast<std::size_t>(as)] = -f[static_cast<std::size_t>(s)];
          bool twist =
              (s == 1 && std::abs(a[static_cast<std::size_t>(np)] - a[1]) == 1) ||
              (s != 1 && (std::abs(a[static_cast<std::size_t>(s - 1)] - a[static_cast<std::size_t>(s)]) == 1 ||
                          std::abs(a[static_cast<std::size_t>(s - 1)] - a[static_cast<std::size_t>(s)]) == n));
          if (!twist) {
            h[static_cast<std::size_t>(s)] = 1;
            h[static_cast<std::size_t>(as)] = 1;
          }
        }
      }
      s = 0;
      for (int i = 1; i <= np && s == 0; ++i)
        if (g[static_cast<std::size_t>(i)] == 1) s = i;
    }

    h[static_cast<std::size_t>(t)] = 0;
    h[static_cast<std::size_t>(a[static_cast<std::size_t>(t)])] = 0;
    t = 0;
    for (int i = 1; i <= np && t == 0; ++i)
      if (h[static_cast<std::size_t>(i)] == 1) t = i;
    if (t == 0) {
      // Seed the next interlacement component, if any labels remain.
      for (int i = 1; i <= np && t == 0; ++i)
        if (f[static_cast<std::size_t>(i)] == 0) {
          f[static_cast<std::size_t>(i)] = 1;
          f[static_cast<std::size_t>(a[static_cast<std::size_t>(i)])] = -1;
          t = i;
        }
    }
  }

  for (int i = 1; i <= np; ++i)
    if (f[static_cast<std::size_t>(i)] == 0) return false;
  return true;
}

PlanarDiagram parse_dt(const DtCode& code) {
  const int n = static_cast<int>(code.size());
  if (n < 1) raise(ErrorKind::BadPermutation, "empty DT code");
  const int np = 2 * n;

  std::vector<int> partner(static_cast<std::size_t>(np) + 1, 0);
  std::vector<bool> seen(static_cast<std::size_t>(np) + 1, false);
  std::vector<bool> over(static_cast<std::size_t>(np) + 1, false);
  for (int i = 0; i < n; ++i) {
    int v = code.labels[static_cast<std::size_t>(i)];
    int q = std::abs(v);
    if (q < 2 || q > np || q % 2 != 0)
      raise(ErrorKind::BadPermutation, "entry " + std::to_string(v) + " is not an even label");
    if (seen[static_cast<std::size_t>(q)])
      raise(ErrorKind::BadPermutation, "label " + std::to_string(q) + " repeated");
    seen[static_cast<std::size_t>(q)] = true;
    int p = 2 * i + 1;
    partner[static_cast<std::size_t>(p)] = q;
    partner[static_cast<std::size_t>(q)] = p;
    over[static_cast<std::size_t>(q)] = (v > 0);   // even moment passes over iff positive
    over[static_cast<std::size_t>(p)] = (v <= 0);
  }

  std::vector<int> f;
  if (!dt_embedding_signs(partner, f))
    raise(ErrorKind::NotRealizable, "DT code admits no planar embedding");

  // Edge t joins passages t and t+1; passage t enters on edge t-1 (edge 0 is
  // edge 2n) and leaves on edge t.
  auto edge = [np](int t) { return t == 0 ? np : t; };
  PlanarDiagram d;
  for (int i = 0; i < n; ++i) {
    int p = 2 * i + 1;
    int q = partner[static_cast<std::size_t>(p)];
    int u = over[static_cast<std::size_t>(p)] ? q : p;
    int v = over[static_cast<std::size_t>(p)] ? p : q;
    if (f[static_cast<std::size_t>(u)] > 0)
      d.crossings.push_back(Crossing{{edge(u - 1), edge(v), edge(u), edge(v - 1)}});
    else
      d.crossings.push_back(Crossing{{edge(u - 1), edge(v - 1), edge(u), edge(v)}});
  }

  if (!is_planar_connected(d))
    raise(ErrorKind::NotRealizable, "DT embedding failed the face count check");
  return canonical_relabel(d);
}

DtCode to_dt(const PlanarDiagram& d) {
  if (d.crossings.empty()) {
    if (component_count(d) != 1) raise(ErrorKind::MultiComponent, "DT codes describe knots");
    return DtCode{};
  }
  if (component_count(d) != 1) raise(ErrorKind::MultiComponent, "DT codes describe knots");

  OrientedDiagram o = orient(d);
  const int n = static_cast<int>(d.crossings.size());

  // Passage times along the canonical traversal.
  std::map<int, std::pair<int, int>> times;  // crossing -> (first time, second time)
  std::vector<bool> over_at(static_cast<std::size_t>(2 * n) + 1, false);

  EdgeIndex index(d);
  EdgeId start = index.edges().front();
  EdgeId e = start;
  Slot tail = index.slots_of(start)[0];
  Slot head = index.slots_of(start)[1];
  // The canonical orientation starts the least edge at its first occurrence,
  // matching orient(); re-walk to number the passages.
  for (int t = 1; t <= 2 * n; ++t) {
    auto [it, fresh] = times.emplace(head.crossing, std::make_pair(t, 0));
    if (!fresh) it->second.second = t;
    over_at[static_cast<std::size_t>(t)] = (head.pos % 2 == 1);
    Slot exit{head.crossing, (head.pos + 2) % 4};
    e = d.crossings[static_cast<std::size_t>(exit.crossing)][exit.pos];
    tail = exit;
    head = index.other_slot(e, exit);
  }
  (void)tail;

  DtCode code;
  code.labels.assign(static_cast<std::size_t>(n), 0);
  for (const auto& [c, tt] : times) {
    auto [t1, t2] = tt;
    if (t2 == 0 || (t1 + t2) % 2 == 0)
      raise(ErrorKind::DegenerateDiagram, "crossing passages do not alternate parity");
    int p = (t1 % 2 == 1) ? t1 : t2;  // odd label
    int q = (t1 % 2 == 1) ? t2 : t1;
    code.labels[static_cast<std::size_t>((p - 1) / 2)] = over_at[static_cast<std::size_t>(q)] ? q : -q;
  }
  return code;
}

}  // namespace symknot
