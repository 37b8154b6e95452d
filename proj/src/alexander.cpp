#include "symknot/alexander.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include <boost/multiprecision/cpp_int.hpp>

#include "symknot/errors.hpp"

namespace symknot {

namespace {

struct Passage {
  EdgeId in_edge;
  Slot at;  // the entering slot
};

// Walks the knot once, following the canonical orientation.
std::vector<Passage> walk_passages(const OrientedDiagram& o) {
  const PlanarDiagram& d = o.base;
  EdgeIndex index(d);
  EdgeId start = index.edges().front();
  Slot tail = index.slots_of(start)[0];
  Slot head = index.slots_of(start)[1];
  std::vector<Passage> walk;
  EdgeId e = start;
  for (std::size_t i = 0; i < 2 * d.crossings.size(); ++i) {
    walk.push_back({e, head});
    Slot exit{head.crossing, (head.pos + 2) % 4};
    e = d.crossings[static_cast<std::size_t>(exit.crossing)][exit.pos];
    tail = exit;
    head = index.other_slot(e, exit);
  }
  (void)tail;
  return walk;
}

LaurentPoly normalize_alexander(LaurentPoly p) {
  if (p.is_zero())
    raise(ErrorKind::DegenerateDiagram, "vanishing Alexander determinant");
  p = p.shifted(-p.min_exponent());
  int breadth = p.max_exponent();
  if (breadth % 2 != 0)
    raise(ErrorKind::DegenerateDiagram, "Alexander polynomial with odd breadth");
  p = p.shifted(-breadth / 2);
  if (p != p.inverted_variable())
    raise(ErrorKind::DegenerateDiagram, "Alexander polynomial is not symmetric");
  Int at_one = p.evaluate(1);
  if (at_one != 1 && at_one != -1)
    raise(ErrorKind::DegenerateDiagram, "Alexander value at 1 is not a unit");
  if (at_one < 0) p = -p;
  return p;
}

}  // namespace

LaurentPoly bareiss_determinant_poly(std::vector<std::vector<LaurentPoly>> m, Var var,
                                     Budget* budget) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return LaurentPoly::constant(var, 1);
  LaurentPoly prev = LaurentPoly::constant(var, 1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)].is_zero()) {
      int pivot = -1;
      for (int r = k + 1; r < n && pivot < 0; ++r)
        if (!m[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)].is_zero()) pivot = r;
      if (pivot < 0) return LaurentPoly::zero(var);
      std::swap(m[static_cast<std::size_t>(k)], m[static_cast<std::size_t>(pivot)]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        if (budget) budget->charge(1, "alexander determinant");
        LaurentPoly num = m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] *
                              m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                          m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                              m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        auto q = num.divided_exact(prev);
        assert(q.has_value());
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(*q);
      }
    prev = m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
  }
  LaurentPoly det = m[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
  return sign > 0 ? det : -det;
}

LaurentPoly alexander(const OrientedDiagram& o, Budget* budget) {
  const PlanarDiagram& d = o.base;
  if (component_count(d) != 1)
    raise(ErrorKind::MultiComponent, "Alexander polynomial requires a knot");
  const int n = static_cast<int>(d.crossings.size());
  if (n == 0) return LaurentPoly::constant(Var::t, 1);

  // Arcs: maximal over-strand runs. A new arc starts after each underpass.
  std::vector<Passage> walk = walk_passages(o);
  int first_under = -1;
  for (int i = 0; i < static_cast<int>(walk.size()); ++i)
    if (walk[static_cast<std::size_t>(i)].at.pos % 2 == 0) {
      first_under = i;
      break;
    }
  assert(first_under >= 0);

  std::map<EdgeId, int> arc_of;
  int arc = 0;
  const int m = static_cast<int>(walk.size());
  for (int k = 1; k <= m; ++k) {
    const Passage& p = walk[static_cast<std::size_t>((first_under + k) % m)];
    arc_of[p.in_edge] = arc;
    if (p.at.pos % 2 == 0) ++arc;  // underpass ends the arc
  }
  assert(arc == n);

  std::vector<std::vector<LaurentPoly>> rows(
      static_cast<std::size_t>(n),
      std::vector<LaurentPoly>(static_cast<std::size_t>(n), LaurentPoly::zero(Var::t)));
  const LaurentPoly one = LaurentPoly::constant(Var::t, 1);
  const LaurentPoly tee = LaurentPoly::monomial(Var::t, 1, 1);

  for (int c = 0; c < n; ++c) {
    const Crossing& q = d.crossings[static_cast<std::size_t>(c)];
    int under_in = o.edge_forward_into(q[0], Slot{c, 0}) ? 0 : 2;
    int over_in = o.edge_forward_into(q[1], Slot{c, 1}) ? 1 : 3;
    int arc_over = arc_of.at(q[over_in]);
    int arc_in = arc_of.at(q[under_in]);
    int arc_out = arc_of.at(q[(under_in + 2) % 4]);
    auto& row = rows[static_cast<std::size_t>(c)];
    if (o.sign_of(c) > 0) {
      row[static_cast<std::size_t>(arc_over)] += one - tee;
      row[static_cast<std::size_t>(arc_in)] += tee;
      row[static_cast<std::size_t>(arc_out)] -= one;
    } else {
      row[static_cast<std::size_t>(arc_over)] += tee - one;
      row[static_cast<std::size_t>(arc_in)] += one;
      row[static_cast<std::size_t>(arc_out)] -= tee;
    }
  }

  // Drop the last relation and the last generator.
  std::vector<std::vector<LaurentPoly>> minor;
  for (int i = 0; i < n - 1; ++i) {
    std::vector<LaurentPoly> r;
    for (int j = 0; j < n - 1; ++j)
      r.push_back(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    minor.push_back(std::move(r));
  }
  return normalize_alexander(bareiss_determinant_poly(std::move(minor), Var::t, budget));
}

LaurentPoly alexander(const PlanarDiagram& d, Budget* budget) {
  return alexander(orient(d), budget);
}

namespace {

struct FoxMilnorSearch {
  int g = 0;
  Int bound;
  std::vector<Int> target;  // q_0 .. q_2g of t^g * p
  std::vector<Int> c;       // coefficients of f
  Budget* budget = nullptr;
  std::uint64_t local_nodes = 0;

  bool charge() {
    if (budget) budget->charge(1, "fox_milnor");
    if (++local_nodes > 200000000ULL)
      raise(ErrorKind::ResourceLimit, "fox_milnor search exceeded node limit");
    return true;
  }

  Int partial_q(int k, int lo, int hi) const {
    // sum of c_i * c_{g-k+i} for i in [lo, hi]
    Int sum = 0;
    for (int i = lo; i <= hi; ++i)
      sum += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(g - k + i)];
    return sum;
  }

  bool verify_from(int k0) const {
    for (int k = k0; k <= g; ++k) {
      Int sum = 0;
      for (int i = 0; i <= k; ++i)
        sum += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(g - k + i)];
      if (sum != target[static_cast<std::size_t>(k)]) return false;
    }
    return true;
  }

  bool descend(int k) {
    charge();
    if (k > g - k) return verify_from(k);
    if (k == g - k) {
      // Middle coefficient: linear unless c_0 + c_g vanishes.
      Int mid = partial_q(k, 1, k - 1);
      Int rest = target[static_cast<std::size_t>(k)] - mid;
      Int denom = c[0] + c[static_cast<std::size_t>(g)];
      if (denom != 0) {
        if (rest % denom != 0) return false;
        Int v = rest / denom;
        if (v < -bound || v > bound) return false;
        c[static_cast<std::size_t>(k)] = v;
        return verify_from(k + 1);
      }
      if (rest != 0) return false;
      for (Int v = -bound; v <= bound; ++v) {
        charge();
        c[static_cast<std::size_t>(k)] = v;
        if (verify_from(k + 1)) return true;
      }
      return false;
    }
    // Two unknowns c_k, c_{g-k}: q_k = c_0*c_{g-k} + c_k*c_g + middle.
    Int mid = partial_q(k, 1, k - 1);
    for (Int v = -bound; v <= bound; ++v) {
      charge();
      Int num = target[static_cast<std::size_t>(k)] - mid - v * c[static_cast<std::size_t>(g)];
      if (num % c[0] != 0) continue;
      Int w = num / c[0];
      if (w < -bound || w > bound) continue;
      c[static_cast<std::size_t>(k)] = v;
      c[static_cast<std::size_t>(g - k)] = w;
      if (descend(k + 1)) return true;
    }
    return false;
  }
};

}  // namespace

std::optional<LaurentPoly> fox_milnor(const LaurentPoly& p, Budget* budget) {
  if (p.is_zero()) return std::nullopt;
  // The factorization is up to units ±t^k; f(1)^2 = 1 forces the sign.
  Int at_one = p.evaluate(1);
  LaurentPoly q = p;
  if (at_one == -1)
    q = -p;
  else if (at_one != 1)
    return std::nullopt;
  if (q.is_one()) return LaurentPoly::constant(Var::t, 1);

  int breadth = q.breadth();
  if (breadth % 2 != 0) return std::nullopt;
  // Accept any unit-shifted palindrome by re-centering about exponent 0.
  q = q.shifted(-(q.min_exponent() + q.max_exponent()) / 2);
  if (q != q.inverted_variable()) return std::nullopt;
  int g = breadth / 2;

  // q(-1) = f(-1)^2 must be a non-negative perfect square.
  Int at_minus_one = q.evaluate(-1);
  if (at_minus_one < 0) return std::nullopt;
  Int root = boost::multiprecision::sqrt(at_minus_one);
  if (root * root != at_minus_one) return std::nullopt;

  FoxMilnorSearch s;
  s.g = g;
  s.budget = budget;
  s.bound = 1;
  for (const auto& [e, coef] : q.coeffs()) s.bound += coef < 0 ? Int(-coef) : coef;
  s.target.resize(static_cast<std::size_t>(2 * g) + 1);
  int base = q.min_exponent();
  for (int k = 0; k <= 2 * g; ++k) s.target[static_cast<std::size_t>(k)] = q.coeff(base + k);
  s.c.assign(static_cast<std::size_t>(g) + 1, 0);

  Int q0 = s.target[0];
  assert(q0 != 0);
  Int aq0 = q0 < 0 ? Int(-q0) : q0;
  for (Int c0 = 1; c0 <= aq0 && c0 <= s.bound; ++c0) {
    if (aq0 % c0 != 0) continue;
    Int cg = q0 / c0;
    if (cg < -s.bound || cg > s.bound) continue;
    s.c[0] = c0;
    s.c[static_cast<std::size_t>(g)] = cg;
    if (s.descend(1)) {
      LaurentPoly f(Var::t);
      for (int i = 0; i <= g; ++i) f.set_coeff(i, s.c[static_cast<std::size_t>(i)]);
      // Safety: the product must reproduce q exactly.
      if (f * f.inverted_variable() == q) return f;
      continue;
    }
  }
  return std::nullopt;
}

}  // namespace symknot
