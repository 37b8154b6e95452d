#include "symknot/goeritz.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <queue>

#include "symknot/errors.hpp"

namespace symknot {

namespace {

// 2-colors the faces across edges; fails on rotation systems that are not
// checkerboard colorable (non-planar input).
std::vector<int> color_faces(const PlanarDiagram& d, const EdgeIndex& index,
                             const FaceStructure& fs) {
  std::vector<int> color(static_cast<std::size_t>(fs.face_count), -1);
  for (int start = 0; start < fs.face_count; ++start) {
    if (color[static_cast<std::size_t>(start)] != -1) continue;
    color[static_cast<std::size_t>(start)] = 0;
    std::queue<int> queue;
    queue.push(start);
    while (!queue.empty()) {
      int face = queue.front();
      queue.pop();
      for (int dart : fs.face_darts[static_cast<std::size_t>(face)]) {
        int c = dart / 4, p = dart % 4;
        EdgeId e = d.crossings[static_cast<std::size_t>(c)][p];
        Slot other = index.other_slot(e, Slot{c, p});
        int neighbor = fs.face_of_dart[static_cast<std::size_t>(other.crossing * 4 + other.pos)];
        if (neighbor == face)
          raise(ErrorKind::DegenerateDiagram, "face adjacent to itself; diagram is not planar");
        int want = 1 - color[static_cast<std::size_t>(face)];
        if (color[static_cast<std::size_t>(neighbor)] == -1) {
          color[static_cast<std::size_t>(neighbor)] = want;
          queue.push(neighbor);
        } else if (color[static_cast<std::size_t>(neighbor)] != want) {
          raise(ErrorKind::DegenerateDiagram, "faces are not checkerboard colorable");
        }
      }
    }
  }
  return color;
}

}  // namespace

GoeritzData build_goeritz(const PlanarDiagram& d, int which_class) {
  if (component_count(d) != 1)
    raise(ErrorKind::MultiComponent, "Goeritz form requires a single component");

  GoeritzData data;
  data.white_color = which_class;
  if (d.crossings.empty()) return data;  // crossingless unknot: empty form

  EdgeIndex index(d);
  FaceStructure fs = compute_faces(d, index);
  if (fs.face_count != static_cast<int>(d.crossings.size()) + 2)
    raise(ErrorKind::DegenerateDiagram, "face count contradicts planarity");
  data.face_color = color_faces(d, index, fs);

  // White region reindexing.
  std::vector<int> white_index(static_cast<std::size_t>(fs.face_count), -1);
  int white_count = 0;
  for (int fc = 0; fc < fs.face_count; ++fc)
    if (data.face_color[static_cast<std::size_t>(fc)] == which_class)
      white_index[static_cast<std::size_t>(fc)] = white_count++;

  const int n = static_cast<int>(d.crossings.size());
  OrientedDiagram o = orient(d);

  std::vector<std::vector<Int>> pre(static_cast<std::size_t>(white_count),
                                    std::vector<Int>(static_cast<std::size_t>(white_count), 0));
  data.mu = 0;
  for (int c = 0; c < n; ++c) {
    std::array<int, 4> corner_face{};
    for (int p = 0; p < 4; ++p)
      corner_face[static_cast<std::size_t>(p)] = fs.face_of_dart[static_cast<std::size_t>(c * 4 + p)];
    bool pair02_white =
        data.face_color[static_cast<std::size_t>(corner_face[0])] == which_class;
    // eta = +1 when the white corners are the (a,b)/(c,d) pair.
    int eta = pair02_white ? +1 : -1;
    int w1 = pair02_white ? corner_face[0] : corner_face[1];
    int w2 = pair02_white ? corner_face[2] : corner_face[3];
    int i = white_index[static_cast<std::size_t>(w1)];
    int j = white_index[static_cast<std::size_t>(w2)];
    assert(i >= 0 && j >= 0);
    if (i != j) {
      pre[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= eta;
      pre[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] -= eta;
      pre[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] += eta;
      pre[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] += eta;
    }
    // Type II iff the orientation sign agrees with eta.
    if (o.sign_of(c) == eta) data.mu += eta;
  }

  // Delete the last white region.
  int m = white_count - 1;
  data.minor.assign(static_cast<std::size_t>(m), std::vector<Int>(static_cast<std::size_t>(m), 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      data.minor[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          pre[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return data;
}

Int bareiss_determinant(std::vector<std::vector<Int>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] == 0) {
      int pivot = -1;
      for (int r = k + 1; r < n && pivot < 0; ++r)
        if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] != 0) pivot = r;
      if (pivot < 0) return 0;
      std::swap(m[static_cast<std::size_t>(k)], m[static_cast<std::size_t>(pivot)]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int num = m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] *
                      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                  m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                      m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = num / prev;
      }
    prev = m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
  }
  Int det = m[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
  return sign > 0 ? det : Int(-det);
}

int symmetric_signature(std::vector<std::vector<Int>> m) {
  const int n = static_cast<int>(m.size());
  int sig = 0;
  for (int i = 0; i < n; ++i) {
    if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] == 0) {
      int swap_j = -1, mix_j = -1;
      for (int j = i + 1; j < n; ++j) {
        if (m[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] != 0 && swap_j < 0) swap_j = j;
        if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0 && mix_j < 0) mix_j = j;
      }
      if (swap_j >= 0) {
        for (int k = 0; k < n; ++k)
          std::swap(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)],
                    m[static_cast<std::size_t>(swap_j)][static_cast<std::size_t>(k)]);
        for (int k = 0; k < n; ++k)
          std::swap(m[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)],
                    m[static_cast<std::size_t>(k)][static_cast<std::size_t>(swap_j)]);
      } else if (mix_j >= 0) {
        int j = mix_j;
        for (int k = 0; k < n; ++k)
          m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +=
              m[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
        for (int k = 0; k < n; ++k)
          m[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] +=
              m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
      } else {
        continue;  // zero row: null direction
      }
    }
    const Int p = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) {
      const Int q = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (q == 0) continue;
      for (int k = 0; k < n; ++k)
        m[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
            p * m[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] -
            q * m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
      for (int k = 0; k < n; ++k)
        m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] =
            p * m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] -
            q * m[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
    }
    sig += (p > 0) ? 1 : -1;
  }
  return sig;
}

Int determinant_int(const PlanarDiagram& d) {
  GoeritzData g = build_goeritz(d, 0);
  Int det = bareiss_determinant(g.minor);
  return det < 0 ? Int(-det) : det;
}

int determinant_checked(const PlanarDiagram& d) {
  Int det = determinant_int(d);
  if (det > 1000000000) raise(ErrorKind::ResourceLimit, "determinant out of int range");
  return static_cast<int>(det);
}

int signature_with_class(const PlanarDiagram& d, int which_class) {
  GoeritzData g = build_goeritz(d, which_class);
  return symmetric_signature(g.minor) - g.mu;
}

int signature(const PlanarDiagram& d) { return signature_with_class(d, 0); }

}  // namespace symknot
