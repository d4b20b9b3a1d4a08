#include "fig/fixtures.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>

namespace fig {

Pregeometry tetrahedron_geometry() {
  Pregeometry g;
  std::array<int, 4> v;
  for (int i = 0; i < 4; ++i) v[i] = g.add_element(1, "v" + std::to_string(i + 1));
  std::map<std::pair<int, int>, int> e;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      int id = g.add_element(2, "e" + std::to_string(i + 1) + std::to_string(j + 1));
      e[{i, j}] = id;
      g.add_incidence(id, v[i]);
      g.add_incidence(id, v[j]);
    }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k) {
        int id = g.add_element(3, "f" + std::to_string(i + 1) + std::to_string(j + 1) +
                                      std::to_string(k + 1));
        g.add_incidence(id, v[i]);
        g.add_incidence(id, v[j]);
        g.add_incidence(id, v[k]);
        g.add_incidence(id, e[{i, j}]);
        g.add_incidence(id, e[{i, k}]);
        g.add_incidence(id, e[{j, k}]);
      }
  g.validate();
  return g;
}

Pregeometry cube_geometry() {
  // Vertices are bitmasks xyz in 0..7; edges join masks at Hamming distance
  // one; faces fix one coordinate.
  Pregeometry g;
  std::array<int, 8> v;
  for (int m = 0; m < 8; ++m) v[m] = g.add_element(1, "v" + std::to_string(m));
  std::map<std::pair<int, int>, int> e;
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b) {
      int x = a ^ b;
      if (x != 1 && x != 2 && x != 4) continue;
      int id = g.add_element(2, "e" + std::to_string(a) + "_" + std::to_string(b));
      e[{a, b}] = id;
      g.add_incidence(id, v[a]);
      g.add_incidence(id, v[b]);
    }
  for (int axis = 0; axis < 3; ++axis)
    for (int val = 0; val < 2; ++val) {
      int id = g.add_element(3, "f" + std::to_string(axis) + std::to_string(val));
      std::vector<int> face;
      for (int m = 0; m < 8; ++m)
        if (((m >> axis) & 1) == val) face.push_back(m);
      for (int m : face) g.add_incidence(id, v[m]);
      for (std::size_t i = 0; i < face.size(); ++i)
        for (std::size_t j = i + 1; j < face.size(); ++j) {
          auto it = e.find({face[i], face[j]});
          if (it != e.end()) g.add_incidence(id, it->second);
        }
    }
  g.validate();
  return g;
}

Pregeometry hemicube_geometry() {
  // Quotient of the cube by the antipodal map: vertices 1..4, all six edges,
  // and three faces, one per 4-cycle of K4 (equivalently, per perfect
  // matching left out). Every vertex lies on every face.
  Pregeometry g;
  std::array<int, 4> v;
  for (int i = 0; i < 4; ++i) v[i] = g.add_element(1, "v" + std::to_string(i + 1));
  std::map<std::pair<int, int>, int> e;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      int id = g.add_element(2, "e" + std::to_string(i + 1) + std::to_string(j + 1));
      e[{i, j}] = id;
      g.add_incidence(id, v[i]);
      g.add_incidence(id, v[j]);
    }
  // Face k omits the matching that pairs vertex 0 with vertex k.
  const std::array<std::array<std::pair<int, int>, 4>, 3> cycles = {{
      {{{0, 2}, {2, 1}, {1, 3}, {3, 0}}},  // omits {01, 23}
      {{{0, 1}, {1, 2}, {2, 3}, {3, 0}}},  // omits {02, 13}
      {{{0, 1}, {1, 3}, {3, 2}, {2, 0}}},  // omits {03, 12}
  }};
  for (int k = 0; k < 3; ++k) {
    int id = g.add_element(3, "f" + std::to_string(k + 1));
    for (int i = 0; i < 4; ++i) g.add_incidence(id, v[i]);
    for (const auto& [a, b] : cycles[k]) {
      int lo = std::min(a, b), hi = std::max(a, b);
      g.add_incidence(id, e[{lo, hi}]);
    }
  }
  g.validate();
  return g;
}

Pregeometry polygon_geometry(int k) {
  Pregeometry g;
  std::vector<int> pts, lns;
  for (int i = 0; i < k; ++i) pts.push_back(g.add_element(1, "p" + std::to_string(i)));
  for (int i = 0; i < k; ++i) lns.push_back(g.add_element(2, "l" + std::to_string(i)));
  for (int i = 0; i < k; ++i) {
    g.add_incidence(lns[i], pts[i]);
    g.add_incidence(lns[i], pts[(i + 1) % k]);
  }
  g.validate();
  return g;
}

namespace {

/// Subspaces of F_2^4 as sets of nonzero vectors (bitmask arithmetic).
std::vector<std::set<int>> f2_subspaces(int dim_target) {
  std::vector<std::set<int>> out;
  std::set<std::set<int>> seen;
  // Grow spans from every subset of points greedily: enumerate all spans by
  // closing subsets; 15 nonzero vectors keeps this trivial.
  std::vector<std::set<int>> work{{}};
  for (std::size_t h = 0; h < work.size(); ++h) {
    std::set<int> span = work[h];
    int dim = 0;
    for (int sz = static_cast<int>(span.size()) + 1; sz >>= 1;) ++dim;
    if (dim == dim_target) continue;
    for (int v = 1; v < 16; ++v) {
      if (span.count(v)) continue;
      std::set<int> bigger = span;
      bigger.insert(v);
      for (int w : span) bigger.insert(v ^ w);
      if (seen.insert(bigger).second) {
        work.push_back(bigger);
        int d = 0;
        for (int sz = static_cast<int>(bigger.size()) + 1; sz >>= 1;) ++d;
        if (d == dim_target) out.push_back(bigger);
      }
    }
  }
  return out;
}

}  // namespace

Pregeometry pg22_geometry() {
  Pregeometry g;
  std::map<int, int> pt;
  for (int v = 1; v < 8; ++v) pt[v] = g.add_element(1, "p" + std::to_string(v));
  for (int a = 1; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b) {
      int c = a ^ b;
      if (c < b) continue;
      int id = g.add_element(2, "l" + std::to_string(a) + "." + std::to_string(b));
      g.add_incidence(id, pt[a]);
      g.add_incidence(id, pt[b]);
      g.add_incidence(id, pt[c]);
    }
  g.validate();
  return g;
}

Pregeometry pg32_geometry() {
  Pregeometry g;
  std::map<int, int> pts;
  for (int v = 1; v < 16; ++v) pts[v] = g.add_element(1, "p" + std::to_string(v));
  auto lines = f2_subspaces(2);
  auto planes = f2_subspaces(3);
  std::vector<int> line_ids, plane_ids;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    int id = g.add_element(2, "l" + std::to_string(i));
    line_ids.push_back(id);
    for (int v : lines[i]) g.add_incidence(id, pts[v]);
  }
  for (std::size_t i = 0; i < planes.size(); ++i) {
    int id = g.add_element(3, "pl" + std::to_string(i));
    plane_ids.push_back(id);
    for (int v : planes[i]) g.add_incidence(id, pts[v]);
    for (std::size_t j = 0; j < lines.size(); ++j) {
      bool inside = true;
      for (int v : lines[j])
        if (!planes[i].count(v)) { inside = false; break; }
      if (inside) g.add_incidence(id, line_ids[j]);
    }
  }
  g.validate();
  return g;
}

}  // namespace fig
