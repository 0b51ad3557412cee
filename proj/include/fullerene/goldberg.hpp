#pragma once

// Icosahedral fullerenes from Coxeter coordinates.
//
// The dual geodesic triangulation is built first: every icosahedron face gets
// a chart of the triangular lattice in which the face is the triangle with
// corners 0, (p, q) and (p, q) turned by 60 degrees. Lattice points in the
// closed triangle are vertices; points on a shared edge are identified through
// the affine map between the two charts. Each unit lattice triangle is owned
// by the face containing its centroid (the lower face index on ties), and
// vertices that stick out of the owning chart are carried into the neighbour's
// chart. Dualizing the triangulation gives the fullerene. The Euler and face
// checks of the plane-graph layer validate the seams.

#include <array>
#include <cmath>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "fullerene/errors.hpp"
#include "fullerene/fullerene.hpp"
#include "fullerene/plane_graph.hpp"

namespace fullerene {

struct CoxeterCoords {
  int p = 1;
  int q = 0;

  void validate() const {
    if (p < 0 || q < 0 || p + q < 1)
      throw InvalidCoxeterCoords("(" + std::to_string(p) + "," + std::to_string(q) + ")");
  }
  friend bool operator==(const CoxeterCoords&, const CoxeterCoords&) = default;
};

inline long coxeter_vertex_count(CoxeterCoords c) {
  c.validate();
  return 20L * (static_cast<long>(c.p) * c.p + static_cast<long>(c.p) * c.q +
                static_cast<long>(c.q) * c.q);
}

namespace detail {

/// Icosahedron faces as counterclockwise (seen from outside) vertex triples.
inline std::vector<std::array<int, 3>> icosahedron_faces() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<std::array<double, 3>> pts;
  for (int s1 : {-1, 1})
    for (int s2 : {-1, 1}) {
      pts.push_back({0.0, double(s1), s2 * phi});
      pts.push_back({double(s1), s2 * phi, 0.0});
      pts.push_back({s2 * phi, 0.0, double(s1)});
    }
  auto d2 = [&](int i, int j) {
    double s = 0;
    for (int k = 0; k < 3; ++k) s += (pts[i][k] - pts[j][k]) * (pts[i][k] - pts[j][k]);
    return s;
  };
  auto adjacent = [&](int i, int j) { return std::abs(d2(i, j) - 4.0) < 1e-9; };
  std::vector<std::array<int, 3>> faces;
  for (int i = 0; i < 12; ++i)
    for (int j = i + 1; j < 12; ++j)
      for (int k = j + 1; k < 12; ++k) {
        if (!adjacent(i, j) || !adjacent(j, k) || !adjacent(i, k)) continue;
        std::array<double, 3> u{}, v{}, n{};
        for (int c = 0; c < 3; ++c) {
          u[c] = pts[j][c] - pts[i][c];
          v[c] = pts[k][c] - pts[i][c];
        }
        n = {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
        const double out = n[0] * pts[i][0] + n[1] * pts[i][1] + n[2] * pts[i][2];
        faces.push_back(out > 0 ? std::array<int, 3>{i, j, k} : std::array<int, 3>{i, k, j});
      }
  return faces;
}

struct Lattice {
  long a = 0, b = 0;
  friend Lattice operator+(Lattice x, Lattice y) { return {x.a + y.a, x.b + y.b}; }
  friend Lattice operator-(Lattice x, Lattice y) { return {x.a - y.a, x.b - y.b}; }
  friend Lattice operator*(long k, Lattice x) { return {k * x.a, k * x.b}; }
  friend bool operator==(const Lattice&, const Lattice&) = default;
  friend auto operator<=>(const Lattice&, const Lattice&) = default;
};

// 60 degree counterclockwise turn in the basis e1 = (1, 0), e2 = (1/2, sqrt(3)/2).
inline Lattice rot60(Lattice x) { return {-x.b, x.a + x.b}; }
inline Lattice rot60(Lattice x, int k) {
  for (int i = 0; i < ((k % 6) + 6) % 6; ++i) x = rot60(x);
  return x;
}
// Sign matches the Euclidean cross product.
inline long cross(Lattice u, Lattice v) { return u.a * v.b - u.b * v.a; }

class GeodesicBuilder {
 public:
  explicit GeodesicBuilder(CoxeterCoords c) : faces_(icosahedron_faces()) {
    corner_[0] = {0, 0};
    corner_[1] = {c.p, c.q};
    corner_[2] = rot60(corner_[1]);
    // edge i of face f runs corner i -> corner i+1
    std::map<std::pair<int, int>, std::pair<int, int>> owner;
    for (int f = 0; f < 20; ++f)
      for (int i = 0; i < 3; ++i) owner[{faces_[f][i], faces_[f][(i + 1) % 3]}] = {f, i};
    for (int f = 0; f < 20; ++f)
      for (int i = 0; i < 3; ++i) {
        const auto [g, j] = owner.at({faces_[f][(i + 1) % 3], faces_[f][i]});
        const Lattice u = corner_[(i + 1) % 3] - corner_[i];
        const Lattice v = corner_[j] - corner_[(j + 1) % 3];
        int turn = -1;
        for (int k = 0; k < 6; ++k)
          if (rot60(u, k) == v) turn = k;
        across_[f][i] = {g, turn, i, j};
      }
  }

  RotationTable triangulation() {
    std::vector<std::vector<int>> triangles;
    for (int f = 0; f < 20; ++f) {
      long amin = 0, amax = 0, bmin = 0, bmax = 0;
      for (const auto& c : corner_) {
        amin = std::min(amin, c.a);
        amax = std::max(amax, c.a);
        bmin = std::min(bmin, c.b);
        bmax = std::max(bmax, c.b);
      }
      for (long a = amin - 1; a <= amax; ++a)
        for (long b = bmin - 1; b <= bmax; ++b) {
          const Lattice x{a, b};
          const std::array<std::array<Lattice, 3>, 2> units{{
              {x, x + Lattice{1, 0}, x + Lattice{0, 1}},
              {x + Lattice{1, 0}, x + Lattice{1, 1}, x + Lattice{0, 1}},
          }};
          for (const auto& t : units) {
            const Lattice centroid3 = t[0] + t[1] + t[2];
            int on_edge = -1;
            if (!contains(3, centroid3, &on_edge)) continue;
            if (on_edge >= 0 && across_[f][on_edge].face < f) continue;
            triangles.push_back({vertex_id(f, t[0]), vertex_id(f, t[1]), vertex_id(f, t[2])});
          }
        }
    }
    return rotation_from_faces(ids_.size(), triangles);
  }

 private:
  struct Across {
    int face;
    int turn;
    int edge;        // local edge in this face
    int other_edge;  // matching local edge in the neighbour
  };

  // Closed-triangle test for a point given in `scale`-times coordinates.
  bool contains(long scale, Lattice x, int* on_edge) const {
    *on_edge = -1;
    for (int i = 0; i < 3; ++i) {
      const Lattice p = scale * corner_[i], q = scale * corner_[(i + 1) % 3];
      const long c = cross(q - p, x - p);
      if (c < 0) return false;
      if (c == 0) *on_edge = i;
    }
    return true;
  }

  Lattice carry(int f, int i, Lattice x) const {
    const Across& e = across_[f][i];
    return corner_[(e.other_edge + 1) % 3] + rot60(x - corner_[i], e.turn);
  }

  int vertex_id(int f, Lattice x) {
    for (int hop = 0; hop < 6; ++hop) {
      int outside = -1;
      for (int i = 0; i < 3 && outside < 0; ++i)
        if (cross(corner_[(i + 1) % 3] - corner_[i], x - corner_[i]) < 0) outside = i;
      if (outside < 0) return intern(f, x);
      const int g = across_[f][outside].face;
      x = carry(f, outside, x);
      f = g;
    }
    throw InternalVerificationFailure("lattice point could not be placed on the icosahedron");
  }

  int intern(int f, Lattice x) {
    Key key{-1, f, x};
    for (int i = 0; i < 3; ++i)
      if (x == corner_[i]) key = Key{faces_[f][i], -1, {}};
    if (key.corner < 0) {
      for (int i = 0; i < 3; ++i) {
        if (cross(corner_[(i + 1) % 3] - corner_[i], x - corner_[i]) != 0) continue;
        const Key other{-1, across_[f][i].face, carry(f, i, x)};
        if (other < key) key = other;
      }
    }
    auto [it, inserted] = ids_.emplace(key, static_cast<int>(ids_.size()));
    return it->second;
  }

  struct Key {
    int corner;
    int face;
    Lattice x;
    friend auto operator<=>(const Key&, const Key&) = default;
  };

  std::vector<std::array<int, 3>> faces_;
  std::array<Lattice, 3> corner_{};
  std::array<std::array<Across, 3>, 20> across_{};
  std::map<Key, int> ids_;
};

}  // namespace detail

/// Icosahedral fullerene with Coxeter coordinates (p, q) on
/// 20(p^2 + pq + q^2) vertices. goldberg({q, p}) is the mirror image of
/// goldberg({p, q}).
inline Fullerene goldberg(CoxeterCoords c) {
  c.validate();
  detail::GeodesicBuilder builder(c);
  auto tri = PlaneGraph::from_rotation(builder.triangulation());
  return fullerene_from_dual(tri);
}

/// Smallest fullerenes whose pentagons are at least d apart: the
/// icosahedral ones with coordinates (ceil(d/2), floor(d/2)) and its mirror.
inline std::vector<Fullerene> minimal_separation_fullerene(int d) {
  if (d < 1) throw InvalidD("d = " + std::to_string(d));
  if (d == 1) return {goldberg({1, 0})};
  if (d % 2 == 0) return {goldberg({d / 2, d / 2})};
  return {goldberg({(d + 1) / 2, d / 2}), goldberg({d / 2, (d + 1) / 2})};
}

}  // namespace fullerene
