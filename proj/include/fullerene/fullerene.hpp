#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "fullerene/errors.hpp"
#include "fullerene/plane_graph.hpp"

namespace fullerene {

/// A validated fullerene: cubic plane graph, faces of size 5 and 6, exactly
/// twelve pentagons.
class Fullerene {
 public:
  Fullerene() = default;

  const PlaneGraph& graph() const noexcept { return graph_; }
  const std::vector<Face>& faces() const noexcept { return graph_.faces(); }
  /// Face indices of the twelve pentagons, ascending.
  const std::array<int, 12>& pentagon_faces() const noexcept { return pentagons_; }

  std::size_t vertex_count() const noexcept { return graph_.vertex_count(); }
  std::size_t face_count() const noexcept { return graph_.face_count(); }
  std::size_t hexagon_count() const noexcept { return graph_.face_count() - 12; }

  friend Fullerene validate_fullerene(PlaneGraph g);

 private:
  PlaneGraph graph_;
  std::array<int, 12> pentagons_{};
};

/// Throws NotCubic, BadFaceSize or WrongPentagonCount.
inline Fullerene validate_fullerene(PlaneGraph g) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.degree(static_cast<int>(v)) != 3)
      throw NotCubic("vertex " + std::to_string(v) + " has degree " +
                     std::to_string(g.degree(static_cast<int>(v))));
  std::vector<int> pentagons;
  for (std::size_t f = 0; f < g.face_count(); ++f) {
    const std::size_t s = g.faces()[f].size();
    if (s != 5 && s != 6) throw BadFaceSize(f, s);
    if (s == 5) pentagons.push_back(static_cast<int>(f));
  }
  // Euler forces 12 pentagons on a cubic sphere with faces 5 and 6; kept as a guard.
  if (pentagons.size() != 12)
    throw WrongPentagonCount(std::to_string(pentagons.size()) + " pentagons");
  Fullerene out;
  out.graph_ = std::move(g);
  std::copy(pentagons.begin(), pentagons.end(), out.pentagons_.begin());
  return out;
}

inline Fullerene validate_fullerene(RotationTable rotation) {
  return validate_fullerene(PlaneGraph::from_rotation(std::move(rotation)));
}

/// Dual of a fullerene: a triangulation whose vertex i is face i of the
/// fullerene.
struct DualTriangulation {
  PlaneGraph graph;
  std::vector<int> degrees;
  /// The twelve degree-5 vertices, ascending.
  std::array<int, 12> low_degree_vertices{};
};

inline DualTriangulation dual(const Fullerene& f) {
  DualTriangulation t;
  t.graph = dual_graph(f.graph());
  t.degrees.resize(t.graph.vertex_count());
  for (std::size_t v = 0; v < t.degrees.size(); ++v) t.degrees[v] = t.graph.degree(static_cast<int>(v));
  t.low_degree_vertices = f.pentagon_faces();
  return t;
}

/// Fullerene whose dual is the given triangulation (degrees 5 and 6 only).
inline Fullerene fullerene_from_dual(const PlaneGraph& triangulation) {
  return validate_fullerene(dual_graph(triangulation));
}

}  // namespace fullerene
