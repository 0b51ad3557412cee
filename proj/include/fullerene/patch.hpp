#pragma once

// Fullerene patches: discs of pentagons and hexagons with one outer face.
//
// A patch is stored as its inner faces, each a counterclockwise vertex cycle.
// That makes the surgery used by the cap rewrites (growing rings, inserting
// or removing boundary vertices, gluing) plain list edits; the derived data
// (degrees, boundary, inner dual) is recomputed and validated on every
// construction. The boundary is walked with the patch on the left.

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fullerene/errors.hpp"
#include "fullerene/plane_graph.hpp"

namespace fullerene {

class Patch {
 public:
  Patch() = default;

  /// Throws InvalidPatch unless the faces form a disc whose inner faces are
  /// pentagons or hexagons, with boundary degrees 2 or 3 and interior
  /// degrees 3. Vertex ids must be exactly 0..n-1. `tags` default to the face
  /// indices.
  static Patch from_faces(std::vector<std::vector<int>> faces, std::vector<int> tags = {}) {
    Patch p;
    p.faces_ = std::move(faces);
    if (tags.empty()) {
      tags.resize(p.faces_.size());
      for (std::size_t i = 0; i < tags.size(); ++i) tags[i] = static_cast<int>(i);
    }
    if (tags.size() != p.faces_.size()) throw InvalidPatch("one tag per face required");
    p.tags_ = std::move(tags);
    p.analyse();
    return p;
  }

  const std::vector<std::vector<int>>& faces() const noexcept { return faces_; }
  const std::vector<int>& tags() const noexcept { return tags_; }
  std::size_t face_count() const noexcept { return faces_.size(); }
  std::size_t vertex_count() const noexcept { return degree_.size(); }
  int degree(int v) const { return degree_[v]; }

  /// Outer face cycle, patch on the left, starting at the smallest vertex id.
  const std::vector<int>& boundary() const noexcept { return boundary_; }
  std::vector<int> boundary_degrees() const {
    std::vector<int> out;
    out.reserve(boundary_.size());
    for (int v : boundary_) out.push_back(degree_[v]);
    return out;
  }
  bool on_boundary(int v) const { return boundary_pos_[v] >= 0; }
  /// Index of v in boundary(), or -1.
  int boundary_position(int v) const { return boundary_pos_[v]; }

  std::vector<int> pentagon_faces() const {
    std::vector<int> out;
    for (std::size_t f = 0; f < faces_.size(); ++f)
      if (faces_[f].size() == 5) out.push_back(static_cast<int>(f));
    return out;
  }
  std::size_t pentagon_count() const { return pentagon_faces().size(); }
  std::size_t hexagon_count() const { return faces_.size() - pentagon_count(); }

  /// Faces sharing an edge with f (the inner dual).
  const std::vector<int>& face_neighbors(int f) const { return face_adj_[f]; }

  /// Face containing the directed edge a -> b, or -1.
  int face_with_edge(int a, int b) const {
    auto it = edge_face_.find({a, b});
    return it == edge_face_.end() ? -1 : it->second;
  }

  /// True when face f has a vertex on the boundary.
  bool touches_boundary(int f) const {
    return std::any_of(faces_[f].begin(), faces_[f].end(), [&](int v) { return on_boundary(v); });
  }

  /// The patch as a plane graph; the outer face is face `outer_face()` of it.
  PlaneGraph closed_graph() const {
    auto all = faces_;
    all.emplace_back(boundary_.rbegin(), boundary_.rend());
    return PlaneGraph::from_rotation(rotation_from_faces(vertex_count(), all));
  }

  friend bool operator==(const Patch& a, const Patch& b) {
    return a.faces_ == b.faces_ && a.tags_ == b.tags_;
  }

 private:
  void analyse() {
    if (faces_.empty()) throw InvalidPatch("no faces");
    int max_id = -1;
    for (std::size_t f = 0; f < faces_.size(); ++f) {
      const auto& face = faces_[f];
      if (face.size() != 5 && face.size() != 6)
        throw InvalidPatch("face " + std::to_string(f) + " has size " + std::to_string(face.size()));
      for (int v : face) {
        if (v < 0) throw InvalidPatch("negative vertex id");
        max_id = std::max(max_id, v);
      }
    }
    const int n = max_id + 1;

    edge_face_.clear();
    for (std::size_t f = 0; f < faces_.size(); ++f) {
      const auto& face = faces_[f];
      for (std::size_t i = 0; i < face.size(); ++i) {
        const int a = face[i], b = face[(i + 1) % face.size()];
        if (a == b) throw InvalidPatch("repeated vertex in face " + std::to_string(f));
        if (!edge_face_.emplace(std::pair{a, b}, static_cast<int>(f)).second)
          throw InvalidPatch("directed edge " + std::to_string(a) + "->" + std::to_string(b) +
                             " used twice");
      }
    }

    std::vector<std::vector<int>> nbrs(n);
    std::vector<int> boundary_next(n, -1);
    std::size_t boundary_edges = 0;
    for (const auto& [e, f] : edge_face_) {
      const auto [a, b] = e;
      nbrs[a].push_back(b);
      nbrs[b].push_back(a);
      if (!edge_face_.count({b, a})) {
        if (boundary_next[a] >= 0)
          throw InvalidPatch("boundary pinches at vertex " + std::to_string(a));
        boundary_next[a] = b;
        ++boundary_edges;
      }
    }
    degree_.assign(n, 0);
    for (int v = 0; v < n; ++v) {
      auto& nb = nbrs[v];
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
      degree_[v] = static_cast<int>(nb.size());
      if (degree_[v] == 0) throw InvalidPatch("vertex " + std::to_string(v) + " is unused");
    }

    boundary_.clear();
    boundary_pos_.assign(n, -1);
    int start = -1;
    for (int v = 0; v < n && start < 0; ++v)
      if (boundary_next[v] >= 0) start = v;
    if (start < 0) throw InvalidPatch("no boundary (closed surface)");
    for (int v = start;;) {
      if (boundary_pos_[v] >= 0) break;
      boundary_pos_[v] = static_cast<int>(boundary_.size());
      boundary_.push_back(v);
      v = boundary_next[v];
      if (v < 0) throw InvalidPatch("boundary is not closed");
    }
    if (boundary_.size() != boundary_edges || boundary_next[boundary_.back()] != start)
      throw InvalidPatch("boundary is not a single cycle");

    for (int v = 0; v < n; ++v) {
      const bool outer = boundary_pos_[v] >= 0;
      if (outer && degree_[v] != 2 && degree_[v] != 3)
        throw InvalidPatch("boundary vertex " + std::to_string(v) + " has degree " +
                           std::to_string(degree_[v]));
      if (!outer && degree_[v] != 3)
        throw InvalidPatch("interior vertex " + std::to_string(v) + " has degree " +
                           std::to_string(degree_[v]));
    }

    face_adj_.assign(faces_.size(), {});
    for (std::size_t f = 0; f < faces_.size(); ++f) {
      const auto& face = faces_[f];
      for (std::size_t i = 0; i < face.size(); ++i) {
        const int g = face_with_edge(face[(i + 1) % face.size()], face[i]);
        if (g >= 0) face_adj_[f].push_back(g);
      }
    }

    // The closed-up graph must be a sphere: catches handles and inner holes.
    (void)closed_graph();
  }

  std::vector<std::vector<int>> faces_;
  std::vector<int> tags_;
  std::vector<int> degree_;
  std::vector<int> boundary_;
  std::vector<int> boundary_pos_;
  std::vector<std::vector<int>> face_adj_;
  std::map<std::pair<int, int>, int> edge_face_;
};

/// Least inner-dual distance between two pentagons of the patch (paths may
/// not cross the outer face). Throws TooFewPentagons.
inline int pentagon_separation_patch(const Patch& p) {
  const auto pent = p.pentagon_faces();
  if (pent.size() < 2)
    throw TooFewPentagons(std::to_string(pent.size()) + " pentagon(s) in patch");
  std::vector<char> is_pent(p.face_count(), 0);
  for (int f : pent) is_pent[f] = 1;
  int best = static_cast<int>(p.face_count());
  for (int s : pent) {
    std::vector<int> dist(p.face_count(), -1);
    std::vector<int> queue{s};
    dist[s] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int f = queue[qi];
      if (dist[f] >= best) break;
      if (f != s && is_pent[f]) {
        best = std::min(best, dist[f]);
        break;
      }
      for (int g : p.face_neighbors(f))
        if (dist[g] < 0) {
          dist[g] = dist[f] + 1;
          queue.push_back(g);
        }
    }
  }
  return best;
}

/// Counterclockwise vertex cycles of a plane graph's faces (the reverse of the
/// traced walks).
inline std::vector<std::vector<int>> ccw_faces(const PlaneGraph& g) {
  std::vector<std::vector<int>> out;
  out.reserve(g.face_count());
  for (std::size_t f = 0; f < g.face_count(); ++f) {
    auto cyc = g.face_vertices(static_cast<int>(f));
    std::reverse(cyc.begin(), cyc.end());
    out.push_back(std::move(cyc));
  }
  return out;
}

/// Patch made of the given faces of a plane graph; vertices are renumbered in
/// order of first appearance.
inline Patch patch_from_faces(const PlaneGraph& g, std::vector<int> face_ids) {
  std::sort(face_ids.begin(), face_ids.end());
  const auto all = ccw_faces(g);
  std::vector<int> id(g.vertex_count(), -1);
  int next = 0;
  std::vector<std::vector<int>> faces;
  for (int f : face_ids) {
    std::vector<int> cyc;
    for (int v : all[f]) {
      if (id[v] < 0) id[v] = next++;
      cyc.push_back(id[v]);
    }
    faces.push_back(std::move(cyc));
  }
  return Patch::from_faces(std::move(faces));
}

namespace detail {

/// Renumbers vertices to 0..n-1 keeping their relative order.
inline std::vector<std::vector<int>> compact(std::vector<std::vector<int>> faces) {
  std::vector<int> used;
  for (const auto& f : faces) used.insert(used.end(), f.begin(), f.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  for (auto& f : faces)
    for (int& v : f) v = static_cast<int>(std::lower_bound(used.begin(), used.end(), v) - used.begin());
  return faces;
}

}  // namespace detail

/// Grows faces of size `face_size` on the outside of the patch.
///
/// `spokes` lists boundary positions of degree-2 vertices in boundary order.
/// For each consecutive pair (spokes[i], spokes[i+1]) one face is added: it
/// runs back along the boundary between them, out along a new edge at each
/// end, and closes with a new outer path. With `closed` the last face also
/// joins spokes.back() to spokes.front(), completing a ring.
inline Patch grow_faces(const Patch& p, const std::vector<int>& spokes, bool closed,
                        int face_size = 6) {
  const auto& bd = p.boundary();
  const int len = static_cast<int>(bd.size());
  int next = static_cast<int>(p.vertex_count());
  std::vector<int> spoke_end(spokes.size());
  for (auto& x : spoke_end) x = next++;
  auto faces = p.faces();
  auto tags = p.tags();
  int tag = tags.empty() ? 0 : *std::max_element(tags.begin(), tags.end()) + 1;
  const std::size_t count = closed ? spokes.size() : spokes.size() - 1;
  for (std::size_t s = 0; s < count; ++s) {
    const std::size_t t = (s + 1) % spokes.size();
    const int from = spokes[s], to = spokes[t];
    int k = ((to - from) % len + len) % len;
    if (k == 0) k = len;
    const int extra = face_size - 3 - k;
    if (extra < 0)
      throw InvalidPatch("boundary run of " + std::to_string(k) + " edges is too long for a " +
                         std::to_string(face_size) + "-gon");
    std::vector<int> face;
    for (int j = 0; j <= k; ++j) face.push_back(bd[((to - j) % len + len) % len]);
    face.push_back(spoke_end[s]);
    for (int j = 0; j < extra; ++j) face.push_back(next++);
    face.push_back(spoke_end[t]);
    faces.push_back(std::move(face));
    tags.push_back(tag++);
  }
  return Patch::from_faces(std::move(faces), std::move(tags));
}

/// Boundary positions of the degree-2 vertices, ascending.
inline std::vector<int> degree_two_positions(const Patch& p) {
  std::vector<int> out;
  const auto& bd = p.boundary();
  for (int i = 0; i < static_cast<int>(bd.size()); ++i)
    if (p.degree(bd[i]) == 2) out.push_back(i);
  return out;
}

/// Adds one full ring of faces around the patch.
inline Patch grow_ring(const Patch& p) {
  const auto spokes = degree_two_positions(p);
  if (spokes.empty()) throw InvalidPatch("no degree-2 boundary vertex to grow from");
  return grow_faces(p, spokes, /*closed=*/true);
}

/// Subdivides the boundary edge a -> b with a new degree-2 vertex.
inline Patch subdivide_boundary_edge(const Patch& p, int a, int b) {
  const int f = p.face_with_edge(a, b);
  if (f < 0 || p.face_with_edge(b, a) >= 0) throw InvalidPatch("not a boundary edge");
  auto faces = p.faces();
  auto& face = faces[f];
  const auto it = std::find(face.begin(), face.end(), a);
  face.insert(it + 1, static_cast<int>(p.vertex_count()));
  return Patch::from_faces(std::move(faces), p.tags());
}

/// Deletes a degree-2 boundary vertex, joining its two neighbours.
inline Patch remove_boundary_vertex(const Patch& p, int v) {
  if (!p.on_boundary(v) || p.degree(v) != 2) throw InvalidPatch("not a degree-2 boundary vertex");
  auto faces = p.faces();
  for (auto& face : faces) std::erase(face, v);
  for (auto& face : faces)
    for (int& u : face)
      if (u > v) --u;
  return Patch::from_faces(std::move(faces), p.tags());
}

/// Faces at face-distance at most k from the central pentagon of the
/// penta-hexagonal net (one pentagon, hexagons everywhere else).
inline Patch penthex_face_ball(int k);

namespace detail {

// The penta-hexagonal net's dual is a cone made of five 60-degree wedges of
// the triangular lattice. A face is the apex (the pentagon) or a point
// (wedge, a, b) with a >= 1, b >= 0; its distance from the apex is a + b.
struct ConePoint {
  int wedge = -1;  // -1 marks the apex
  int a = 0, b = 0;
  friend auto operator<=>(const ConePoint&, const ConePoint&) = default;
};

inline ConePoint cone_normalize(int s, int a, int b) {
  for (;;) {
    if (a == 0 && b == 0) return {-1, 0, 0};
    if (b < 0) {  // across the wedge's first ray into the previous wedge
      const int na = -b, nb = a + b;
      s = (s + 4) % 5;
      a = na;
      b = nb;
    } else if (a == 0) {  // on the second ray, which belongs to the next wedge
      s = (s + 1) % 5;
      a = b;
      b = 0;
    } else {
      return {s, a, b};
    }
  }
}

inline std::vector<ConePoint> cone_rotation(const ConePoint& p) {
  std::vector<ConePoint> out;
  if (p.wedge < 0) {
    for (int s = 0; s < 5; ++s) out.push_back({s, 1, 0});
    return out;
  }
  static constexpr int dirs[6][2] = {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
  for (const auto& d : dirs) out.push_back(cone_normalize(p.wedge, p.a + d[0], p.b + d[1]));
  return out;
}

inline int cone_distance(const ConePoint& p) { return p.wedge < 0 ? 0 : p.a + p.b; }

}  // namespace detail

inline Patch penthex_face_ball(int k) {
  if (k < 0) throw InvalidPatch("negative radius");
  using detail::ConePoint;
  std::vector<ConePoint> ball{{-1, 0, 0}};
  for (int s = 0; s < 5; ++s)
    for (int a = 1; a <= k; ++a)
      for (int b = 0; a + b <= k; ++b) ball.push_back({s, a, b});
  std::map<std::array<ConePoint, 3>, int> corner_id;
  std::vector<std::vector<int>> faces;
  for (const auto& p : ball) {
    const auto rot = detail::cone_rotation(p);
    std::vector<int> face;
    for (std::size_t i = 0; i < rot.size(); ++i) {
      std::array<ConePoint, 3> tri{p, rot[i], rot[(i + 1) % rot.size()]};
      std::sort(tri.begin(), tri.end());
      auto [it, _] = corner_id.emplace(tri, static_cast<int>(corner_id.size()));
      face.push_back(it->second);
    }
    faces.push_back(std::move(face));
  }
  return Patch::from_faces(std::move(faces));
}

/// Vertices within distance k (k even) of the pentagon in the
/// penta-hexagonal net: 5(k^2/4 + k + 1). Throws OddK.
inline long penthex_vertex_ball_count(int k) {
  if (k < 0 || k % 2 != 0) throw OddK("k = " + std::to_string(k));
  const long kk = k;
  return 5 * (kk * kk / 4 + kk + 1);
}

}  // namespace fullerene
