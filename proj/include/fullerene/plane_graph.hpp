#pragma once

// Plane graphs stored as rotation systems.
//
// A rotation system lists, for every vertex, its neighbours in counterclockwise
// order. Edges are split into two darts (directed edges); faces are traced with
// the rule "take the reverse dart, then its successor in the rotation". With
// counterclockwise rotations this walks every face with the face on the right.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fullerene/errors.hpp"

namespace fullerene {

using RotationTable = std::vector<std::vector<int>>;

/// Boundary walk of one face, as dart ids of the owning graph.
struct Face {
  std::vector<int> darts;

  std::size_t size() const noexcept { return darts.size(); }
};

class PlaneGraph {
 public:
  PlaneGraph() = default;

  /// Validates `rotation` and builds the graph. Throws InvalidRotation,
  /// AsymmetricAdjacency, Disconnected or NonzeroGenus.
  static PlaneGraph from_rotation(RotationTable rotation) {
    PlaneGraph g;
    g.init(std::move(rotation));
    return g;
  }

  std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t dart_count() const noexcept { return heads_.size(); }
  std::size_t edge_count() const noexcept { return heads_.size() / 2; }
  std::size_t face_count() const noexcept { return faces_.size(); }

  int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }
  std::span<const int> neighbors(int v) const {
    return {heads_.data() + offsets_[v], static_cast<std::size_t>(degree(v))};
  }

  /// Dart id of the i-th neighbour of v.
  int dart(int v, int i) const { return offsets_[v] + i; }
  int first_dart(int v) const { return offsets_[v]; }
  int tail(int d) const { return tails_[d]; }
  int head(int d) const { return heads_[d]; }
  int reverse(int d) const { return reverse_[d]; }
  /// Position of dart d inside the rotation of its tail.
  int position(int d) const { return d - offsets_[tails_[d]]; }
  /// Next dart of the rotation around tail(d), counterclockwise.
  int rotate_next(int d) const {
    const int v = tails_[d];
    const int i = d - offsets_[v] + 1;
    return offsets_[v] + (i == degree(v) ? 0 : i);
  }
  int rotate_prev(int d) const {
    const int v = tails_[d];
    const int i = d - offsets_[v];
    return offsets_[v] + (i == 0 ? degree(v) - 1 : i - 1);
  }
  /// Next dart on the face to the right of d.
  int face_next(int d) const { return rotate_next(reverse_[d]); }

  int face_of(int d) const { return face_of_[d]; }
  const std::vector<Face>& faces() const noexcept { return faces_; }

  /// Vertices of face f in walk order.
  std::vector<int> face_vertices(int f) const {
    std::vector<int> out;
    out.reserve(faces_[f].size());
    for (int d : faces_[f].darts) out.push_back(tails_[d]);
    return out;
  }

  RotationTable rotation() const {
    RotationTable out(vertex_count());
    for (std::size_t v = 0; v < out.size(); ++v) {
      auto n = neighbors(static_cast<int>(v));
      out[v].assign(n.begin(), n.end());
    }
    return out;
  }

  /// The mirror image: every rotation reversed.
  PlaneGraph mirrored() const {
    RotationTable r = rotation();
    for (auto& row : r) std::reverse(row.begin(), row.end());
    return from_rotation(std::move(r));
  }

  /// Renames vertex v to perm[v]; rotations keep their cyclic order.
  PlaneGraph relabeled(std::span<const int> perm) const {
    RotationTable r(vertex_count());
    for (std::size_t v = 0; v < r.size(); ++v) {
      auto& row = r[perm[v]];
      for (int u : neighbors(static_cast<int>(v))) row.push_back(perm[u]);
    }
    return from_rotation(std::move(r));
  }

  friend bool operator==(const PlaneGraph& a, const PlaneGraph& b) {
    return a.offsets_ == b.offsets_ && a.heads_ == b.heads_;
  }

 private:
  void init(RotationTable rotation) {
    const int n = static_cast<int>(rotation.size());
    if (n == 0) throw InvalidRotation("empty rotation table");

    offsets_.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + static_cast<int>(rotation[v].size());
    heads_.resize(offsets_[n]);
    tails_.resize(offsets_[n]);
    for (int v = 0; v < n; ++v) {
      for (std::size_t i = 0; i < rotation[v].size(); ++i) {
        const int u = rotation[v][i];
        if (u < 0 || u >= n)
          throw InvalidRotation("vertex " + std::to_string(v) + " lists invalid neighbour " +
                                std::to_string(u));
        if (u == v) throw InvalidRotation("loop at vertex " + std::to_string(v));
        heads_[offsets_[v] + i] = u;
        tails_[offsets_[v] + i] = v;
      }
    }

    // Pair the k-th occurrence of u in rot(v) with the k-th occurrence of v in rot(u).
    std::vector<std::pair<std::pair<int, int>, int>> keyed(heads_.size());
    for (std::size_t d = 0; d < heads_.size(); ++d) {
      const int a = tails_[d], b = heads_[d];
      keyed[d] = {{std::min(a, b), std::max(a, b)}, static_cast<int>(d)};
    }
    std::sort(keyed.begin(), keyed.end());
    reverse_.assign(heads_.size(), -1);
    for (std::size_t i = 0; i < keyed.size();) {
      std::size_t j = i;
      while (j < keyed.size() && keyed[j].first == keyed[i].first) ++j;
      std::vector<int> fwd, bwd;
      for (std::size_t k = i; k < j; ++k) {
        const int d = keyed[k].second;
        (tails_[d] == keyed[i].first.first ? fwd : bwd).push_back(d);
      }
      if (fwd.size() != bwd.size())
        throw AsymmetricAdjacency("edge {" + std::to_string(keyed[i].first.first) + "," +
                                  std::to_string(keyed[i].first.second) +
                                  "} listed asymmetrically");
      for (std::size_t k = 0; k < fwd.size(); ++k) {
        reverse_[fwd[k]] = bwd[k];
        reverse_[bwd[k]] = fwd[k];
      }
      i = j;
    }

    // connectivity
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int u : neighbors(v)) {
        if (!seen[u]) {
          seen[u] = 1;
          ++reached;
          stack.push_back(u);
        }
      }
    }
    if (reached != n)
      throw Disconnected(std::to_string(n - reached) + " vertices unreachable from vertex 0");

    // faces, ordered by their smallest dart
    face_of_.assign(heads_.size(), -1);
    faces_.clear();
    for (int d0 = 0; d0 < static_cast<int>(heads_.size()); ++d0) {
      if (face_of_[d0] >= 0) continue;
      Face f;
      int d = d0;
      do {
        face_of_[d] = static_cast<int>(faces_.size());
        f.darts.push_back(d);
        d = face_next(d);
      } while (d != d0);
      faces_.push_back(std::move(f));
    }

    const long euler = static_cast<long>(n) - static_cast<long>(edge_count()) +
                       static_cast<long>(faces_.size());
    if (euler != 2)
      throw NonzeroGenus("V - E + F = " + std::to_string(euler) + " (V=" + std::to_string(n) +
                         ", E=" + std::to_string(edge_count()) +
                         ", F=" + std::to_string(faces_.size()) + ")");
  }

  std::vector<int> offsets_;
  std::vector<int> heads_;
  std::vector<int> tails_;
  std::vector<int> reverse_;
  std::vector<int> face_of_;
  std::vector<Face> faces_;
};

inline PlaneGraph build_from_rotation(RotationTable rotation) {
  return PlaneGraph::from_rotation(std::move(rotation));
}

inline const std::vector<Face>& trace_faces(const PlaneGraph& g) { return g.faces(); }

/// Plane dual: one vertex per face, adjacent across every edge. The dual's
/// rotations are counterclockwise when g's are.
inline PlaneGraph dual_graph(const PlaneGraph& g) {
  RotationTable r(g.face_count());
  for (std::size_t f = 0; f < g.face_count(); ++f) {
    const auto& darts = g.faces()[f].darts;
    auto& row = r[f];
    row.reserve(darts.size());
    // Faces are walked clockwise, so the neighbours across the walk come out
    // clockwise around f as well.
    for (auto it = darts.rbegin(); it != darts.rend(); ++it) row.push_back(g.face_of(g.reverse(*it)));
  }
  return PlaneGraph::from_rotation(std::move(r));
}

/// Rotation table from a list of faces given as counterclockwise vertex
/// cycles that together close up a sphere.
inline RotationTable rotation_from_faces(std::size_t vertex_count,
                                         const std::vector<std::vector<int>>& faces) {
  // around v, a face (.., a, v, b, ..) contributes "a follows b"
  std::vector<std::vector<std::pair<int, int>>> next(vertex_count);
  for (const auto& f : faces) {
    const std::size_t k = f.size();
    for (std::size_t i = 0; i < k; ++i) {
      const int a = f[(i + k - 1) % k], v = f[i], b = f[(i + 1) % k];
      next[v].emplace_back(b, a);
    }
  }
  RotationTable r(vertex_count);
  for (std::size_t v = 0; v < vertex_count; ++v) {
    auto& nx = next[v];
    if (nx.empty()) throw InvalidRotation("vertex " + std::to_string(v) + " lies on no face");
    std::sort(nx.begin(), nx.end());
    for (std::size_t i = 1; i < nx.size(); ++i)
      if (nx[i].first == nx[i - 1].first)
        throw InvalidRotation("faces overlap around vertex " + std::to_string(v));
    auto succ = [&](int u) {
      auto it = std::lower_bound(nx.begin(), nx.end(), std::pair<int, int>{u, -1});
      if (it == nx.end() || it->first != u)
        throw InvalidRotation("faces do not close around vertex " + std::to_string(v));
      return it->second;
    };
    int u = nx.front().first;
    const int start = u;
    do {
      r[v].push_back(u);
      if (r[v].size() > nx.size())
        throw InvalidRotation("faces do not close around vertex " + std::to_string(v));
      u = succ(u);
    } while (u != start);
    if (r[v].size() != nx.size())
      throw InvalidRotation("vertex " + std::to_string(v) + " is pinched");
  }
  return r;
}

}  // namespace fullerene
