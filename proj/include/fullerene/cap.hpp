#pragma once

// Caps: patches with six pentagons whose boundary degrees read (23)^l (32)^m.
// Two caps with equal parameters glue into a fullerene (a capped nanotube);
// rings of l + m hexagons lengthen the tube.

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "fullerene/errors.hpp"
#include "fullerene/fullerene.hpp"
#include "fullerene/goldberg.hpp"
#include "fullerene/patch.hpp"
#include "fullerene/separation.hpp"

namespace fullerene {

struct BoundaryParams {
  int l = 0;
  int m = 0;
  /// Boundary position (index into Patch::boundary()) where the pattern starts.
  int offset = 0;
  friend bool operator==(const BoundaryParams&, const BoundaryParams&) = default;
};

/// Reads the boundary with the patch on the left. A purely alternating
/// boundary is reported as (l, 0) starting at a degree-2 vertex.
inline BoundaryParams boundary_params(const Patch& p) {
  const auto deg = p.boundary_degrees();
  const int len = static_cast<int>(deg.size());
  auto describe = [&] {
    std::string s;
    for (int d : deg) s += static_cast<char>('0' + d);
    return s;
  };
  if (len < 2 || len % 2 != 0) throw NotACapBoundary("boundary degrees " + describe());
  std::optional<BoundaryParams> found;
  for (int o = 0; o < len; ++o) {
    auto at = [&](int i) { return deg[(o + i) % len]; };
    int l = 0;
    while (l < len / 2 && at(2 * l) == 2 && at(2 * l + 1) == 3) ++l;
    bool ok = true;
    for (int i = l; i < len / 2 && ok; ++i) ok = at(2 * i) == 3 && at(2 * i + 1) == 2;
    if (!ok) continue;
    const BoundaryParams bp{l, len / 2 - l, o};
    if (bp.m == 0) return bp;
    if (!found) found = bp;
  }
  if (!found) throw NotACapBoundary("boundary degrees " + describe());
  return *found;
}

class Cap {
 public:
  /// Throws NotACap unless the patch has exactly six pentagons, and
  /// NotACapBoundary unless its boundary has the cap pattern.
  static Cap from_patch(Patch p) {
    if (p.pentagon_count() != 6)
      throw NotACap(std::to_string(p.pentagon_count()) + " pentagons (need 6)");
    Cap c;
    c.params_ = boundary_params(p);
    c.patch_ = std::move(p);
    return c;
  }

  const Patch& patch() const noexcept { return patch_; }
  const BoundaryParams& params() const noexcept { return params_; }
  int l() const noexcept { return params_.l; }
  int m() const noexcept { return params_.m; }
  std::size_t face_count() const noexcept { return patch_.face_count(); }
  std::size_t hexagon_count() const { return patch_.face_count() - 6; }

  friend bool operator==(const Cap& a, const Cap& b) { return a.patch_ == b.patch_; }

 private:
  Cap() = default;
  Patch patch_;
  BoundaryParams params_;
};

inline int pentagon_separation_patch(const Cap& c) { return pentagon_separation_patch(c.patch()); }

inline Cap add_ring(const Cap& c) {
  Cap out = Cap::from_patch(grow_ring(c.patch()));
  if (out.l() != c.l() || out.m() != c.m())
    throw InternalVerificationFailure("ring changed the boundary parameters");
  return out;
}

/// Removes the outer layer of faces. Throws PentagonOnBoundary when a
/// pentagon touches the boundary.
inline Cap strip_ring(const Cap& c) {
  const Patch& p = c.patch();
  std::vector<std::vector<int>> faces;
  std::vector<int> tags;
  for (std::size_t f = 0; f < p.face_count(); ++f) {
    if (!p.touches_boundary(static_cast<int>(f))) {
      faces.push_back(p.faces()[f]);
      tags.push_back(p.tags()[f]);
    } else if (p.faces()[f].size() == 5) {
      throw PentagonOnBoundary("pentagon face " + std::to_string(f) + " touches the boundary");
    }
  }
  if (faces.size() + static_cast<std::size_t>(c.l() + c.m()) != p.face_count())
    throw InvalidPatch("outer layer is not a single ring of hexagons");
  Cap out = Cap::from_patch(Patch::from_faces(detail::compact(std::move(faces)), std::move(tags)));
  if (out.l() != c.l() || out.m() != c.m())
    throw InvalidPatch("outer layer is not a single ring of hexagons");
  return out;
}

/// Turns an (l, 0) cap into an (l, 1) cap without bringing pentagons closer.
///
/// Hexagon rings are stripped until a pentagon P touches the boundary; a new
/// vertex on a boundary edge of P makes it a hexagon, a ring is added, and a
/// boundary hexagon of the new ring next to P loses an outer vertex, becoming
/// a pentagon. The first candidate (in face and vertex order) that yields an
/// (l, 1) cap with separation no smaller than the input's is returned.
inline Cap lemma1_transform(const Cap& c) {
  if (c.m() != 0 || c.l() == 0)
    throw NotL0Cap("cap has parameters (" + std::to_string(c.l()) + "," + std::to_string(c.m()) +
                   ")");
  const int baseline = pentagon_separation_patch(c);
  Cap cur = c;
  for (;;) {
    try {
      cur = strip_ring(cur);
    } catch (const PentagonOnBoundary&) {
      break;
    }
  }
  const Patch& p = cur.patch();
  for (int pf : p.pentagon_faces()) {
    if (!p.touches_boundary(pf)) continue;
    const auto& cyc = p.faces()[pf];
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
      if (p.face_with_edge(b, a) >= 0) continue;
      const Patch grown = grow_ring(subdivide_boundary_edge(p, a, b));
      for (int rf : grown.face_neighbors(pf)) {
        if (grown.faces()[rf].size() != 6) continue;
        for (int y : grown.faces()[rf]) {
          if (!grown.on_boundary(y) || grown.degree(y) != 2) continue;
          try {
            Cap out = Cap::from_patch(remove_boundary_vertex(grown, y));
            if (out.l() == c.l() && out.m() == 1 && pentagon_separation_patch(out) >= baseline)
              return out;
          } catch (const Error&) {
          }
        }
      }
    }
  }
  throw InternalVerificationFailure("no (l,1) rewrite found for the (" + std::to_string(c.l()) +
                                    ",0) cap");
}

enum class Side { l_side, m_side };

/// Adds l (l_side) or m (m_side) hexagons along one stretch of the boundary.
/// The input faces keep their positions, vertex ids and tags in the output.
inline Cap lemma2_extend(const Cap& c, Side side) {
  if (c.l() == 0 || c.m() == 0)
    throw ZeroParameter("cap has parameters (" + std::to_string(c.l()) + "," +
                        std::to_string(c.m()) + ")");
  const int l = c.l(), m = c.m();
  const int len = 2 * (l + m);
  auto pos = [&](int i) { return (c.params().offset + i) % len; };
  std::vector<int> spokes;
  if (side == Side::l_side) {
    for (int i = 0; i < l; ++i) spokes.push_back(pos(2 * i));
    spokes.push_back(pos(2 * l + 1));
  } else {
    spokes.push_back(pos(2 * l - 2));
    for (int j = 0; j < m; ++j) spokes.push_back(pos(2 * l + 1 + 2 * j));
  }
  Cap out = Cap::from_patch(grow_faces(c.patch(), spokes, /*closed=*/false));
  const std::size_t added = side == Side::l_side ? l : m;
  if (out.l() != l || out.m() != m || out.face_count() != c.face_count() + added ||
      pentagon_separation_patch(out) < pentagon_separation_patch(c))
    throw InternalVerificationFailure("extension broke a cap invariant");
  return out;
}

struct GlueResult {
  Fullerene fullerene;
  /// Boundary vertex j of the ringed first cap meets boundary vertex
  /// (offset - j) mod L of the second.
  int offset = 0;
  int rings = 0;
};

/// Glues b onto a after adding `rings` hexagon rings to a. Of the offsets that
/// mesh degree 2 with degree 3 the least is used. Throws BoundaryMismatch.
inline GlueResult glue_caps(const Cap& a, const Cap& b, int rings) {
  if (a.l() != b.l() || a.m() != b.m())
    throw BoundaryMismatch("(" + std::to_string(a.l()) + "," + std::to_string(a.m()) + ") vs (" +
                           std::to_string(b.l()) + "," + std::to_string(b.m()) + ")");
  if (rings < 0) throw BoundaryMismatch("negative ring count");
  Patch pa = a.patch();
  for (int r = 0; r < rings; ++r) pa = grow_ring(pa);
  const Patch& pb = b.patch();
  const auto& ba = pa.boundary();
  const auto& bb = pb.boundary();
  const int len = static_cast<int>(ba.size());
  if (static_cast<int>(bb.size()) != len) throw BoundaryMismatch("boundary lengths differ");
  int offset = -1;
  for (int o = 0; o < len && offset < 0; ++o) {
    bool ok = true;
    for (int j = 0; j < len && ok; ++j)
      ok = pa.degree(ba[j]) + pb.degree(bb[((o - j) % len + len) % len]) == 5;
    if (ok) offset = o;
  }
  if (offset < 0) throw BoundaryMismatch("no offset meshes the boundaries");

  std::vector<int> id(pb.vertex_count(), -1);
  for (int j = 0; j < len; ++j) id[bb[((offset - j) % len + len) % len]] = ba[j];
  int next = static_cast<int>(pa.vertex_count());
  for (auto& v : id)
    if (v < 0) v = next++;
  auto faces = pa.faces();
  for (const auto& f : pb.faces()) {
    std::vector<int> g;
    for (int v : f) g.push_back(id[v]);
    faces.push_back(std::move(g));
  }
  auto g = PlaneGraph::from_rotation(rotation_from_faces(static_cast<std::size_t>(next), faces));
  return {validate_fullerene(std::move(g)), offset, rings};
}

/// Closed zigzag (Petrie) walks of a cubic plane graph that visit no vertex
/// twice, each as its dart sequence; every such walk is found once, in order
/// of its least starting dart.
inline std::vector<std::vector<int>> simple_zigzag_cycles(const PlaneGraph& g) {
  const int darts = static_cast<int>(g.dart_count());
  std::vector<char> seen(2 * static_cast<std::size_t>(darts), 0);
  std::vector<std::vector<int>> out;
  for (int d0 = 0; d0 < darts; ++d0) {
    if (seen[2 * d0]) continue;
    std::vector<int> walk;
    int d = d0, t = 0;
    do {
      seen[2 * d + t] = 1;
      walk.push_back(d);
      const int r = g.reverse(d);
      d = t == 0 ? g.rotate_next(r) : g.rotate_prev(r);
      t ^= 1;
    } while (d != d0 || t != 0);
    // the reverse traversal is the same cycle
    for (int x : walk) {
      const int r = g.reverse(x);
      seen[2 * r] = seen[2 * r + 1] = 1;
    }
    std::vector<int> verts;
    for (int x : walk) verts.push_back(g.tail(x));
    std::sort(verts.begin(), verts.end());
    if (std::adjacent_find(verts.begin(), verts.end()) == verts.end()) out.push_back(std::move(walk));
  }
  return out;
}

/// The two caps a fullerene splits into along a simple zigzag cycle; the
/// first is the side containing the face on the right of the first dart.
inline std::pair<Cap, Cap> split_along(const Fullerene& f, const std::vector<int>& cycle) {
  const PlaneGraph& g = f.graph();
  std::vector<char> cut(g.dart_count(), 0);
  for (int d : cycle) cut[d] = cut[g.reverse(d)] = 1;
  std::vector<char> side(g.face_count(), 0);
  std::vector<int> queue{g.face_of(cycle.front())};
  side[queue.front()] = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi)
    for (int d : g.faces()[queue[qi]].darts) {
      if (cut[d]) continue;
      const int h = g.face_of(g.reverse(d));
      if (!side[h]) {
        side[h] = 1;
        queue.push_back(h);
      }
    }
  std::vector<int> first, second;
  for (std::size_t i = 0; i < side.size(); ++i) (side[i] ? first : second).push_back(static_cast<int>(i));
  return {Cap::from_patch(patch_from_faces(g, first)), Cap::from_patch(patch_from_faces(g, second))};
}

/// Every cap obtained by cutting f along a simple zigzag cycle, both sides.
inline std::vector<Cap> zigzag_caps(const Fullerene& f) {
  std::vector<Cap> out;
  for (const auto& cyc : simple_zigzag_cycles(f.graph())) {
    auto [a, b] = split_along(f, cyc);
    out.push_back(std::move(a));
    out.push_back(std::move(b));
  }
  return out;
}

namespace detail {

struct Pipeline {
  Cap top;        // the (9c, 1) cap
  int rings = 0;  // rings needed between two copies of `top`
  int threshold = 0;
};

inline Cap make_base_cap(int c) {
  const Fullerene g = goldberg({c, c});
  for (const auto& cyc : simple_zigzag_cycles(g.graph())) {
    if (static_cast<int>(cyc.size()) != 18 * c) continue;
    Cap cap = split_along(g, cyc).first;
    if (cap.l() == 9 * c && cap.m() == 0 && pentagon_separation_patch(cap) >= 2 * c) return cap;
  }
  throw InternalVerificationFailure("no (" + std::to_string(9 * c) + ",0) cap in goldberg(" +
                                    std::to_string(c) + "," + std::to_string(c) + ")");
}

template <class T, class Make>
const T& cached(std::map<int, T>& cache, std::mutex& mu, int key, Make make) {
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  T value = make();
  std::lock_guard lock(mu);
  return cache.emplace(key, std::move(value)).first->second;
}

inline void check_d(int d) {
  if (d < 1) throw InvalidD("d = " + std::to_string(d));
}

}  // namespace detail

/// A (9c, 0) cap with c = ceil(d/2), cut from goldberg(c, c) along a zigzag
/// cycle; its pentagons are at least 2c apart.
inline Cap base_cap(int d) {
  detail::check_d(d);
  static std::map<int, Cap> cache;
  static std::mutex mu;
  const int c = (d + 1) / 2;
  return detail::cached(cache, mu, c, [c] { return detail::make_base_cap(c); });
}

namespace detail {

inline const Pipeline& pipeline(int d) {
  static std::map<int, Pipeline> cache;
  static std::mutex mu;
  return cached(cache, mu, d, [d] {
    Cap top = lemma1_transform(base_cap(d));
    for (int r = 0; r <= 4 * d + 4; ++r) {
      GlueResult g = glue_caps(top, top, r);
      if (pentagon_separation(g.fullerene).separation >= d)
        return Pipeline{top, r, static_cast<int>(g.fullerene.hexagon_count())};
    }
    throw InternalVerificationFailure("ring search did not reach separation " + std::to_string(d));
  });
}

}  // namespace detail

/// Smallest hexagon count from which build_separated(d, h) covers every h.
/// An upper bound on the least such count, not the optimum.
inline int h_threshold(int d) {
  detail::check_d(d);
  return detail::pipeline(d).threshold;
}

/// A fullerene with exactly h hexagons and pentagon separation >= d, made of
/// two (9c, 1) caps and a tube between them. Throws BelowThreshold.
inline Fullerene build_separated(int d, int h) {
  detail::check_d(d);
  const detail::Pipeline& pl = detail::pipeline(d);
  if (h < pl.threshold)
    throw BelowThreshold("h = " + std::to_string(h) + " is below the threshold " +
                         std::to_string(pl.threshold));
  const int per_ring = pl.top.l() + pl.top.m();
  const int extra = h - pl.threshold;
  Cap a = pl.top;
  for (int i = 0; i < extra % per_ring; ++i) a = lemma2_extend(a, Side::m_side);
  Fullerene f = glue_caps(a, pl.top, pl.rings + extra / per_ring).fullerene;
  if (static_cast<int>(f.hexagon_count()) != h || pentagon_separation(f).separation < d)
    throw InternalVerificationFailure("built fullerene fails the (d, h) check");
  return f;
}

}  // namespace fullerene
