#pragma once

// Face spirals.
//
// A spiral orders the faces of a fullerene so that every face after the
// third touches the face placed just before it and the oldest face that still
// has unplaced neighbours. Working in the dual triangulation, the spiral is a
// vertex order and its code is the sequence of vertex degrees (5 or 6).
//
// `WindupState` grows a triangulation from such a degree sequence one vertex
// at a time, keeping the open boundary as a cycle of (vertex, free valency)
// pairs. `SpiralSearch` runs the inverse walk from every possible start and
// keeps the lexicographically smallest sequence.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "fullerene/errors.hpp"
#include "fullerene/fullerene.hpp"
#include "fullerene/plane_graph.hpp"

namespace fullerene {

/// Pentagon positions of a face spiral.
struct SpiralCode {
  int face_count = 0;
  /// 1-based, strictly increasing.
  std::array<int, 12> pentagon_positions{};

  static SpiralCode from_face_sizes(const std::vector<std::uint8_t>& sizes) {
    SpiralCode s;
    s.face_count = static_cast<int>(sizes.size());
    int k = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      if (sizes[i] == 5) {
        if (k == 12) throw InvalidSpiralCode("more than 12 pentagons");
        s.pentagon_positions[k++] = static_cast<int>(i) + 1;
      } else if (sizes[i] != 6) {
        throw InvalidSpiralCode("face size " + std::to_string(sizes[i]));
      }
    }
    if (k != 12) throw InvalidSpiralCode(std::to_string(k) + " pentagons");
    return s;
  }

  std::vector<std::uint8_t> face_sizes() const {
    validate();
    std::vector<std::uint8_t> sizes(face_count, 6);
    for (int p : pentagon_positions) sizes[p - 1] = 5;
    return sizes;
  }

  void validate() const {
    if (face_count < 12) throw InvalidSpiralCode("face count " + std::to_string(face_count));
    int prev = 0;
    for (int p : pentagon_positions) {
      if (p <= prev || p > face_count)
        throw InvalidSpiralCode("pentagon positions must increase within 1.." +
                                std::to_string(face_count));
      prev = p;
    }
  }

  auto operator<=>(const SpiralCode&) const = default;
};

/// Incremental spiral windup in the dual. With `TrackRotation` the
/// triangulation's rotation system is recorded as well; without it only the
/// boundary valencies are kept, which is all the generator needs to prune.
template <bool TrackRotation>
class WindupState {
 public:
  /// With `isolated_pentagons` set, placing a pentagon next to a pentagon
  /// fails; every dual edge is seen when its later endpoint is placed.
  explicit WindupState(int face_count, bool isolated_pentagons = false)
      : face_count_(face_count), isolated_(isolated_pentagons) {
    ring_.reserve(face_count);
    if constexpr (TrackRotation) rotation_.resize(face_count);
  }

  int placed() const noexcept { return placed_; }
  bool complete() const noexcept { return complete_; }
  int face_count() const noexcept { return face_count_; }

  /// Places the next dual vertex with the given degree. Returns false when
  /// the spiral cannot continue; the state is then unusable.
  bool add(int degree) {
    const int k = placed_++;
    if (k >= face_count_) return false;
    if (k < 3) {
      first_[k] = degree;
      if (k < 2) return true;
      for (int i = 0; i < 3; ++i) {
        if (first_[i] < 3) return false;
        ring_.push_back({i, first_[i] - 2, first_[i] == 5});
      }
      if (isolated_ && (ring_[0].pentagon + ring_[1].pentagon + ring_[2].pentagon) > 1) return false;
      if constexpr (TrackRotation) {
        rotation_[0] = {1, 2};
        rotation_[1] = {2, 0};
        rotation_[2] = {0, 1};
      }
      if (face_count_ == 3) return false;
      return true;
    }

    if (ring_.size() - head_ < 2) return false;
    const bool pent = degree == 5;
    int free = degree - 2;
    Open& back = ring_.back();
    Open& front = ring_[head_];
    --back.valency;
    --front.valency;
    if constexpr (TrackRotation) {
      rotation_[back.v].push_front(k);
      rotation_[front.v].push_back(k);
      rotation_[k] = {front.v, back.v};
    }
    if (back.valency < 0 || front.valency < 0 || free < 0) return false;
    if (isolated_ && pent && (back.pentagon || front.pentagon)) return false;

    for (;;) {
      if (ring_[head_].valency == 0) {
        ++head_;
        if (ring_.size() - head_ == 1) return finish(k, free);
        Open& nf = ring_[head_];
        --nf.valency;
        --free;
        if constexpr (TrackRotation) {
          rotation_[k].push_front(nf.v);
          rotation_[nf.v].push_back(k);
        }
        if (nf.valency < 0 || free < 0) return false;
        if (isolated_ && pent && nf.pentagon) return false;
      } else if (ring_.back().valency == 0) {
        ring_.pop_back();
        if (ring_.size() - head_ == 1) return finish(k, free);
        Open& nb = ring_.back();
        --nb.valency;
        --free;
        if constexpr (TrackRotation) {
          rotation_[k].push_back(nb.v);
          rotation_[nb.v].push_front(k);
        }
        if (nb.valency < 0 || free < 0) return false;
        if (isolated_ && pent && nb.pentagon) return false;
      } else {
        break;
      }
    }
    if (free == 0) return false;
    if (k == face_count_ - 1) return false;
    ring_.push_back({k, free, pent});
    return true;
  }

  /// Rotation system of the finished triangulation.
  RotationTable rotation() const {
    RotationTable out(face_count_);
    if constexpr (TrackRotation) {
      for (int v = 0; v < face_count_; ++v) out[v].assign(rotation_[v].begin(), rotation_[v].end());
    }
    return out;
  }

 private:
  struct Open {
    int v;
    int valency;
    bool pentagon;
  };

  // The boundary collapsed onto a single vertex already adjacent to k.
  bool finish(int k, int free) {
    if (ring_[head_].valency != 0 || free != 0 || k != face_count_ - 1) return false;
    ++head_;
    complete_ = true;
    return true;
  }

  int face_count_;
  bool isolated_ = false;
  int placed_ = 0;
  bool complete_ = false;
  std::array<int, 3> first_{};
  std::vector<Open> ring_;
  std::size_t head_ = 0;
  std::vector<std::deque<int>> rotation_;
};

/// Triangulation of a closed spiral code, or the index of the face at which
/// the windup fails.
inline RotationTable windup_triangulation(const std::vector<std::uint8_t>& sizes) {
  WindupState<true> w(static_cast<int>(sizes.size()));
  for (std::size_t i = 0; i < sizes.size(); ++i)
    if (!w.add(sizes[i])) throw WindupFailure(i + 1);
  if (!w.complete()) throw WindupFailure(sizes.size());
  return w.rotation();
}

inline Fullerene windup(const SpiralCode& code) {
  const auto sizes = code.face_sizes();
  auto tri = PlaneGraph::from_rotation(windup_triangulation(sizes));
  return fullerene_from_dual(tri);
}

enum class Chirality : std::uint8_t {
  /// Mirror images share a code.
  mirror_identified,
  /// Only orientation-preserving isomorphisms are factored out.
  chirality_sensitive,
};

/// Compact view of a triangulation for spiral walks: up to six neighbours
/// per vertex, counterclockwise.
class SpiralSearch {
 public:
  explicit SpiralSearch(const RotationTable& rotation) : n_(static_cast<int>(rotation.size())) {
    deg_.resize(n_);
    nbr_.assign(static_cast<std::size_t>(n_) * 6, -1);
    for (int v = 0; v < n_; ++v) {
      if (rotation[v].size() > 6 || rotation[v].size() < 3)
        throw InvalidRotation("spiral walks need dual degrees between 3 and 6");
      deg_[v] = static_cast<int>(rotation[v].size());
      std::copy(rotation[v].begin(), rotation[v].end(), nbr_.begin() + 6 * v);
    }
    placed_at_.assign(n_, -1);
    placed_nbrs_.assign(n_, 0);
    order_.resize(n_);
  }

  explicit SpiralSearch(const PlaneGraph& triangulation)
      : SpiralSearch(triangulation.rotation()) {}

  int vertex_count() const noexcept { return n_; }

  struct Result {
    std::vector<std::uint8_t> sizes;
    /// Vertex order of the winning spiral.
    std::vector<int> order;
  };

  /// Lexicographically smallest spiral over every start; both directions
  /// when mirrors are identified. Empty when no start yields a spiral.
  std::optional<Result> canonical(Chirality mode) {
    best_.clear();
    best_order_.clear();
    have_best_ = false;
    search(mode, /*stop_when_smaller=*/false);
    if (!have_best_) return std::nullopt;
    return Result{best_, best_order_};
  }

  /// True when no start gives a sequence smaller than `sizes`, i.e. the
  /// spiral is its own canonical representative.
  bool is_canonical(const std::vector<std::uint8_t>& sizes, Chirality mode) {
    best_ = sizes;
    have_best_ = true;
    found_smaller_ = false;
    search(mode, /*stop_when_smaller=*/true);
    return !found_smaller_;
  }

  /// Spiral from the start (first, i-th neighbour of first, dir). Returns the
  /// vertex order, or an empty vector when the walk gets stuck.
  std::vector<int> spiral_order(int first, int i, int dir) {
    cmp_ = false;
    const bool ok = walk(first, i, dir);
    std::vector<int> out;
    if (ok) out = order_;
    reset();
    return out;
  }

 private:
  void search(Chirality mode, bool stop_when_smaller) {
    const int dirs = mode == Chirality::mirror_identified ? 2 : 1;
    // Pentagon starts beat hexagon starts outright.
    for (int want : {5, 6}) {
      if (have_best_ && !best_.empty() && best_[0] < want) return;
      for (int v = 0; v < n_; ++v) {
        if (deg_[v] != want) continue;
        for (int i = 0; i < deg_[v]; ++i) {
          for (int d = 0; d < dirs; ++d) {
            cmp_ = have_best_;
            less_ = false;
            const bool ok = walk(v, i, d == 0 ? 1 : -1);
            if (ok && (less_ || !have_best_)) {
              if (stop_when_smaller) {
                found_smaller_ = true;
                reset();
                return;
              }
              best_.resize(n_);
              for (int s = 0; s < n_; ++s) best_[s] = static_cast<std::uint8_t>(deg_[order_[s]]);
              best_order_ = order_;
              have_best_ = true;
            }
            reset();
          }
        }
      }
    }
  }

  int nb(int v, int i) const { return nbr_[6 * v + i]; }
  int index_of(int v, int u) const {
    for (int i = 0; i < deg_[v]; ++i)
      if (nbr_[6 * v + i] == u) return i;
    return -1;
  }

  // Places v as step s; false aborts the walk (stuck or lexicographically worse).
  bool place(int v, int s) {
    if (placed_at_[v] >= 0) return false;
    if (cmp_ && !less_) {
      const int d = deg_[v];
      if (d > best_[s]) return false;
      if (d < best_[s]) less_ = true;
    }
    placed_at_[v] = s;
    order_[s] = v;
    ++count_;
    for (int i = 0; i < deg_[v]; ++i) ++placed_nbrs_[nb(v, i)];
    return true;
  }

  bool walk(int first, int i, int dir) {
    const int second = nb(first, i);
    const int k1 = deg_[first];
    const int third = nb(first, ((i + dir) % k1 + k1) % k1);
    if (!place(first, 0) || !place(second, 1) || !place(third, 2)) return false;
    int front = 0;
    for (int s = 3; s < n_; ++s) {
      while (front < s && placed_nbrs_[order_[front]] == deg_[order_[front]]) ++front;
      if (front == s) return false;
      const int f = order_[front];
      const int last = order_[s - 1];
      const int j = index_of(f, last);
      if (j < 0) return false;
      const int kf = deg_[f];
      const int next = nb(f, ((j + dir) % kf + kf) % kf);
      if (!place(next, s)) return false;
    }
    return true;
  }

  void reset() {
    for (int s = 0; s < count_; ++s) {
      const int v = order_[s];
      placed_at_[v] = -1;
      for (int i = 0; i < deg_[v]; ++i) --placed_nbrs_[nb(v, i)];
    }
    count_ = 0;
  }

  int n_;
  std::vector<int> deg_;
  std::vector<int> nbr_;
  std::vector<int> placed_at_;
  std::vector<int> placed_nbrs_;
  std::vector<int> order_;
  int count_ = 0;
  bool cmp_ = false;
  bool less_ = false;
  bool found_smaller_ = false;
  bool have_best_ = false;
  std::vector<std::uint8_t> best_;
  std::vector<int> best_order_;
};

/// Canonical (smallest, mirror-identified) spiral of f. Throws NoSpiral.
inline SpiralCode unwind(const Fullerene& f) {
  SpiralSearch search(dual_graph(f.graph()));
  auto r = search.canonical(Chirality::mirror_identified);
  if (!r) throw NoSpiral("fullerene on " + std::to_string(f.vertex_count()) + " vertices");
  return SpiralCode::from_face_sizes(r->sizes);
}

/// Isomorphism-class identifier: face count and the twelve pentagon
/// positions of the smallest spiral, each as two big-endian bytes so that
/// byte order matches numeric order.
struct CanonicalForm {
  std::vector<std::uint8_t> code;
  Chirality mode = Chirality::mirror_identified;

  static CanonicalForm from_spiral(const SpiralCode& s, Chirality mode) {
    CanonicalForm c;
    c.mode = mode;
    auto put = [&](int x) {
      c.code.push_back(static_cast<std::uint8_t>(x >> 8));
      c.code.push_back(static_cast<std::uint8_t>(x & 0xff));
    };
    put(s.face_count);
    for (int p : s.pentagon_positions) put(p);
    return c;
  }

  SpiralCode spiral() const {
    SpiralCode s;
    auto get = [&](std::size_t i) { return (code[2 * i] << 8) | code[2 * i + 1]; };
    s.face_count = get(0);
    for (std::size_t i = 0; i < 12; ++i) s.pentagon_positions[i] = get(i + 1);
    return s;
  }

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
    if (auto c = a.mode <=> b.mode; c != 0) return c;
    return a.code <=> b.code;
  }
};

/// Throws NoSpiral when f has no face spiral.
inline CanonicalForm canonical_code(const Fullerene& f, Chirality mode) {
  SpiralSearch search(dual_graph(f.graph()));
  auto r = search.canonical(mode);
  if (!r) throw NoSpiral("fullerene on " + std::to_string(f.vertex_count()) + " vertices");
  return CanonicalForm::from_spiral(SpiralCode::from_face_sizes(r->sizes), mode);
}

inline bool are_isomorphic(const Fullerene& a, const Fullerene& b, Chirality mode) {
  if (a.vertex_count() != b.vertex_count()) return false;
  return canonical_code(a, mode) == canonical_code(b, mode);
}

}  // namespace fullerene
