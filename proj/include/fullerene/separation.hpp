#pragma once

// Pentagon separation: the least face-distance between two pentagons, where
// face-distance is the hop count between the two faces in the dual.

#include <array>
#include <limits>
#include <map>
#include <queue>
#include <utility>
#include <vector>

#include "fullerene/fullerene.hpp"

namespace fullerene {

using DistanceMatrix = std::array<std::array<int, 12>, 12>;

struct SeparationReport {
  int separation = 0;
  DistanceMatrix pair_distances{};
  /// Lexicographically smallest pair of pentagon indices (into
  /// Fullerene::pentagon_faces) at the minimum distance.
  std::pair<int, int> argmin_pair{0, 1};
};

/// Hop distances in the dual from `source` to every face.
inline std::vector<int> face_distances_from(const PlaneGraph& g, int source) {
  std::vector<int> dist(g.face_count(), -1);
  std::vector<int> queue{source};
  dist[source] = 0;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const int f = queue[qi];
    for (int d : g.faces()[f].darts) {
      const int h = g.face_of(g.reverse(d));
      if (dist[h] < 0) {
        dist[h] = dist[f] + 1;
        queue.push_back(h);
      }
    }
  }
  return dist;
}

/// Entry (i, j) is the dual distance between pentagons i and j; twelve BFS runs.
inline DistanceMatrix face_distance_matrix(const Fullerene& f) {
  DistanceMatrix m{};
  const auto& pent = f.pentagon_faces();
  for (int i = 0; i < 12; ++i) {
    const auto dist = face_distances_from(f.graph(), pent[i]);
    for (int j = 0; j < 12; ++j) m[i][j] = dist[pent[j]];
  }
  return m;
}

inline SeparationReport pentagon_separation(const Fullerene& f) {
  SeparationReport r;
  r.pair_distances = face_distance_matrix(f);
  r.separation = std::numeric_limits<int>::max();
  for (int i = 0; i < 12; ++i)
    for (int j = i + 1; j < 12; ++j)
      if (r.pair_distances[i][j] < r.separation) {
        r.separation = r.pair_distances[i][j];
        r.argmin_pair = {i, j};
      }
  return r;
}

/// Exact-separation counts; merging two histograms is addition.
class SeparationHistogram {
 public:
  void add(int separation) { ++counts_[separation]; }
  void add(const Fullerene& f) { add(pentagon_separation(f).separation); }

  SeparationHistogram& merge(const SeparationHistogram& other) {
    for (const auto& [d, c] : other.counts_) counts_[d] += c;
    return *this;
  }

  const std::map<int, long long>& counts() const noexcept { return counts_; }
  bool empty() const noexcept { return counts_.empty(); }

  /// Number of graphs with separation >= d.
  long long at_least(int d) const {
    long long total = 0;
    for (auto it = counts_.lower_bound(d); it != counts_.end(); ++it) total += it->second;
    return total;
  }

  friend bool operator==(const SeparationHistogram&, const SeparationHistogram&) = default;

 private:
  std::map<int, long long> counts_;
};

template <class Range>
SeparationHistogram separation_histogram(const Range& fullerenes) {
  SeparationHistogram h;
  for (const Fullerene& f : fullerenes) h.add(f);
  return h;
}

}  // namespace fullerene
