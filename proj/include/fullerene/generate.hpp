#pragma once

// Exhaustive isomer generation by face spirals.
//
// Every fullerene below 380 vertices has a face spiral, so listing all
// windable placements of twelve pentagons among n/2 + 2 faces and keeping
// the placements that equal their own canonical spiral yields each
// mirror-identified isomorphism class exactly once. The search is a
// depth-first walk over face sizes that winds the spiral up incrementally
// and abandons a prefix as soon as the windup gets stuck.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "fullerene/errors.hpp"
#include "fullerene/fullerene.hpp"
#include "fullerene/separation.hpp"
#include "fullerene/spiral.hpp"

namespace fullerene {

/// Largest vertex count for which spiral generation is complete.
inline constexpr int kSpiralCompleteBound = 378;

/// Worker count: FULLERENE_WORKERS when set to a positive integer,
/// otherwise the hardware concurrency.
inline unsigned default_workers() {
  if (const char* env = std::getenv("FULLERENE_WORKERS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

struct GeneratedIsomer {
  SpiralCode spiral;  // canonical, mirror-identified
  Fullerene fullerene;
  int separation = 0;
};

namespace detail {

class SpiralEnumerator {
 public:
  SpiralEnumerator(int faces, bool isolated)
      : faces_(faces),
        isolated_(isolated),
        levels_(faces + 1, WindupState<false>(faces, isolated)),
        sizes_(faces, 6) {}

  /// Explores every code whose first two pentagons sit at faces p1 < p2
  /// (0-based), appending canonical codes to `out`.
  void run(int p1, int p2, std::vector<std::vector<std::uint8_t>>& out) {
    WindupState<false> st(faces_, isolated_);
    for (int i = 0; i <= p2; ++i) {
      sizes_[i] = (i == p1 || i == p2) ? 5 : 6;
      if (!st.add(sizes_[i])) return;
    }
    const int hexes_used = p2 + 1 - 2;
    if (hexes_used > faces_ - 12) return;
    levels_[p2 + 1] = st;
    out_ = &out;
    dfs(p2 + 1, 10);
  }

 private:
  void dfs(int i, int pent_left) {
    if (i == faces_) {
      if (pent_left == 0 && levels_[i].complete()) accept();
      return;
    }
    const int left = faces_ - i;
    for (std::uint8_t s : {std::uint8_t{5}, std::uint8_t{6}}) {
      if (s == 5 && pent_left == 0) continue;
      if (s == 6 && left == pent_left) continue;
      levels_[i + 1] = levels_[i];
      if (!levels_[i + 1].add(s)) continue;
      sizes_[i] = s;
      dfs(i + 1, pent_left - (s == 5));
    }
  }

  void accept() {
    SpiralSearch search(windup_triangulation(sizes_));
    if (search.is_canonical(sizes_, Chirality::mirror_identified)) out_->push_back(sizes_);
  }

  int faces_;
  bool isolated_;
  std::vector<WindupState<false>> levels_;
  std::vector<std::uint8_t> sizes_;
  std::vector<std::vector<std::uint8_t>>* out_ = nullptr;
};

}  // namespace detail

inline void check_generation_bound(int n) {
  if (n < 20 || n % 2 != 0 || n > kSpiralCompleteBound)
    throw UnsupportedN("vertex count " + std::to_string(n) + " (need even n in [20, " +
                       std::to_string(kSpiralCompleteBound) + "])");
}

/// Canonical spirals of every fullerene isomer on n vertices, ascending.
/// With `isolated_pentagons` only isomers without adjacent pentagons are
/// listed (the windup rejects such adjacencies as they appear).
/// The search is split by the positions of the first two pentagons; the
/// merged result is sorted, so it does not depend on `workers`.
inline std::vector<SpiralCode> generate_spirals(int n, bool isolated_pentagons = false,
                                                unsigned workers = default_workers()) {
  check_generation_bound(n);
  const int faces = n / 2 + 2;
  std::vector<std::pair<int, int>> tasks;
  for (int p1 = 0; p1 < faces; ++p1)
    for (int p2 = p1 + 1; p2 < faces; ++p2) tasks.emplace_back(p1, p2);

  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::vector<std::vector<std::uint8_t>> found;
  auto work = [&] {
    detail::SpiralEnumerator e(faces, isolated_pentagons);
    std::vector<std::vector<std::uint8_t>> local;
    for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();)
      e.run(tasks[t].first, tasks[t].second, local);
    std::lock_guard lock(mu);
    found.insert(found.end(), local.begin(), local.end());
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(tasks.size())));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  std::vector<SpiralCode> codes;
  codes.reserve(found.size());
  for (const auto& s : found) codes.push_back(SpiralCode::from_face_sizes(s));
  std::sort(codes.begin(), codes.end(), [](const SpiralCode& a, const SpiralCode& b) {
    return a.pentagon_positions < b.pentagon_positions;
  });
  return codes;
}

/// One representative per mirror-identified isomer on n vertices with
/// pentagon separation >= min_separation, ordered by canonical code.
inline std::vector<GeneratedIsomer> generate(int n, int min_separation = 1,
                                             unsigned workers = default_workers()) {
  std::vector<GeneratedIsomer> out;
  for (const SpiralCode& s : generate_spirals(n, min_separation >= 2, workers)) {
    Fullerene f = windup(s);
    const int sep = pentagon_separation(f).separation;
    if (sep >= min_separation) out.push_back({s, std::move(f), sep});
  }
  return out;
}

}  // namespace fullerene
