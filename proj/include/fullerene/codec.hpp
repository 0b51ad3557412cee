#pragma once

// planar_code streams, the adjacency text format, and isomer count tables.

#include <cstdint>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fullerene/errors.hpp"
#include "fullerene/generate.hpp"
#include "fullerene/plane_graph.hpp"

namespace fullerene {

inline constexpr std::string_view kPlanarCodeHeader = ">>planar_code<<";

/// Appends one record: vertex count, then each rotation as 1-based
/// neighbours closed by 0. Above 255 vertices the count is 0 followed by a
/// 16-bit little-endian value and every later entry is 16-bit little-endian.
inline void append_planar_code_record(std::vector<std::uint8_t>& out, const PlaneGraph& g) {
  const std::size_t n = g.vertex_count();
  const bool wide = n > 255;
  auto put = [&](std::size_t x) {
    out.push_back(static_cast<std::uint8_t>(x & 0xff));
    if (wide) out.push_back(static_cast<std::uint8_t>((x >> 8) & 0xff));
  };
  if (wide) out.push_back(0);
  put(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (int u : g.neighbors(static_cast<int>(v))) put(static_cast<std::size_t>(u) + 1);
    put(0);
  }
}

inline std::vector<std::uint8_t> write_planar_code(std::span<const PlaneGraph> graphs) {
  std::vector<std::uint8_t> out(kPlanarCodeHeader.begin(), kPlanarCodeHeader.end());
  for (const auto& g : graphs) append_planar_code_record(out, g);
  return out;
}

/// Parses a whole stream. Throws BadHeader, TruncatedRecord or
/// InvalidNeighborIndex; graph-level defects raise the plane-graph errors.
inline std::vector<PlaneGraph> read_planar_code(std::span<const std::uint8_t> bytes) {
  const std::size_t hlen = kPlanarCodeHeader.size();
  if (bytes.size() < hlen ||
      std::string_view(reinterpret_cast<const char*>(bytes.data()), hlen) != kPlanarCodeHeader)
    throw BadHeader("stream does not start with " + std::string(kPlanarCodeHeader));
  std::vector<PlaneGraph> graphs;
  std::size_t pos = hlen;
  while (pos < bytes.size()) {
    const std::size_t record = graphs.size();
    auto truncated = [&] {
      return TruncatedRecord("record " + std::to_string(record) + " ends at byte " +
                             std::to_string(bytes.size()));
    };
    bool wide = false;
    auto get = [&]() -> std::size_t {
      const std::size_t width = wide ? 2 : 1;
      if (pos + width > bytes.size()) throw truncated();
      std::size_t x = bytes[pos];
      if (wide) x |= static_cast<std::size_t>(bytes[pos + 1]) << 8;
      pos += width;
      return x;
    };
    std::size_t n = get();
    if (n == 0) {
      wide = true;
      n = get();
    }
    RotationTable rot(n);
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t x; (x = get()) != 0;) {
        if (x > n)
          throw InvalidNeighborIndex("record " + std::to_string(record) + ", vertex " +
                                     std::to_string(v + 1) + ": neighbour " + std::to_string(x) +
                                     " of " + std::to_string(n));
        rot[v].push_back(static_cast<int>(x) - 1);
      }
    graphs.push_back(PlaneGraph::from_rotation(std::move(rot)));
  }
  return graphs;
}

inline std::vector<std::uint8_t> read_all_bytes(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// One block per graph, one line per vertex: "i: n1 n2 n3" (1-based, in
/// rotation order); blocks are separated by a blank line.
inline std::string write_adjacency_text(std::span<const PlaneGraph> graphs) {
  std::ostringstream out;
  for (std::size_t k = 0; k < graphs.size(); ++k) {
    if (k) out << '\n';
    const auto& g = graphs[k];
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      out << v + 1 << ':';
      for (int u : g.neighbors(static_cast<int>(v))) out << ' ' << u + 1;
      out << '\n';
    }
  }
  return out.str();
}

inline std::vector<PlaneGraph> read_adjacency_text(std::istream& in) {
  std::vector<PlaneGraph> graphs;
  RotationTable rot;
  auto flush = [&] {
    if (rot.empty()) return;
    const std::size_t n = rot.size();
    for (std::size_t v = 0; v < n; ++v)
      for (int u : rot[v])
        if (u < 0 || static_cast<std::size_t>(u) >= n)
          throw InvalidNeighborIndex("graph " + std::to_string(graphs.size()) + ", vertex " +
                                     std::to_string(v + 1) + ": neighbour " + std::to_string(u + 1));
    graphs.push_back(PlaneGraph::from_rotation(std::move(rot)));
    rot.clear();
  };
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      flush();
      continue;
    }
    std::istringstream ls(line);
    std::size_t index = 0;
    char colon = 0;
    if (!(ls >> index >> colon) || colon != ':' || index != rot.size() + 1)
      throw TruncatedRecord("malformed line: " + line);
    std::vector<int> row;
    for (long u; ls >> u;) row.push_back(static_cast<int>(u) - 1);
    rot.push_back(std::move(row));
  }
  flush();
  return graphs;
}

struct CountTableRow {
  int nv = 0;
  int nf = 0;
  long long total = 0;
  long long sep_ge_2 = 0;
  long long sep_ge_3 = 0;
  long long sep_ge_4 = 0;
  long long sep_ge_5 = 0;

  long long column(int i) const {
    switch (i) {
      case 0: return total;
      case 1: return sep_ge_2;
      case 2: return sep_ge_3;
      case 3: return sep_ge_4;
      default: return sep_ge_5;
    }
  }
  friend bool operator==(const CountTableRow&, const CountTableRow&) = default;
};

inline constexpr std::string_view kTableColumns[] = {"total", "ipr", "sep3", "sep4", "sep5"};

/// Isomer counts on n vertices from exhaustive generation. With
/// `ipr_only` only isomers with isolated pentagons are generated and
/// `total` is left at -1.
inline CountTableRow count_row(int n, bool ipr_only = false, unsigned workers = default_workers()) {
  CountTableRow row;
  row.nv = n;
  row.nf = n / 2 + 2;
  SeparationHistogram hist;
  for (const auto& iso : generate(n, ipr_only ? 2 : 1, workers)) hist.add(iso.separation);
  row.total = ipr_only ? -1 : hist.at_least(1);
  row.sep_ge_2 = hist.at_least(2);
  row.sep_ge_3 = hist.at_least(3);
  row.sep_ge_4 = hist.at_least(4);
  row.sep_ge_5 = hist.at_least(5);
  return row;
}

inline std::vector<CountTableRow> count_table(int nmin, int nmax, bool ipr_only = false,
                                              unsigned workers = default_workers()) {
  std::vector<CountTableRow> rows;
  for (int n = nmin + (nmin % 2); n <= nmax; n += 2) {
    check_generation_bound(n);
    rows.push_back(count_row(n, ipr_only, workers));
  }
  return rows;
}

inline std::string emit_table(std::span<const CountTableRow> rows) {
  std::ostringstream out;
  out << "nv,nf,total,ipr,sep3,sep4,sep5\n";
  for (const auto& r : rows) {
    out << r.nv << ',' << r.nf << ',';
    if (r.total >= 0) out << r.total;
    out << ',' << r.sep_ge_2 << ',' << r.sep_ge_3 << ',' << r.sep_ge_4 << ',' << r.sep_ge_5
        << '\n';
  }
  return out.str();
}

/// Published counts: every fullerene isomer and those with pentagon
/// separation at least 2..5.
inline constexpr CountTableRow kTableFixtures[] = {
    {20, 12, 1, 0, 0, 0, 0},           {22, 13, 0, 0, 0, 0, 0},
    {24, 14, 1, 0, 0, 0, 0},           {26, 15, 1, 0, 0, 0, 0},
    {28, 16, 2, 0, 0, 0, 0},           {30, 17, 3, 0, 0, 0, 0},
    {32, 18, 6, 0, 0, 0, 0},           {34, 19, 6, 0, 0, 0, 0},
    {36, 20, 15, 0, 0, 0, 0},          {38, 21, 17, 0, 0, 0, 0},
    {40, 22, 40, 0, 0, 0, 0},          {42, 23, 45, 0, 0, 0, 0},
    {44, 24, 89, 0, 0, 0, 0},          {46, 25, 116, 0, 0, 0, 0},
    {48, 26, 199, 0, 0, 0, 0},         {50, 27, 271, 0, 0, 0, 0},
    {52, 28, 437, 0, 0, 0, 0},         {54, 29, 580, 0, 0, 0, 0},
    {56, 30, 924, 0, 0, 0, 0},         {58, 31, 1205, 0, 0, 0, 0},
    {60, 32, 1812, 1, 0, 0, 0},        {62, 33, 2385, 0, 0, 0, 0},
    {64, 34, 3465, 0, 0, 0, 0},        {66, 35, 4478, 0, 0, 0, 0},
    {68, 36, 6332, 0, 0, 0, 0},        {70, 37, 8149, 1, 0, 0, 0},
    {72, 38, 11190, 1, 0, 0, 0},       {74, 39, 14246, 1, 0, 0, 0},
    {76, 40, 19151, 2, 0, 0, 0},       {78, 41, 24109, 5, 0, 0, 0},
    {80, 42, 31924, 7, 0, 0, 0},       {82, 43, 39718, 9, 0, 0, 0},
    {84, 44, 51592, 24, 0, 0, 0},      {86, 45, 63761, 19, 0, 0, 0},
    {88, 46, 81738, 35, 0, 0, 0},      {90, 47, 99918, 46, 0, 0, 0},
    {92, 48, 126409, 86, 0, 0, 0},     {94, 49, 153493, 134, 0, 0, 0},
    {96, 50, 191839, 187, 0, 0, 0},    {98, 51, 231017, 259, 0, 0, 0},
    {100, 52, 285914, 450, 0, 0, 0},   {102, 53, 341658, 616, 0, 0, 0},
    {104, 54, 419013, 823, 0, 0, 0},   {106, 55, 497529, 1233, 0, 0, 0},
    {108, 56, 604217, 1799, 0, 0, 0},  {110, 57, 713319, 2355, 0, 0, 0},
    {112, 58, 860161, 3342, 0, 0, 0},  {114, 59, 1008444, 4468, 0, 0, 0},
};

struct FixtureMismatch {
  int nv = 0;
  std::string column;
  long long expected = 0;
  long long actual = 0;
};

struct VerifyReport {
  std::vector<CountTableRow> rows;
  std::vector<FixtureMismatch> mismatches;
  bool ok() const noexcept { return mismatches.empty(); }
};

inline std::vector<FixtureMismatch> compare_rows(std::span<const CountTableRow> computed,
                                                 std::span<const CountTableRow> fixtures) {
  std::vector<FixtureMismatch> out;
  for (const auto& row : computed) {
    const CountTableRow* want = nullptr;
    for (const auto& f : fixtures)
      if (f.nv == row.nv) want = &f;
    if (!want) throw UnsupportedN("no fixture row for nv = " + std::to_string(row.nv));
    for (int c = 0; c < 5; ++c) {
      if (row.column(c) < 0) continue;  // not computed
      if (row.column(c) != want->column(c))
        out.push_back({row.nv, std::string(kTableColumns[c]), want->column(c), row.column(c)});
    }
  }
  return out;
}

/// Regenerates the rows for even nv in [nmin, nmax] and diffs them against
/// `fixtures`. Throws UnsupportedN for rows without a fixture.
inline VerifyReport verify_against_fixtures(int nmin, int nmax, bool ipr_only = false,
                                            std::span<const CountTableRow> fixtures = kTableFixtures,
                                            unsigned workers = default_workers()) {
  for (int n = nmin + (nmin % 2); n <= nmax; n += 2) {
    check_generation_bound(n);
    bool known = false;
    for (const auto& f : fixtures) known = known || f.nv == n;
    if (!known) throw UnsupportedN("no fixture row for nv = " + std::to_string(n));
  }
  VerifyReport r;
  r.rows = count_table(nmin, nmax, ipr_only, workers);
  r.mismatches = compare_rows(r.rows, fixtures);
  return r;
}

}  // namespace fullerene
