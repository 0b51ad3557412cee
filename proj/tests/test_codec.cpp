#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fullerene.hpp"
#include "oracles.hpp"

using namespace fullerene;

namespace {

std::vector<PlaneGraph> corpus() {
  return {goldberg({1, 0}).graph(), goldberg({1, 1}).graph(), goldberg({3, 2}).graph(),
          generate(40, 1).back().fullerene.graph()};
}

}  // namespace

TEST(PlanarCode, EmptyStreamIsHeader) {
  const auto bytes = write_planar_code({});
  EXPECT_EQ(bytes.size(), 15u);
  EXPECT_EQ(std::string(bytes.begin(), bytes.end()), ">>planar_code<<");
  EXPECT_TRUE(read_planar_code(bytes).empty());
}

TEST(PlanarCode, C20RecordLayout) {
  const auto g = goldberg({1, 0}).graph();
  const std::vector<PlaneGraph> one{g};
  const auto bytes = write_planar_code(one);
  ASSERT_EQ(bytes.size(), 15u + 81u);
  EXPECT_EQ(bytes[15], 20);
  // first vertex: its three neighbours, 1-based, then 0
  for (int i = 0; i < 3; ++i) EXPECT_EQ(bytes[16 + i], g.neighbors(0)[i] + 1);
  EXPECT_EQ(bytes[19], 0);
  const auto back = read_planar_code(bytes);
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(back[0], g);
  EXPECT_EQ(back[0].rotation(), g.rotation());
}

TEST(PlanarCode, WideRecord) {
  const auto g = goldberg({3, 2}).graph();
  ASSERT_EQ(g.vertex_count(), 380u);
  const std::vector<PlaneGraph> one{g};
  const auto bytes = write_planar_code(one);
  EXPECT_EQ(bytes[15], 0);
  EXPECT_EQ(bytes[16], 380 & 0xff);
  EXPECT_EQ(bytes[17], 380 >> 8);
  EXPECT_EQ(bytes.size(), 15u + 3u + 2u * 380u * 4u);
  const int first = bytes[18] | (bytes[19] << 8);
  EXPECT_EQ(first, g.neighbors(0)[0] + 1);
  EXPECT_EQ(read_planar_code(bytes).front(), g);
}

TEST(PlanarCode, RoundTripIsByteIdentical) {
  const auto graphs = corpus();
  const auto bytes = write_planar_code(graphs);
  const auto back = read_planar_code(bytes);
  ASSERT_EQ(back.size(), graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) EXPECT_EQ(back[i], graphs[i]);
  EXPECT_EQ(write_planar_code(back), bytes);
}

TEST(PlanarCode, Errors) {
  const std::string junk = "not a planar code stream";
  EXPECT_THROW(read_planar_code(std::vector<std::uint8_t>(junk.begin(), junk.end())), BadHeader);
  EXPECT_THROW(read_planar_code(std::vector<std::uint8_t>{'>', '>'}), BadHeader);
  const std::vector<PlaneGraph> one{goldberg({1, 0}).graph()};
  auto bytes = write_planar_code(one);
  auto cut = bytes;
  cut.resize(cut.size() - 5);
  EXPECT_THROW(read_planar_code(cut), TruncatedRecord);
  auto bad = bytes;
  bad[16] = 21;
  EXPECT_THROW(read_planar_code(bad), InvalidNeighborIndex);
  auto wide = std::vector<std::uint8_t>(bytes.begin(), bytes.begin() + 15);
  wide.push_back(0);
  wide.push_back(20);
  EXPECT_THROW(read_planar_code(wide), TruncatedRecord);
}

TEST(PlanarCode, BuckygenFilesIfPresent) {
  const char* dir = std::getenv("FULLERENE_PLANAR_CODE_DIR");
  if (!dir || !std::filesystem::is_directory(dir)) GTEST_SKIP() << "no external planar_code files";
  int seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    std::ifstream in(entry.path(), std::ios::binary);
    const auto bytes = read_all_bytes(in);
    if (bytes.size() < 15 || std::string(bytes.begin(), bytes.begin() + 15) != kPlanarCodeHeader) continue;
    for (const auto& g : read_planar_code(bytes)) {
      EXPECT_NO_THROW(validate_fullerene(g));
      ++seen;
    }
  }
  if (seen == 0) GTEST_SKIP() << "directory holds no planar_code files";
}

TEST(AdjacencyText, Format) {
  const std::vector<PlaneGraph> k4{build_from_rotation({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}})};
  EXPECT_EQ(write_adjacency_text(k4), "1: 2 3 4\n2: 1 4 3\n3: 1 2 4\n4: 1 3 2\n");
}

TEST(AdjacencyText, RoundTrip) {
  const auto graphs = corpus();
  const auto text = write_adjacency_text(graphs);
  std::istringstream in(text);
  const auto back = read_adjacency_text(in);
  ASSERT_EQ(back.size(), graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) EXPECT_EQ(back[i], graphs[i]);
  std::istringstream bad("1: 2 3\n3: 1\n");
  EXPECT_THROW(read_adjacency_text(bad), TruncatedRecord);
  std::istringstream range("1: 2\n2: 3\n");
  EXPECT_THROW(read_adjacency_text(range), InvalidNeighborIndex);
}

TEST(EmitTable, PublishedRows) {
  const std::vector<CountTableRow> rows{{40, 22, 40, 0, 0, 0, 0}, {60, 32, 1812, 1, 0, 0, 0}, {20, 12, 1, 0, 0, 0, 0}};
  EXPECT_EQ(emit_table(rows),
            "nv,nf,total,ipr,sep3,sep4,sep5\n40,22,40,0,0,0,0\n60,32,1812,1,0,0,0\n20,12,1,0,0,0,0\n");
}

TEST(EmitTable, ColumnsAreNonIncreasing) {
  for (const auto& r : kTableFixtures) {
    EXPECT_EQ(r.nf, r.nv / 2 + 2);
    EXPECT_GE(r.total, r.sep_ge_2);
    EXPECT_GE(r.sep_ge_2, r.sep_ge_3);
    EXPECT_GE(r.sep_ge_3, r.sep_ge_4);
    EXPECT_GE(r.sep_ge_4, r.sep_ge_5);
  }
  for (const auto& r : count_table(20, 40))
    EXPECT_TRUE(r.total >= r.sep_ge_2 && r.sep_ge_2 >= r.sep_ge_3 && r.sep_ge_3 >= r.sep_ge_4 &&
                r.sep_ge_4 >= r.sep_ge_5);
}

TEST(VerifyAgainstFixtures, Range20To40) {
  const auto report = verify_against_fixtures(20, 40);
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.rows.size(), 11u);
}

TEST(VerifyAgainstFixtures, CorruptedFixtureIsReported) {
  std::vector<CountTableRow> fixtures(std::begin(kTableFixtures), std::end(kTableFixtures));
  fixtures[3].total += 1;     // nv = 26
  fixtures[5].sep_ge_2 = 4;   // nv = 30
  const auto report = verify_against_fixtures(20, 32, false, fixtures);
  ASSERT_EQ(report.mismatches.size(), 2u);
  EXPECT_EQ(report.mismatches[0].nv, 26);
  EXPECT_EQ(report.mismatches[0].column, "total");
  EXPECT_EQ(report.mismatches[0].expected, 2);
  EXPECT_EQ(report.mismatches[0].actual, 1);
  EXPECT_EQ(report.mismatches[1].nv, 30);
  EXPECT_EQ(report.mismatches[1].column, "ipr");
}

TEST(VerifyAgainstFixtures, Unsupported) {
  EXPECT_THROW(verify_against_fixtures(116, 118), UnsupportedN);
  EXPECT_THROW(verify_against_fixtures(10, 20), UnsupportedN);
}
