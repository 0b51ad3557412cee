// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fail.
// Every criterion has zero tolerance: counts and separations compare exactly.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "cap_fixtures.hpp"
#include "fullerene.hpp"
#include "oracles.hpp"

using namespace fullerene;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<void(Outcome&)>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail << " [exception: " << e.what() << "]";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " --"
            << o.detail.str() << " (" << secs << " s)" << std::endl;
}

}  // namespace

int main() {
  VerifyReport table;

  criterion(1, "published isomer and IPR counts for nv in [20,60]", [&](Outcome& o) {
    table = verify_against_fixtures(20, 60);
    o.require(table.rows.size() == 21, "21 rows");
    for (const auto& m : table.mismatches)
      o.require(false, "nv=" + std::to_string(m.nv) + " " + m.column + " expected " +
                           std::to_string(m.expected) + " got " + std::to_string(m.actual));
    long long total = 0;
    for (const auto& r : table.rows) total += r.total;
    o.detail << " " << table.rows.size() << " rows, " << total << " isomers, " << table.mismatches.size()
             << " mismatches";
  });

  criterion(2, "IPR counts for nv = 70..80 equal 1,1,1,2,5,7", [](Outcome& o) {
    const long long want[] = {1, 1, 1, 2, 5, 7};
    for (int i = 0; i < 6; ++i) {
      const int n = 70 + 2 * i;
      const auto got = static_cast<long long>(generate(n, 2).size());
      o.require(got == want[i], "nv=" + std::to_string(n) + " got " + std::to_string(got));
      o.detail << " " << n << ":" << got;
    }
  });

  criterion(3, "minimal <d> for d=2..5: 60/140/240/380 vertices, separation exactly d", [](Outcome& o) {
    const std::size_t want[] = {0, 0, 60, 140, 240, 380};
    for (int d = 2; d <= 5; ++d) {
      const auto fs = minimal_separation_fullerene(d);
      o.require(fs.size() == (d % 2 ? 2u : 1u), "output count for d=" + std::to_string(d));
      for (const auto& f : fs) {
        o.require(f.vertex_count() == want[d], "vertex count for d=" + std::to_string(d));
        o.require(pentagon_separation(f).separation == d, "separation for d=" + std::to_string(d));
      }
      if (fs.size() == 2) {
        o.require(are_isomorphic(fs[0], fs[1], Chirality::mirror_identified), "mirror-identified iso");
        o.require(!are_isomorphic(fs[0], fs[1], Chirality::chirality_sensitive), "chiral pair distinct");
      }
      o.detail << " d=" << d << ":" << fs.front().vertex_count() << "x" << fs.size();
    }
  });

  criterion(4, "goldberg(p,q), 1<=q<=p<=3: separation p+q, 20(p^2+pq+q^2) vertices", [](Outcome& o) {
    for (int p = 1; p <= 3; ++p)
      for (int q = 1; q <= p; ++q) {
        const auto f = goldberg({p, q});
        o.require(static_cast<long>(f.vertex_count()) == 20L * (p * p + p * q + q * q),
                  "vertex count (" + std::to_string(p) + "," + std::to_string(q) + ")");
        o.require(pentagon_separation(f).separation == p + q,
                  "separation (" + std::to_string(p) + "," + std::to_string(q) + ")");
        o.detail << " (" << p << "," << q << "):" << f.vertex_count();
      }
  });

  criterion(5, "no isomer with separation >= 3 for nv in [20,60]", [&](Outcome& o) {
    o.require(table.rows.size() == 21, "rows from criterion 1");
    for (const auto& r : table.rows)
      o.require(r.sep_ge_3 == 0 && r.sep_ge_4 == 0 && r.sep_ge_5 == 0, "nv=" + std::to_string(r.nv));
    o.detail << " sep3/sep4/sep5 columns all 0 over " << table.rows.size() << " rows";
  });

  criterion(6, "build_separated(d,h) for 20 consecutive h from h_threshold(d), d=2,3,4", [](Outcome& o) {
    for (int d = 2; d <= 4; ++d) {
      const int t = h_threshold(d);
      int worst = 1 << 20;
      for (int h = t; h < t + 20; ++h) {
        const auto f = validate_fullerene(build_separated(d, h).graph());
        const int sep = oracle::pentagon_separation_of_rotation(f.graph().rotation());
        worst = std::min(worst, sep);
        o.require(static_cast<int>(f.hexagon_count()) == h, "hexagons d=" + std::to_string(d));
        o.require(sep >= d, "separation d=" + std::to_string(d) + " h=" + std::to_string(h));
      }
      o.detail << " d=" << d << ": h_threshold " << t << ", min separation " << worst;
    }
  });

  criterion(7, "lemma1_transform and lemma2_extend over the generated cap corpus", [](Outcome& o) {
    const auto caps = fixtures::zigzag_cap_corpus();
    o.require(caps.size() >= 50, "at least 50 caps");
    for (const auto& c : caps) {
      const int s0 = oracle::pentagon_separation(c.patch().faces());
      const auto t = lemma1_transform(c);
      o.require(t.l() == c.l() && t.m() == 1, "lemma1_transform parameters");
      o.require(t.patch().pentagon_count() == 6, "lemma1_transform pentagons");
      const int s1 = oracle::pentagon_separation(t.patch().faces());
      o.require(s1 >= s0, "lemma1_transform separation");
      for (Side side : {Side::l_side, Side::m_side}) {
        const auto e = lemma2_extend(t, side);
        const std::size_t add = side == Side::l_side ? t.l() : t.m();
        o.require(e.l() == t.l() && e.m() == t.m(), "lemma2_extend parameters");
        o.require(e.face_count() == t.face_count() + add, "lemma2_extend face count");
        o.require(oracle::pentagon_separation(e.patch().faces()) >= s1, "lemma2_extend separation");
      }
    }
    o.detail << " " << caps.size() << " caps";
  });

  criterion(8, "oracle equivalence for every isomer with nv <= 44", [](Outcome& o) {
    std::mt19937 rng(20240601);
    int graphs = 0;
    for (int n = 20; n <= 44; n += 2)
      for (const auto& iso : generate(n, 1)) {
        ++graphs;
        const auto& f = iso.fullerene;
        const auto rot = f.graph().rotation();
        o.require(pentagon_separation(f).separation == oracle::pentagon_separation_of_rotation(rot),
                  "separation nv=" + std::to_string(n));
        o.require(oracle::maps_isomorphic(windup(unwind(f)).graph().rotation(), rot, true),
                  "windup(unwind) nv=" + std::to_string(n));
        const auto code = canonical_code(f, Chirality::mirror_identified);
        for (int k = 0; k < 100; ++k) {
          auto r = oracle::random_rotate_rows(oracle::relabel(rot, oracle::random_permutation(rot.size(), rng)), rng);
          if (canonical_code(validate_fullerene(r), Chirality::mirror_identified) != code) {
            o.require(false, "relabeling nv=" + std::to_string(n));
            break;
          }
        }
      }
    o.detail << " " << graphs << " isomers, 100 relabelings each";
  });

  criterion(9, "planar_code write/read byte identity incl. the 2-byte form", [](Outcome& o) {
    const std::vector<PlaneGraph> corpus{goldberg({1, 0}).graph(), goldberg({1, 1}).graph(),
                                         goldberg({3, 2}).graph()};
    const auto bytes = write_planar_code(corpus);
    const auto back = read_planar_code(bytes);
    o.require(back.size() == corpus.size(), "graph count");
    for (std::size_t i = 0; i < back.size() && i < corpus.size(); ++i)
      o.require(back[i].rotation() == corpus[i].rotation(), "rotation " + std::to_string(i));
    o.require(write_planar_code(back) == bytes, "bytes");
    o.detail << " " << bytes.size() << " bytes";
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
