// fullerene: generate, measure, build and convert fullerene graphs.
//
// Graph data goes to stdout (or -o FILE) as planar_code, or as adjacency
// text with --text. Progress and reports meant for people go to stderr,
// except for the table-like outputs of `separation`, `tables` and `verify`.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fullerene.hpp"

namespace {

using namespace fullerene;

struct Output {
  std::string path;
  bool text = false;

  void add_to(CLI::App* cmd) {
    cmd->add_option("-o,--output", path, "Output file (default: stdout)");
    cmd->add_flag("--text", text, "Write adjacency text instead of planar_code");
  }

  void write(const std::vector<PlaneGraph>& graphs) const {
    std::string data;
    if (text) {
      data = write_adjacency_text(graphs);
    } else {
      const auto bytes = write_planar_code(graphs);
      data.assign(bytes.begin(), bytes.end());
    }
    if (path.empty() || path == "-") {
      std::cout.write(data.data(), static_cast<std::streamsize>(data.size()));
      std::cout.flush();
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
  }
};

std::vector<std::uint8_t> slurp(const std::string& path) {
  if (path == "-") return read_all_bytes(std::cin);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_all_bytes(in);
}

/// Reads planar_code or adjacency text, telling them apart by the header.
std::vector<PlaneGraph> read_graphs(const std::vector<std::uint8_t>& bytes, bool* was_text = nullptr) {
  const bool binary = bytes.size() >= kPlanarCodeHeader.size() &&
                      std::equal(kPlanarCodeHeader.begin(), kPlanarCodeHeader.end(), bytes.begin());
  if (was_text) *was_text = !binary;
  if (binary) return read_planar_code(bytes);
  std::istringstream in(std::string(bytes.begin(), bytes.end()));
  return read_adjacency_text(in);
}

std::vector<PlaneGraph> graphs_of(const std::vector<Fullerene>& fs) {
  std::vector<PlaneGraph> out;
  for (const auto& f : fs) out.push_back(f.graph());
  return out;
}

void describe(const Fullerene& f) {
  std::cerr << f.vertex_count() << " vertices, " << f.hexagon_count() << " hexagons, separation "
            << pentagon_separation(f).separation << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fullerene graphs with distant pentagons"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned workers = default_workers();
  app.add_option("-j,--workers", workers, "Worker threads (default: FULLERENE_WORKERS or all cores)")
      ->check(CLI::PositiveNumber);

  int exit_code = 0;

  // generate
  auto* gen = app.add_subcommand("generate", "All isomers on n vertices, by canonical spiral");
  int gen_n = 0, gen_sep = 1;
  Output gen_out;
  gen->add_option("n", gen_n, "Vertex count")->required();
  gen->add_option("--min-sep", gen_sep, "Keep isomers with pentagon separation >= d");
  gen_out.add_to(gen);
  gen->callback([&] {
    const auto isomers = generate(gen_n, gen_sep, workers);
    std::vector<PlaneGraph> graphs;
    for (const auto& iso : isomers) graphs.push_back(iso.fullerene.graph());
    std::cerr << graphs.size() << " isomers on " << gen_n << " vertices with separation >= "
              << gen_sep << '\n';
    gen_out.write(graphs);
  });

  // separation
  auto* sep = app.add_subcommand("separation", "Pentagon separation of every graph in a file");
  std::string sep_in;
  sep->add_option("file", sep_in, "planar_code or adjacency text ('-' for stdin)")->required();
  sep->callback([&] {
    SeparationHistogram hist;
    const auto graphs = read_graphs(slurp(sep_in));
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const Fullerene f = validate_fullerene(graphs[i]);
      const auto r = pentagon_separation(f);
      hist.add(r.separation);
      std::cout << "graph " << i + 1 << ": " << f.vertex_count() << " vertices, separation "
                << r.separation << " (pentagons " << r.argmin_pair.first << ","
                << r.argmin_pair.second << ")\n";
    }
    for (const auto& [d, c] : hist.counts()) std::cout << "separation " << d << ": " << c << '\n';
  });

  // goldberg
  auto* gb = app.add_subcommand("goldberg", "Icosahedral fullerene with Coxeter coordinates (p,q)");
  int gb_p = 1, gb_q = 0;
  Output gb_out;
  gb->add_option("p", gb_p)->required();
  gb->add_option("q", gb_q)->required();
  gb_out.add_to(gb);
  gb->callback([&] {
    const Fullerene f = goldberg({gb_p, gb_q});
    describe(f);
    gb_out.write({f.graph()});
  });

  // minimal
  auto* mn = app.add_subcommand("minimal", "Smallest fullerenes with pentagon separation d");
  int mn_d = 1;
  Output mn_out;
  mn->add_option("d", mn_d)->required();
  mn_out.add_to(mn);
  mn->callback([&] {
    const auto fs = minimal_separation_fullerene(mn_d);
    for (const auto& f : fs) describe(f);
    mn_out.write(graphs_of(fs));
  });

  // build
  auto* bd = app.add_subcommand("build", "Fullerene with h hexagons and separation >= d");
  int bd_d = 1, bd_h = 0;
  Output bd_out;
  bd->add_option("d", bd_d)->required();
  bd->add_option("hexagons", bd_h, "Hexagon count")->required();
  bd_out.add_to(bd);
  bd->callback([&] {
    std::cerr << "threshold for d = " << bd_d << ": " << h_threshold(bd_d) << " hexagons\n";
    const Fullerene f = build_separated(bd_d, bd_h);
    describe(f);
    bd_out.write({f.graph()});
  });

  // tables
  auto* tb = app.add_subcommand("tables", "Isomer counts by pentagon separation (CSV)");
  int tb_min = 20, tb_max = 20;
  bool tb_ipr = false;
  tb->add_option("nmin", tb_min)->required();
  tb->add_option("nmax", tb_max)->required();
  tb->add_flag("--ipr-only", tb_ipr, "Generate only isolated-pentagon isomers; leave total empty");
  tb->callback([&] {
    std::vector<CountTableRow> rows;
    for (int n = tb_min + (tb_min % 2); n <= tb_max; n += 2) {
      check_generation_bound(n);
      std::cerr << "nv = " << n << '\n';
      rows.push_back(count_row(n, tb_ipr, workers));
    }
    std::cout << emit_table(rows);
  });

  // verify
  auto* vf = app.add_subcommand("verify", "Regenerate counts and compare with the published table");
  int vf_min = 20, vf_max = 20;
  bool vf_ipr = false;
  vf->add_option("nmin", vf_min)->required();
  vf->add_option("nmax", vf_max)->required();
  vf->add_flag("--ipr-only", vf_ipr, "Check only the separation columns");
  vf->callback([&] {
    const auto report = verify_against_fixtures(vf_min, vf_max, vf_ipr, kTableFixtures, workers);
    std::cout << emit_table(report.rows);
    for (const auto& m : report.mismatches)
      std::cout << "MISMATCH nv=" << m.nv << " column=" << m.column << " expected=" << m.expected
                << " actual=" << m.actual << '\n';
    std::cout << (report.ok() ? "all rows match\n" : "table mismatch\n");
    if (!report.ok()) exit_code = 1;
  });

  // convert
  auto* cv = app.add_subcommand("convert", "planar_code <-> adjacency text");
  std::string cv_in;
  std::string cv_to;
  Output cv_out;
  cv->add_option("file", cv_in, "Input file ('-' for stdin)")->required();
  cv->add_option("-o,--output", cv_out.path, "Output file (default: stdout)");
  cv->add_option("--to", cv_to, "Target format (default: the other one)")
      ->check(CLI::IsMember({"text", "planar_code"}));
  cv->callback([&] {
    bool was_text = false;
    const auto graphs = read_graphs(slurp(cv_in), &was_text);
    cv_out.text = cv_to.empty() ? !was_text : cv_to == "text";
    std::cerr << graphs.size() << " graph(s)\n";
    cv_out.write(graphs);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}
