#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "diskclique/cobip.hpp"
#include "diskclique/errors.hpp"
#include "diskclique/generator.hpp"
#include "diskclique/io.hpp"
#include "diskclique/multi.hpp"
#include "diskclique/oracle.hpp"
#include "diskclique/unit.hpp"

namespace {

namespace dc = diskclique;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

constexpr int kExitParse = 2;
constexpr int kExitModeMismatch = 3;
constexpr int kExitTooLarge = 4;
constexpr int kExitBenchEmpty = 5;

struct SolveOptions {
  std::string mode = "unit";
  double epsilon = 0.2;
  double delta = 0.05;
  std::uint64_t seed = 0;
  int split = -1;
  bool verify = false;
  int threads = 1;
  std::optional<std::int64_t> trials_per_cell;
  std::optional<std::int64_t> m1;
  std::optional<std::int64_t> m2;
  int rounds = 1;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw dc::ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Unit mode accepts any single shared radius and rescales centers so the
// intersection structure matches radius-1 disks.
dc::UnitInstance to_unit_instance(const dc::ParsedInstance& parsed) {
  const double r = parsed.disks.front().radius;
  for (const auto& d : parsed.disks)
    if (d.radius != r)
      throw dc::ModeMismatch("unit mode requires all radii equal");
  dc::UnitInstance inst;
  inst.points.reserve(parsed.disks.size());
  for (const auto& d : parsed.disks)
    inst.points.push_back(r == 1.0 ? d.center : dc::Point{d.center.x / r, d.center.y / r});
  return inst;
}

dc::ResultRecord solve_record(const dc::ParsedInstance& parsed, const SolveOptions& opt) {
  if (parsed.disks.empty()) throw dc::ParseError("instance has no disks");

  dc::ResultRecord rec;
  rec.mode = opt.mode;
  rec.n = static_cast<int>(parsed.disks.size());
  rec.t = parsed.distinct_radii;
  rec.epsilon = opt.epsilon;
  rec.delta = opt.mode == "unit" ? opt.delta : 0.0;
  rec.seed = opt.seed;

  const auto start = Clock::now();
  if (opt.mode == "unit") {
    dc::UnitConfig cfg;
    cfg.eps = opt.epsilon;
    cfg.delta = opt.delta;
    cfg.master_seed = opt.seed;
    cfg.trials_per_cell_override = opt.trials_per_cell;
    cfg.verify_output = opt.verify;
    cfg.threads = opt.threads;
    const auto res = dc::solve_unit(to_unit_instance(parsed), cfg);
    rec.clique = res.clique;
    rec.trials_executed = res.trials_executed;
  } else if (opt.mode == "multi") {
    dc::MultiConfig cfg;
    cfg.eps = opt.epsilon;
    cfg.master_seed = opt.seed;
    cfg.m1_override = opt.m1;
    cfg.m2_override = opt.m2;
    cfg.rounds = opt.rounds;
    cfg.verify_output = opt.verify;
    cfg.threads = opt.threads;
    const auto res = dc::solve_multi(dc::MultiInstance::build(parsed.disks), cfg);
    rec.clique = res.clique;
    rec.trials_executed = res.trials_executed;
  } else if (opt.mode == "cobip") {
    if (opt.split < 0 || opt.split > rec.n)
      throw dc::ModeMismatch("cobip mode requires --split k with 0 <= k <= n");
    dc::CobipInstance inst;
    inst.left.assign(parsed.disks.begin(), parsed.disks.begin() + opt.split);
    inst.right.assign(parsed.disks.begin() + opt.split, parsed.disks.end());
    if (opt.verify && !inst.sides_are_cliques())
      throw dc::ModeMismatch("--split sides are not cliques");
    const auto m = dc::approx_matching(inst, opt.epsilon);
    rec.clique = dc::approx_clique(inst, opt.epsilon);
    rec.trials_executed = static_cast<std::uint64_t>(m.phases_executed);
  } else {
    throw dc::ModeMismatch("unknown mode " + opt.mode);
  }
  rec.elapsed_ms = ms_since(start);

  if (opt.verify) {
    if (!dc::oracle::verify_clique(parsed.disks, rec.clique.ids))
      throw dc::VerificationFailed("returned ids are not a clique");
    rec.verified = true;
  }
  return rec;
}

int cmd_solve(const std::string& file, const SolveOptions& opt) {
  const auto parsed = dc::parse_instance(read_file(file));
  std::cout << solve_record(parsed, opt).to_text();
  return 0;
}

int cmd_exact(const std::string& file) {
  const auto parsed = dc::parse_instance(read_file(file));
  if (parsed.disks.size() > 64) throw dc::TooLarge("exact solver capped at 64 disks");
  dc::ResultRecord rec;
  rec.mode = "exact";
  rec.n = static_cast<int>(parsed.disks.size());
  rec.t = parsed.distinct_radii;
  const auto start = Clock::now();
  rec.clique = dc::oracle::exact_max_clique(parsed.disks);
  rec.elapsed_ms = ms_since(start);
  rec.verified = dc::oracle::verify_clique(parsed.disks, rec.clique.ids);
  std::cout << rec.to_text();
  return 0;
}

int cmd_bench(const std::string& dir, const SolveOptions& opt, int repeats) {
  std::cout << "file,kind,n,t,epsilon,seed,clique_size,elapsed_ms,trials\n";
  if (!fs::is_directory(dir)) {
    std::cerr << "bench: " << dir << " is not a directory\n";
    return kExitBenchEmpty;
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  int succeeded = 0;
  for (const auto& path : files) {
    dc::ParsedInstance parsed;
    try {
      parsed = dc::parse_instance(read_file(path.string()));
      if (parsed.disks.empty()) throw dc::ParseError("no disks");
    } catch (const dc::Error& e) {
      std::cerr << "bench: skipping " << path.string() << ": " << e.what() << "\n";
      continue;
    }
    std::vector<double> times;
    std::size_t max_size = 0;
    std::uint64_t trials = 0;
    bool ok = true;
    for (int rep = 0; rep < repeats; ++rep) {
      SolveOptions run = opt;
      run.seed = opt.seed + static_cast<std::uint64_t>(rep);
      try {
        const auto rec = solve_record(parsed, run);
        times.push_back(rec.elapsed_ms);
        max_size = std::max(max_size, rec.clique.ids.size());
        trials += rec.trials_executed;
        std::cout << path.filename().string() << ",run," << rec.n << ',' << rec.t << ','
                  << dc::format_double_short(rec.epsilon) << ',' << run.seed << ','
                  << rec.clique.ids.size() << ',' << dc::format_double_short(rec.elapsed_ms)
                  << ',' << rec.trials_executed << "\n";
      } catch (const dc::Error& e) {
        std::cerr << "bench: " << path.string() << " failed: " << e.what() << "\n";
        ok = false;
        break;
      }
    }
    if (!ok || times.empty()) continue;
    std::sort(times.begin(), times.end());
    const double median = times[times.size() / 2];
    std::cout << path.filename().string() << ",median," << parsed.disks.size() << ','
              << parsed.distinct_radii << ',' << dc::format_double_short(opt.epsilon) << ','
              << opt.seed << ',' << max_size << ',' << dc::format_double_short(median) << ','
              << trials << "\n";
    ++succeeded;
  }
  return succeeded > 0 ? 0 : kExitBenchEmpty;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"(1-eps)-approximate maximum cliques in unit and multi-radius disk graphs"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a deterministic instance file");
  std::string gen_kind;
  int gen_n = 10, gen_t = 1;
  double gen_box = 10.0, gen_rho = 1.5;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  gen->add_option("kind", gen_kind, "uniform-unit | clustered-unit | multi-radii")->required();
  gen->add_option("--n", gen_n, "number of disks")->required();
  gen->add_option("--t", gen_t, "distinct radii (multi-radii)");
  gen->add_option("--box", gen_box, "square side length");
  gen->add_option("--rho", gen_rho, "radius ladder ratio (multi-radii)");
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("-o,--output", gen_out, "write to file instead of stdout");

  // solve
  auto* solve = app.add_subcommand("solve", "approximate a maximum clique");
  std::string solve_file;
  SolveOptions opt;
  solve->add_option("file", solve_file, "instance file")->required();
  solve->add_option("--mode", opt.mode, "unit | multi | cobip")->required();
  solve->add_option("--epsilon", opt.epsilon, "approximation parameter in (0,1]");
  solve->add_option("--delta", opt.delta, "failure probability (unit mode)");
  solve->add_option("--seed", opt.seed, "master seed");
  solve->add_option("--split", opt.split, "cobip mode: first k disks form side X");
  solve->add_flag("--verify", opt.verify, "verify the output clique");
  solve->add_option("--threads", opt.threads, "worker threads (1 = serial)");
  std::int64_t trials_flag = -1, m1_flag = -1, m2_flag = -1;
  solve->add_option("--trials-per-cell", trials_flag, "unit mode trial override");
  solve->add_option("--m1", m1_flag, "multi mode anchor draw override");
  solve->add_option("--m2", m2_flag, "multi mode inner trial override");
  solve->add_option("--rounds", opt.rounds, "multi mode amplification rounds");

  // exact
  auto* exact = app.add_subcommand("exact", "exact maximum clique (<= 64 disks)");
  std::string exact_file;
  exact->add_option("file", exact_file, "instance file")->required();

  // bench
  auto* bench = app.add_subcommand("bench", "solve every instance in a directory, CSV output");
  std::string bench_dir;
  int bench_repeats = 3;
  bench->add_option("dir", bench_dir, "directory of instance files")->required();
  bench->add_option("--mode", opt.mode, "unit | multi | cobip");
  bench->add_option("--epsilon", opt.epsilon, "approximation parameter");
  bench->add_option("--delta", opt.delta, "failure probability (unit mode)");
  bench->add_option("--repeats", bench_repeats, "solves per file");
  bench->add_option("--seed", opt.seed, "base seed (incremented per repeat)");
  bench->add_option("--threads", opt.threads, "worker threads");
  bench->add_option("--split", opt.split, "cobip mode split");
  bench->add_option("--trials-per-cell", trials_flag, "unit mode trial override");
  bench->add_option("--m1", m1_flag, "multi mode anchor draw override");
  bench->add_option("--m2", m2_flag, "multi mode inner trial override");
  bench->add_option("--rounds", opt.rounds, "multi mode amplification rounds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 64;
  }

  if (trials_flag >= 0) opt.trials_per_cell = trials_flag;
  if (m1_flag >= 0) opt.m1 = m1_flag;
  if (m2_flag >= 0) opt.m2 = m2_flag;

  try {
    if (gen->parsed()) {
      std::vector<dc::Disk> disks;
      if (gen_kind == "uniform-unit")
        disks = dc::gen_uniform_unit(gen_n, gen_box, gen_seed);
      else if (gen_kind == "clustered-unit")
        disks = dc::gen_clustered_unit(gen_n, gen_box, gen_seed);
      else if (gen_kind == "multi-radii")
        disks = dc::gen_multi_radii(gen_n, gen_t, gen_box, gen_rho, gen_seed);
      else
        throw dc::BadParams("unknown generator kind " + gen_kind);
      const auto text = dc::emit_instance(disks);
      if (gen_out.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(gen_out, std::ios::binary);
        if (!out) throw dc::BadParams("cannot write " + gen_out);
        out << text;
      }
      return 0;
    }
    if (solve->parsed()) return cmd_solve(solve_file, opt);
    if (exact->parsed()) return cmd_exact(exact_file);
    if (bench->parsed()) return cmd_bench(bench_dir, opt, bench_repeats);
  } catch (const dc::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const dc::ModeMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitModeMismatch;
  } catch (const dc::TooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitTooLarge;
  } catch (const dc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
