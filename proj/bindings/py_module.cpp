#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <utility>
#include <vector>

#include "diskclique/cobip.hpp"
#include "diskclique/errors.hpp"
#include "diskclique/generator.hpp"
#include "diskclique/io.hpp"
#include "diskclique/multi.hpp"
#include "diskclique/oracle.hpp"
#include "diskclique/unit.hpp"

namespace py = pybind11;
namespace dc = diskclique;

namespace {

using DiskTuple = std::tuple<double, double, double>;

std::vector<dc::Disk> to_disks(const std::vector<DiskTuple>& raw) {
  std::vector<dc::Disk> disks;
  disks.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const auto& [x, y, r] = raw[i];
    disks.push_back({static_cast<int>(i), {x, y}, r});
  }
  return disks;
}

std::vector<DiskTuple> from_disks(const std::vector<dc::Disk>& disks) {
  std::vector<DiskTuple> out;
  out.reserve(disks.size());
  for (const auto& d : disks) out.emplace_back(d.center.x, d.center.y, d.radius);
  return out;
}

}  // namespace

PYBIND11_MODULE(_diskclique, m) {
  m.doc() = "Approximate maximum cliques in unit and multi-radius disk graphs";

  m.def(
      "solve_unit",
      [](const std::vector<std::pair<double, double>>& points, double eps, double delta,
         std::uint64_t seed, std::optional<std::int64_t> trials_per_cell, int threads) {
        dc::UnitInstance inst;
        inst.points.reserve(points.size());
        for (const auto& [x, y] : points) inst.points.push_back({x, y});
        dc::UnitConfig cfg;
        cfg.eps = eps;
        cfg.delta = delta;
        cfg.master_seed = seed;
        cfg.trials_per_cell_override = trials_per_cell;
        cfg.threads = threads;
        const auto res = dc::solve_unit(inst, cfg);
        py::dict out;
        out["clique"] = res.clique.ids;
        out["trials_executed"] = res.trials_executed;
        out["rounds"] = res.rounds;
        out["verified"] = res.verified;
        return out;
      },
      py::arg("points"), py::arg("eps") = 0.2, py::arg("delta") = 0.05, py::arg("seed") = 0,
      py::arg("trials_per_cell") = std::nullopt, py::arg("threads") = 1,
      "Randomized (1-eps)-approximate maximum clique among unit disks centered "
      "at `points`; succeeds with probability at least 1-delta.");

  m.def(
      "solve_multi",
      [](const std::vector<DiskTuple>& raw, double eps, std::uint64_t seed,
         std::optional<std::int64_t> m1, std::optional<std::int64_t> m2, int rounds,
         int threads) {
        dc::MultiConfig cfg;
        cfg.eps = eps;
        cfg.master_seed = seed;
        cfg.m1_override = m1;
        cfg.m2_override = m2;
        cfg.rounds = rounds;
        cfg.threads = threads;
        const auto res = dc::solve_multi(dc::MultiInstance::build(to_disks(raw)), cfg);
        py::dict out;
        out["clique"] = res.clique.ids;
        out["trials_executed"] = res.trials_executed;
        out["k_estimate"] = res.k_estimate;
        out["verified"] = res.verified;
        return out;
      },
      py::arg("disks"), py::arg("eps") = 0.25, py::arg("seed") = 0,
      py::arg("m1") = std::nullopt, py::arg("m2") = std::nullopt, py::arg("rounds") = 1,
      py::arg("threads") = 1,
      "Randomized (1-eps)-approximate maximum clique for disks (x, y, r) with "
      "few distinct radii.");

  m.def(
      "cobip_clique",
      [](const std::vector<DiskTuple>& raw, int split, double eps) {
        const auto disks = to_disks(raw);
        if (split < 0 || static_cast<std::size_t>(split) > disks.size())
          throw dc::ModeMismatch("split must be in [0, n]");
        dc::CobipInstance inst;
        inst.left.assign(disks.begin(), disks.begin() + split);
        inst.right.assign(disks.begin() + split, disks.end());
        return dc::approx_clique(inst, eps).ids;
      },
      py::arg("disks"), py::arg("split"), py::arg("eps") = 0.25,
      "Deterministic (1-eps)-approximate maximum clique of a co-bipartite disk "
      "graph; the first `split` disks form one side.");

  m.def(
      "exact_max_clique",
      [](const std::vector<DiskTuple>& raw) { return dc::oracle::exact_max_clique(to_disks(raw)).ids; },
      py::arg("disks"), "Exact maximum clique via Bron-Kerbosch (at most 64 disks).");

  m.def(
      "verify_clique",
      [](const std::vector<DiskTuple>& raw, const std::vector<int>& ids) {
        return dc::oracle::verify_clique(to_disks(raw), ids);
      },
      py::arg("disks"), py::arg("ids"), "Check that all referenced disks pairwise intersect.");

  m.def(
      "parse_instance",
      [](const std::string& text) { return from_disks(dc::parse_instance(text).disks); },
      py::arg("text"), "Parse an `x y r` instance file into (x, y, r) tuples.");

  m.def(
      "emit_instance",
      [](const std::vector<DiskTuple>& raw, bool header) {
        return dc::emit_instance(to_disks(raw), header);
      },
      py::arg("disks"), py::arg("header") = true,
      "Serialize disks in the line-oriented instance format (exact round-trip).");

  m.def(
      "gen_uniform_unit",
      [](int n, double box, std::uint64_t seed) { return from_disks(dc::gen_uniform_unit(n, box, seed)); },
      py::arg("n"), py::arg("box") = 10.0, py::arg("seed") = 0);
  m.def(
      "gen_clustered_unit",
      [](int n, double box, std::uint64_t seed) { return from_disks(dc::gen_clustered_unit(n, box, seed)); },
      py::arg("n"), py::arg("box") = 10.0, py::arg("seed") = 0);
  m.def(
      "gen_multi_radii",
      [](int n, int t, double box, double rho, std::uint64_t seed) {
        return from_disks(dc::gen_multi_radii(n, t, box, rho, seed));
      },
      py::arg("n"), py::arg("t"), py::arg("box") = 10.0, py::arg("rho") = 1.5,
      py::arg("seed") = 0);

  py::register_exception<dc::Error>(m, "DiskCliqueError");

#ifdef VERSION_INFO
#define DC_STR(x) #x
#define DC_XSTR(x) DC_STR(x)
  m.attr("__version__") = DC_XSTR(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
