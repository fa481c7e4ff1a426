#include "diskclique/generator.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "diskclique/errors.hpp"
#include "diskclique/rng.hpp"

namespace diskclique {

namespace {

void check_common(int n, double box) {
  if (n < 1) throw BadParams("n must be >= 1");
  if (!(box > 0.0) || box > 1.0e9) throw BadParams("box side must be in (0, 1e9]");
}

Point uniform_point(SplitMix64& rng, double box) {
  return {rng.unit() * box, rng.unit() * box};
}

// Box-Muller from two uniforms; fixed formula so output is seed-stable
// across platforms.
double gaussian(SplitMix64& rng, double sigma) {
  const double u1 = rng.unit();
  const double u2 = rng.unit();
  const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
  return sigma * r * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace

std::vector<Disk> gen_uniform_unit(int n, double box, std::uint64_t seed) {
  check_common(n, box);
  SplitMix64 rng(seed);
  std::vector<Disk> disks;
  disks.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) disks.push_back({i, uniform_point(rng, box), 1.0});
  return disks;
}

std::vector<Disk> gen_clustered_unit(int n, double box, std::uint64_t seed) {
  check_common(n, box);
  SplitMix64 rng(seed);
  const int clusters = std::max(1, n / 20);
  std::vector<Point> centers;
  centers.reserve(static_cast<std::size_t>(clusters));
  for (int c = 0; c < clusters; ++c) centers.push_back(uniform_point(rng, box));

  const double sigma = box / 20.0;
  std::vector<Disk> disks;
  disks.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Point c = centers[rng.bounded(centers.size())];
    const double x = std::clamp(c.x + gaussian(rng, sigma), 0.0, box);
    const double y = std::clamp(c.y + gaussian(rng, sigma), 0.0, box);
    disks.push_back({i, {x, y}, 1.0});
  }
  return disks;
}

std::vector<Disk> gen_multi_radii(int n, int t, double box, double rho, std::uint64_t seed) {
  check_common(n, box);
  if (t < 1) throw BadParams("t must be >= 1");
  if (n < t) throw BadParams("need n >= t to realize t distinct radii");
  if (!(rho > 0.0) || rho == 1.0) throw BadParams("rho must be positive and != 1");

  std::vector<double> ladder;
  ladder.reserve(static_cast<std::size_t>(t));
  for (int i = 1; i <= t; ++i) {
    const double r = std::pow(rho, i);
    if (!(r >= 1.0e-6) || !(r <= 1.0e9))
      throw BadParams("radius ladder leaves [1e-6, 1e9] at step " + std::to_string(i));
    ladder.push_back(r);
  }

  SplitMix64 rng(seed);
  std::vector<Disk> disks;
  disks.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    // The first t disks walk the whole ladder so every radius appears.
    const int cls = i < t ? i : static_cast<int>(rng.bounded(static_cast<std::uint64_t>(t)));
    disks.push_back({i, uniform_point(rng, box), ladder[static_cast<std::size_t>(cls)]});
  }
  return disks;
}

}  // namespace diskclique
