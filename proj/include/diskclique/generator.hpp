#pragma once

#include <cstdint>
#include <vector>

#include "diskclique/geometry.hpp"

namespace diskclique {

// Deterministic instance generators. All randomness derives from the seed
// through SplitMix64, so identical parameters give identical instances on
// every platform.

std::vector<Disk> gen_uniform_unit(int n, double box, std::uint64_t seed);

std::vector<Disk> gen_clustered_unit(int n, double box, std::uint64_t seed);

// Radii from the geometric ladder r_i = rho^i, i = 1..t. The first t disks
// cover every class so the file always carries exactly t distinct radii.
std::vector<Disk> gen_multi_radii(int n, int t, double box, double rho, std::uint64_t seed);

}  // namespace diskclique
