#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "diskclique/clique.hpp"
#include "diskclique/geometry.hpp"

namespace diskclique {

// Line-oriented instance format: optional `# disks <n> radii <t>` header,
// then one `x y r` line per disk; the line number (counting disk lines
// only) is the disk id. Serialization uses 17 significant digits so
// parse(emit(instance)) round-trips exactly.

struct ParsedInstance {
  std::vector<Disk> disks;
  int distinct_radii = 0;
};

// Throws ParseError on malformed lines, non-finite values, coordinates
// outside |v| <= 1e9 or radii outside [1e-6, 1e9].
ParsedInstance parse_instance(std::string_view text);

std::string emit_instance(std::span<const Disk> disks, bool header = true);

std::string format_double(double v);        // fixed 17 significant digits
std::string format_double_short(double v);  // shortest exact round-trip form

// One solve outcome in the stable key/value text layout used by the CLI.
struct ResultRecord {
  std::string mode;
  int n = 0;
  int t = 0;
  double epsilon = 0.0;
  double delta = 0.0;
  std::uint64_t seed = 0;
  Clique clique;
  double elapsed_ms = 0.0;
  std::uint64_t trials_executed = 0;
  bool verified = false;

  std::string to_text() const;
};

}  // namespace diskclique
