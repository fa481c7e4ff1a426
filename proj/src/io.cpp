#include "diskclique/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <set>
#include <string>

#include "diskclique/errors.hpp"

namespace diskclique {

namespace {

bool parse_double(std::string_view token, double& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto res = std::from_chars(first, last, out);
  return res.ec == std::errc{} && res.ptr == last;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_double_short(double v) {
  char buf[64];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    double back = 0.0;
    std::sscanf(buf, "%lf", &back);
    if (back == v) break;
  }
  return buf;
}

ParsedInstance parse_instance(std::string_view text) {
  ParsedInstance out;
  std::set<double> radii;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens.front().starts_with('#')) continue;
    if (tokens.size() != 3)
      throw ParseError("line " + std::to_string(line_no) + ": expected `x y r`");

    double x = 0, y = 0, r = 0;
    if (!parse_double(tokens[0], x) || !parse_double(tokens[1], y) ||
        !parse_double(tokens[2], r))
      throw ParseError("line " + std::to_string(line_no) + ": malformed number");
    if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(r))
      throw ParseError("line " + std::to_string(line_no) + ": non-finite value");
    if (std::abs(x) > 1.0e9 || std::abs(y) > 1.0e9)
      throw ParseError("line " + std::to_string(line_no) + ": coordinate outside |v| <= 1e9");
    if (r < 1.0e-6 || r > 1.0e9)
      throw ParseError("line " + std::to_string(line_no) + ": radius outside [1e-6, 1e9]");

    const int id = static_cast<int>(out.disks.size());
    out.disks.push_back({id, {x, y}, r});
    radii.insert(r);
  }
  out.distinct_radii = static_cast<int>(radii.size());
  return out;
}

std::string emit_instance(std::span<const Disk> disks, bool header) {
  std::string out;
  if (header) {
    std::set<double> radii;
    for (const auto& d : disks) radii.insert(d.radius);
    out += "# disks " + std::to_string(disks.size()) + " radii " +
           std::to_string(radii.size()) + "\n";
  }
  for (const auto& d : disks) {
    out += format_double(d.center.x);
    out += ' ';
    out += format_double(d.center.y);
    out += ' ';
    out += format_double(d.radius);
    out += '\n';
  }
  return out;
}

std::string ResultRecord::to_text() const {
  std::string out;
  out += "mode " + mode + "\n";
  out += "n " + std::to_string(n) + "\n";
  out += "t " + std::to_string(t) + "\n";
  out += "epsilon " + format_double_short(epsilon) + "\n";
  out += "delta " + format_double_short(delta) + "\n";
  out += "seed " + std::to_string(seed) + "\n";
  out += "clique_size " + std::to_string(clique.ids.size()) + "\n";
  out += "clique_ids";
  for (int id : clique.ids) out += ' ' + std::to_string(id);
  out += "\n";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", elapsed_ms);
  out += "elapsed_ms ";
  out += buf;
  out += "\n";
  out += "trials_executed " + std::to_string(trials_executed) + "\n";
  out += "verified ";
  out += verified ? "true" : "false";
  out += "\n";
  return out;
}

}  // namespace diskclique
