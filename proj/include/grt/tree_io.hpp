#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "grt/error.hpp"
#include "grt/tree.hpp"

namespace grt {

// grtree v1 text format:
//   grtree v1
//   n <vertex_count>
//   root <id>
//   edges
//   <u> <v>        (u < v, ascending lexicographic order)
inline std::string serialize(const RootedTree& t) {
  std::string out = "grtree v1\n";
  out += "n " + std::to_string(t.vertex_count()) + "\n";
  out += "root " + std::to_string(t.root()) + "\n";
  out += "edges\n";
  for (auto [u, v] : t.edges())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

namespace detail {

inline Error parse_error(int line, const std::string& reason) {
  return Error("line " + std::to_string(line) + ": " + reason);
}

inline bool parse_int(std::string_view s, int& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace detail

inline RootedTree parse(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();

  if (lines.empty() || lines[0] != "grtree v1")
    throw detail::parse_error(1, "expected header 'grtree v1'");
  if (lines.size() < 2 || lines[1].substr(0, 2) != "n ")
    throw detail::parse_error(2, "expected 'n <vertex_count>'");
  int n = 0;
  if (!detail::parse_int(lines[1].substr(2), n) || n < 1)
    throw detail::parse_error(2, "bad vertex count");
  if (lines.size() < 3 || lines[2].substr(0, 5) != "root ")
    throw detail::parse_error(3, "expected 'root <id>'");
  int root = 0;
  if (!detail::parse_int(lines[2].substr(5), root))
    throw detail::parse_error(3, "bad root id");
  if (root < 0 || root >= n) throw detail::parse_error(3, "root id out of range");
  if (lines.size() < 4 || lines[3] != "edges")
    throw detail::parse_error(4, "expected 'edges'");

  std::vector<std::pair<int, int>> edges;
  for (size_t i = 4; i < lines.size(); ++i) {
    const int line_no = static_cast<int>(i) + 1;
    std::string_view s = lines[i];
    size_t sp = s.find(' ');
    int u = 0, v = 0;
    if (sp == std::string_view::npos || !detail::parse_int(s.substr(0, sp), u) ||
        !detail::parse_int(s.substr(sp + 1), v))
      throw detail::parse_error(line_no, "expected '<u> <v>'");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw detail::parse_error(line_no, "edge endpoint out of range");
    if (u >= v) throw detail::parse_error(line_no, "edges must satisfy u < v");
    edges.emplace_back(u, v);
  }
  try {
    return RootedTree::from_edges(n, root, std::move(edges));
  } catch (const Error& e) {
    throw Error(std::string("tree body: ") + e.what());
  }
}

}  // namespace grt
