#ifndef HYPERMATCH_EDGELIST_HPP_
#define HYPERMATCH_EDGELIST_HPP_

// Plain text edge lists: a header line "n k", then one edge per line as k
// strictly increasing 1-based vertex ids.  Lines whose first non-blank
// character is '#' are comments; blank lines are skipped; LF and CRLF both
// parse.  Serialization is canonical: colex edge order, single spaces, LF.

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hypermatch/hypergraph.hpp"

namespace hypermatch {

struct edgelist_error : std::runtime_error {
  int line;  // 1-based physical line of the offending input
  edgelist_error(int line_no, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

namespace detail {

inline std::vector<std::string_view> split_tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline int parse_int(std::string_view tok, int line_no) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw edgelist_error(line_no, "expected an integer, got '" + std::string(tok) + "'");
  return v;
}

}  // namespace detail

inline Hypergraph parse_edgelist(std::string_view text) {
  int n = 0, k = 0;
  bool have_header = false;
  std::vector<EdgeTuple> edges;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    ++line_no;
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::vector<std::string_view> toks = detail::split_tokens(line);
    if (toks.empty() || toks[0].front() == '#') continue;
    if (!have_header) {
      if (toks.size() != 2)
        throw edgelist_error(line_no, "header must be 'n k'");
      n = detail::parse_int(toks[0], line_no);
      k = detail::parse_int(toks[1], line_no);
      if (k < 1) throw edgelist_error(line_no, "k must be at least 1");
      if (n < 0 || n > kMaxVertices)
        throw edgelist_error(line_no,
                             "n must be in [0, " + std::to_string(kMaxVertices) + "]");
      have_header = true;
      continue;
    }
    if (static_cast<int>(toks.size()) != k)
      throw edgelist_error(line_no, "expected " + std::to_string(k) + " vertex ids, got " +
                                        std::to_string(toks.size()));
    EdgeTuple e;
    e.reserve(static_cast<std::size_t>(k));
    for (const std::string_view tok : toks) {
      const int v = detail::parse_int(tok, line_no);
      if (v < 1 || v > n)
        throw edgelist_error(line_no, "vertex id " + std::to_string(v) +
                                          " out of range [1, " + std::to_string(n) + "]");
      if (!e.empty() && v <= e.back())
        throw edgelist_error(line_no, "vertex ids must be strictly increasing");
      e.push_back(v);
    }
    edges.push_back(std::move(e));
  }
  if (!have_header) throw edgelist_error(line_no, "missing 'n k' header");
  return Hypergraph::build(n, k, edges);
}

inline std::string serialize_edgelist(const Hypergraph& g) {
  std::string out = std::to_string(g.n()) + " " + std::to_string(g.k()) + "\n";
  for (std::size_t i = 0; i < g.m(); ++i) {
    const auto e = g.edge(i);
    for (std::size_t t = 0; t < e.size(); ++t) {
      if (t) out += ' ';
      out += std::to_string(e[t]);
    }
    out += '\n';
  }
  return out;
}

inline Hypergraph load_edgelist(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edgelist(buf.str());
}

inline void save_edgelist(const Hypergraph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << serialize_edgelist(g);
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace hypermatch

#endif  // HYPERMATCH_EDGELIST_HPP_
