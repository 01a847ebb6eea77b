#include "berge/hypergraph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include "berge/errors.hpp"
#include "berge/graph.hpp"

namespace berge {

Hypergraph::Hypergraph(int n, int r, std::vector<std::vector<Vertex>> edges)
    : n_(n), r_(r), edges_(std::move(edges)) {
  if (n < 1 || n > kMaxVertices) {
    throw InputError("vertex count " + std::to_string(n) + " outside [1, " +
                     std::to_string(kMaxVertices) + "]");
  }
  if (r < 1 || r > n) {
    throw InputError("uniformity " + std::to_string(r) + " outside [1, n]");
  }
  for (auto& e : edges_) {
    std::sort(e.begin(), e.end());
    if (static_cast<int>(e.size()) != r) {
      throw InputError("edge size " + std::to_string(e.size()) + " != r=" + std::to_string(r));
    }
    if (e.front() < 0 || e.back() >= n) throw InputError("edge vertex out of range");
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw InputError("edge repeats a vertex");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw InputError("duplicate edge");
  }
  masks_.reserve(edges_.size());
  incidence_.resize(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    masks_.push_back(VertexSet::of(edges_[i]));
    for (Vertex v : edges_[i]) incidence_[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
  }
}

std::optional<int> Hypergraph::find_edge(const VertexSet& vertices) const {
  auto key = vertices.to_vector();
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

int degree(const Hypergraph& h, Vertex v) {
  if (v < 0 || v >= h.order()) {
    throw InputError("vertex " + std::to_string(v) + " out of range");
  }
  return static_cast<int>(h.incident_edges(v).size());
}

int min_degree(const Hypergraph& h) { return degree_profile(h).minimum; }

DegreeProfile degree_profile(const Hypergraph& h) {
  DegreeProfile p;
  p.degrees.resize(static_cast<std::size_t>(h.order()));
  for (Vertex v = 0; v < h.order(); ++v) p.degrees[static_cast<std::size_t>(v)] = degree(h, v);
  p.minimum = *std::min_element(p.degrees.begin(), p.degrees.end());
  return p;
}

Graph two_shadow(const Hypergraph& h) {
  Graph g(h.order());
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j) g.add_edge(e[i], e[j]);
  }
  return g;
}

namespace {

std::vector<int> read_ints(std::string_view line, int line_no) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    if (pos == line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
    int value = 0;
    const auto* first = line.data() + pos;
    const auto* last = line.data() + end;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
      throw ParseError(line_no, "expected integer, got '" + std::string(first, last) + "'");
    }
    out.push_back(value);
    pos = end;
  }
  return out;
}

}  // namespace

Hypergraph parse_hypergraph(std::string_view text) {
  int n = -1;
  int r = -1;
  std::vector<std::vector<Vertex>> edges;
  std::vector<int> edge_lines;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    std::string_view line = text.substr(start, stop - start);
    start = stop + 1;
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') {
      if (stop == text.size()) break;
      continue;
    }
    line = line.substr(first);
    if (n < 0) {
      auto header = read_ints(line, line_no);
      if (header.size() != 2) throw ParseError(line_no, "header must be 'n r'");
      n = header[0];
      r = header[1];
      if (n < 1 || n > kMaxVertices) throw ParseError(line_no, "n outside [1, 128]");
      if (r < 1 || r > n) throw ParseError(line_no, "r outside [1, n]");
    } else {
      if (line[0] != 'e' || (line.size() > 1 && line[1] != ' ' && line[1] != '\t')) {
        throw ParseError(line_no, "edge lines must start with 'e'");
      }
      auto vs = read_ints(line.substr(1), line_no);
      if (static_cast<int>(vs.size()) != r) {
        throw ParseError(line_no, "edge size " + std::to_string(vs.size()) +
                                      " != r=" + std::to_string(r));
      }
      for (int v : vs) {
        if (v < 0 || v >= n) throw ParseError(line_no, "vertex " + std::to_string(v) + " out of range");
      }
      std::vector<Vertex> sorted(vs.begin(), vs.end());
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw ParseError(line_no, "edge repeats a vertex");
      }
      edges.push_back(std::move(sorted));
      edge_lines.push_back(line_no);
    }
    if (stop == text.size()) break;
  }
  if (n < 0) throw ParseError(std::max(line_no, 1), "missing header 'n r'");

  // Report duplicates against the later line.
  std::vector<std::size_t> idx(edges.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
  for (std::size_t i = 1; i < idx.size(); ++i) {
    if (edges[idx[i]] == edges[idx[i - 1]]) {
      throw ParseError(edge_lines[std::max(idx[i], idx[i - 1])], "duplicate edge");
    }
  }
  return Hypergraph(n, r, std::move(edges));
}

std::string serialize_hypergraph(const Hypergraph& h) {
  std::string out = std::to_string(h.order()) + " " + std::to_string(h.uniformity()) + "\n";
  for (const auto& e : h.edges()) {
    out += 'e';
    for (Vertex v : e) {
      out += ' ';
      out += std::to_string(v);
    }
    out += '\n';
  }
  return out;
}

Hypergraph read_hypergraph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_hypergraph(buf.str());
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    const auto num = static_cast<std::uint64_t>(n - k + i);
    // result * num / i is exact at every step.
    if (result > std::numeric_limits<std::uint64_t>::max() / num) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    result = result * num / static_cast<std::uint64_t>(i);
  }
  return result;
}

std::uint64_t degree_threshold(int n, int r) { return binomial(half_floor(n), r - 1) + 1; }

}  // namespace berge
