// Copyright 2026 The pgnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pgnet/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "pgnet/error.hpp"

namespace pgnet {

MultiGraph::MultiGraph(std::size_t num_nodes)
    : adjacency_(num_nodes), degree_(num_nodes, 0) {}

MultiGraph MultiGraph::ConnectedPair() {
  MultiGraph g(2);
  g.add_edge(0, 1);
  return g;
}

NodeId MultiGraph::add_node() {
  adjacency_.emplace_back();
  degree_.push_back(0);
  return static_cast<NodeId>(adjacency_.size() - 1);
}

void MultiGraph::check_node(NodeId v) const {
  if (v >= adjacency_.size()) {
    throw InvalidArgument("unknown node " + std::to_string(v));
  }
}

void MultiGraph::add_edge(NodeId u, NodeId w, std::uint32_t copies) {
  check_node(u);
  check_node(w);
  if (u == w) {
    throw InvalidArgument("self-loop on node " + std::to_string(u));
  }
  if (copies == 0) return;
  adjacency_[u][w] += copies;
  adjacency_[w][u] += copies;
  degree_[u] += copies;
  degree_[w] += copies;
  num_edges_ += copies;
}

void MultiGraph::remove_edge(NodeId u, NodeId w) {
  check_node(u);
  check_node(w);
  auto it = adjacency_[u].find(w);
  if (it == adjacency_[u].end()) {
    throw InvalidArgument("no edge between " + std::to_string(u) + " and " +
                          std::to_string(w));
  }
  if (--it->second == 0) adjacency_[u].erase(it);
  auto jt = adjacency_[w].find(u);
  if (--jt->second == 0) adjacency_[w].erase(jt);
  --degree_[u];
  --degree_[w];
  --num_edges_;
}

std::uint32_t MultiGraph::multiplicity(NodeId u, NodeId w) const {
  check_node(u);
  check_node(w);
  auto it = adjacency_[u].find(w);
  return it == adjacency_[u].end() ? 0 : it->second;
}

std::uint32_t MultiGraph::max_multiplicity() const {
  std::uint32_t best = 0;
  for_each_edge([&](NodeId, NodeId, std::uint32_t c) { best = std::max(best, c); });
  return best;
}

double MultiGraph::mean_degree() const {
  if (adjacency_.empty()) return 0.0;
  return 2.0 * static_cast<double>(num_edges_) /
         static_cast<double>(adjacency_.size());
}

DegreeHistogram::DegreeHistogram(std::vector<std::uint64_t> counts)
    : counts_(std::move(counts)) {
  while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
  for (auto c : counts_) total_ += c;
}

double DegreeHistogram::p(std::size_t k) const {
  if (total_ == 0) return 0.0;
  return static_cast<double>(count(k)) / static_cast<double>(total_);
}

DegreeHistogram degree_histogram(const MultiGraph& g) {
  std::vector<std::uint64_t> counts;
  for (auto d : g.degrees()) {
    if (d >= counts.size()) counts.resize(d + 1, 0);
    ++counts[d];
  }
  return DegreeHistogram(std::move(counts));
}

void write_graph(std::ostream& out, const MultiGraph& g) {
  out << "N " << g.num_nodes() << '\n';
  g.for_each_edge([&](NodeId u, NodeId w, std::uint32_t c) {
    for (std::uint32_t i = 0; i < c; ++i) out << u << ' ' << w << '\n';
  });
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Parses whitespace-separated unsigned integers; false on any junk.
bool parse_fields(std::string_view line, std::vector<std::uint64_t>& out) {
  out.clear();
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos == line.size()) break;
    std::uint64_t value = 0;
    auto [ptr, ec] =
        std::from_chars(line.data() + pos, line.data() + line.size(), value);
    if (ec != std::errc() ||
        (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t')) {
      return false;
    }
    out.push_back(value);
    pos = static_cast<std::size_t>(ptr - line.data());
  }
  return true;
}

}  // namespace

MultiGraph read_graph(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  MultiGraph g;
  std::vector<std::uint64_t> fields;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (!have_header) {
      if (line.size() < 2 || line[0] != 'N' || (line[1] != ' ' && line[1] != '\t')) {
        throw ParseError(line_no, "expected header 'N <node-count>'");
      }
      if (!parse_fields(line.substr(1), fields) || fields.size() != 1) {
        throw ParseError(line_no, "malformed node count");
      }
      if (fields[0] > std::numeric_limits<NodeId>::max()) {
        throw ParseError(line_no, "node count too large");
      }
      g = MultiGraph(static_cast<std::size_t>(fields[0]));
      have_header = true;
      continue;
    }
    if (!parse_fields(line, fields) || fields.size() != 2) {
      throw ParseError(line_no, "expected '<u> <w>'");
    }
    if (fields[0] == fields[1]) {
      throw ParseError(line_no, "self-loop on node " + std::to_string(fields[0]));
    }
    if (fields[0] >= g.num_nodes() || fields[1] >= g.num_nodes()) {
      throw ParseError(line_no, "node index out of range");
    }
    g.add_edge(static_cast<NodeId>(fields[0]), static_cast<NodeId>(fields[1]));
  }
  if (!have_header) throw ParseError(line_no + 1, "missing header 'N <node-count>'");
  return g;
}

void write_graph_file(const std::filesystem::path& path, const MultiGraph& g) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write_graph(out, g);
  if (!out) throw IoError("write failed: " + path.string());
}

MultiGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return read_graph(in);
}

}  // namespace pgnet
