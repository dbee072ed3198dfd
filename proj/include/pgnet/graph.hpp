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

#ifndef PGNET_GRAPH_HPP_
#define PGNET_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <vector>

namespace pgnet {

// Dense node index. Within generated graphs the index is the arrival order.
using NodeId = std::uint32_t;

// Loop-free undirected multigraph. Multiplicities are stored exactly in a
// per-node neighbour map; the degree of a node counts every edge copy.
class MultiGraph {
 public:
  using Neighbors = std::map<NodeId, std::uint32_t>;

  MultiGraph() = default;
  explicit MultiGraph(std::size_t num_nodes);

  // Two nodes joined by a single edge: the default growth seed.
  static MultiGraph ConnectedPair();

  NodeId add_node();

  // Adds `copies` parallel copies of the edge {u, w}. Throws InvalidArgument
  // on loops or unknown nodes.
  void add_edge(NodeId u, NodeId w, std::uint32_t copies = 1);

  // Removes a single copy of {u, w}. Throws InvalidArgument if absent.
  void remove_edge(NodeId u, NodeId w);

  std::size_t num_nodes() const { return adjacency_.size(); }
  // Counts multiplicity.
  std::size_t num_edges() const { return num_edges_; }

  std::uint32_t degree(NodeId v) const { return degree_.at(v); }
  std::span<const std::uint32_t> degrees() const { return degree_; }
  std::uint32_t multiplicity(NodeId u, NodeId w) const;
  const Neighbors& neighbors(NodeId v) const { return adjacency_.at(v); }

  // Largest multiplicity over all node pairs (0 for an edgeless graph).
  std::uint32_t max_multiplicity() const;

  double mean_degree() const;

  // Calls fn(u, w, multiplicity) for every distinct pair with u < w, in
  // lexicographic order.
  template <typename Fn>
  void for_each_edge(Fn&& fn) const {
    for (NodeId u = 0; u < adjacency_.size(); ++u) {
      for (auto it = adjacency_[u].upper_bound(u); it != adjacency_[u].end();
           ++it) {
        fn(u, it->first, it->second);
      }
    }
  }

  friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

 private:
  void check_node(NodeId v) const;

  std::vector<Neighbors> adjacency_;
  std::vector<std::uint32_t> degree_;
  std::size_t num_edges_ = 0;
};

// Node counts n(k) indexed by degree. The count vector is trimmed so that its
// last entry, if any, is non-zero.
class DegreeHistogram {
 public:
  DegreeHistogram() = default;
  explicit DegreeHistogram(std::vector<std::uint64_t> counts);

  std::uint64_t count(std::size_t k) const {
    return k < counts_.size() ? counts_[k] : 0;
  }
  std::span<const std::uint64_t> counts() const { return counts_; }
  std::uint64_t total() const { return total_; }
  // Largest degree with a non-zero count; 0 for an empty histogram.
  std::size_t max_degree() const {
    return counts_.empty() ? 0 : counts_.size() - 1;
  }
  double p(std::size_t k) const;

  friend bool operator==(const DegreeHistogram&,
                         const DegreeHistogram&) = default;

 private:
  std::vector<std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

DegreeHistogram degree_histogram(const MultiGraph& g);

// Text format:
//   N <node-count>
//   <u> <w>        one line per edge copy, 0-based, u < w
// Blank lines and lines starting with '#' are ignored by the reader.
void write_graph(std::ostream& out, const MultiGraph& g);
MultiGraph read_graph(std::istream& in);
void write_graph_file(const std::filesystem::path& path, const MultiGraph& g);
MultiGraph read_graph_file(const std::filesystem::path& path);

}  // namespace pgnet

#endif  // PGNET_GRAPH_HPP_
