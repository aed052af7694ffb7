#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vizlab/vertex_set.hpp"

namespace vizlab {

/// Thrown when a construction would exceed the configured vertex cap.
class SizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite simple undirected graph on vertices 0..order()-1.
///
/// Adjacency rows are bitsets, kept symmetric and irreflexive by add_edge.
/// Connectivity is not required; operations that need it say so.
class Graph {
 public:
  static constexpr std::size_t kDefaultVertexCap = 4096;

  Graph() = default;
  explicit Graph(std::size_t order, std::size_t vertex_cap = kDefaultVertexCap);

  static Graph from_edges(std::size_t order, const std::vector<std::pair<Vertex, Vertex>>& edges);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  void add_edge(Vertex u, Vertex v);
  bool adjacent(Vertex u, Vertex v) const;
  std::size_t degree(Vertex v) const { return adjacency_.at(v).count(); }

  const VertexSet& neighbors(Vertex v) const { return adjacency_.at(v); }
  VertexSet closed_neighbors(Vertex v) const;

  std::vector<std::pair<Vertex, Vertex>> edges() const;
  std::vector<std::size_t> degree_sequence() const;  // sorted ascending
  bool is_connected() const;
  bool is_spanning_subgraph_of(const Graph& other) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexSet> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Partition of V(G) into cells meant to induce complete subgraphs.
/// Validity against a graph is checked by validate_partition.
struct CliquePartition {
  std::vector<std::vector<Vertex>> cells;

  std::size_t size() const { return cells.size(); }
  /// cell index of every vertex; requires a valid cover of [0, order).
  std::vector<std::size_t> cell_of(std::size_t order) const;
  VertexSet cell_set(std::size_t cell, std::size_t order) const;
  /// Sort members and order cells by their smallest member.
  void normalize();

  friend bool operator==(const CliquePartition&, const CliquePartition&) = default;
};

struct PartitionViolation {
  enum class Kind { empty_cell, out_of_range, duplicated_vertex, missing_vertex, not_a_clique };
  Kind kind;
  std::size_t cell = 0;
  Vertex vertex = 0;
  std::string message;
};

/// Canonical product layout: (g, h) lives at g + h * |V(G)|.
struct ProductVertex {
  Vertex g;
  Vertex h;

  static ProductVertex from_flat(Vertex flat, std::size_t g_order) {
    return {flat % g_order, flat / g_order};
  }
  Vertex flat(std::size_t g_order) const { return g + h * g_order; }
};

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);
bool dominates(const Graph& g, const VertexSet& s, const VertexSet& targets);
Graph complement(const Graph& g);
Graph cartesian_product(const Graph& g, const Graph& h,
                        std::size_t vertex_cap = Graph::kDefaultVertexCap);
Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep);

std::optional<PartitionViolation> validate_partition(const Graph& g, const CliquePartition& p);

/// g plus every edge inside each cell of p.
Graph saturate_cells(const Graph& g, const CliquePartition& p);

}  // namespace vizlab
