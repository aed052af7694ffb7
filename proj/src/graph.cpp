#include "vizlab/graph.hpp"

#include <algorithm>

namespace vizlab {

Graph::Graph(std::size_t order, std::size_t vertex_cap) {
  if (order > vertex_cap) {
    throw SizeError("graph with " + std::to_string(order) + " vertices exceeds cap of " +
                    std::to_string(vertex_cap));
  }
  adjacency_.assign(order, VertexSet(order));
}

Graph Graph::from_edges(std::size_t order, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  Graph g(order);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u >= order() || v >= order()) {
    throw std::out_of_range("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") outside graph of order " + std::to_string(order()));
  }
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  if (adjacency_[u].contains(v)) return;
  adjacency_[u].insert(v);
  adjacency_[v].insert(u);
  ++edge_count_;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  return u < order() && adjacency_[u].contains(v);
}

VertexSet Graph::closed_neighbors(Vertex v) const {
  VertexSet s = adjacency_.at(v);
  s.insert(v);
  return s;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v = adjacency_[u].next(u); v < order(); v = adjacency_[u].next(v)) {
      out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::size_t> Graph::degree_sequence() const {
  std::vector<std::size_t> degrees;
  degrees.reserve(order());
  for (const auto& row : adjacency_) degrees.push_back(row.count());
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

bool Graph::is_connected() const {
  if (order() == 0) return true;
  VertexSet seen(order());
  VertexSet frontier(order(), {0});
  seen.insert(0);
  while (!frontier.empty()) {
    VertexSet next(order());
    frontier.for_each([&](Vertex v) { next |= adjacency_[v]; });
    next -= seen;
    seen |= next;
    frontier = std::move(next);
  }
  return seen.count() == order();
}

bool Graph::is_spanning_subgraph_of(const Graph& other) const {
  if (other.order() != order()) return false;
  for (Vertex v = 0; v < order(); ++v)
    if (!adjacency_[v].is_subset_of(other.adjacency_[v])) return false;
  return true;
}

std::vector<std::size_t> CliquePartition::cell_of(std::size_t order) const {
  std::vector<std::size_t> owner(order, cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c)
    for (Vertex v : cells[c]) owner.at(v) = c;
  return owner;
}

VertexSet CliquePartition::cell_set(std::size_t cell, std::size_t order) const {
  return VertexSet(order, cells.at(cell));
}

void CliquePartition::normalize() {
  for (auto& cell : cells) std::sort(cell.begin(), cell.end());
  std::sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) {
    if (a.empty() || b.empty()) return a.size() < b.size();
    return a.front() < b.front();
  });
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet out = s;
  s.for_each([&](Vertex v) { out |= g.neighbors(v); });
  return out;
}

bool dominates(const Graph& g, const VertexSet& s, const VertexSet& targets) {
  return targets.is_subset_of(closed_neighborhood(g, s));
}

Graph complement(const Graph& g) {
  Graph c(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) c.add_edge(u, v);
  return c;
}

Graph cartesian_product(const Graph& g, const Graph& h, std::size_t vertex_cap) {
  if (g.order() == 0 || h.order() == 0) {
    throw std::invalid_argument("cartesian product of an empty graph");
  }
  const std::size_t n = g.order();
  if (h.order() > vertex_cap / n) {
    throw SizeError("product of orders " + std::to_string(n) + " and " +
                    std::to_string(h.order()) + " exceeds cap of " + std::to_string(vertex_cap));
  }
  Graph p(n * h.order(), vertex_cap);
  // G-fibers: copies of E(G) at every height h
  for (Vertex hv = 0; hv < h.order(); ++hv)
    for (auto [u, v] : g.edges()) p.add_edge(u + hv * n, v + hv * n);
  // H-fibers: copies of E(H) over every g
  for (auto [a, b] : h.edges())
    for (Vertex gv = 0; gv < n; ++gv) p.add_edge(gv + a * n, gv + b * n);
  return p;
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep) {
  Graph s(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.adjacent(keep[i], keep[j])) s.add_edge(i, j);
  return s;
}

std::optional<PartitionViolation> validate_partition(const Graph& g, const CliquePartition& p) {
  using Kind = PartitionViolation::Kind;
  std::vector<std::size_t> owner(g.order(), p.size());
  for (std::size_t c = 0; c < p.size(); ++c) {
    const auto& cell = p.cells[c];
    if (cell.empty()) return PartitionViolation{Kind::empty_cell, c, 0, "cell " + std::to_string(c) + " is empty"};
    for (Vertex v : cell) {
      if (v >= g.order()) {
        return PartitionViolation{Kind::out_of_range, c, v,
                                  "vertex " + std::to_string(v) + " in cell " + std::to_string(c) +
                                      " is out of range"};
      }
      if (owner[v] != p.size()) {
        return PartitionViolation{Kind::duplicated_vertex, c, v,
                                  "vertex " + std::to_string(v) + " appears in cells " +
                                      std::to_string(owner[v]) + " and " + std::to_string(c)};
      }
      owner[v] = c;
    }
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (owner[v] == p.size()) {
      return PartitionViolation{Kind::missing_vertex, 0, v,
                                "vertex " + std::to_string(v) + " is not covered by any cell"};
    }
  }
  for (std::size_t c = 0; c < p.size(); ++c) {
    const auto& cell = p.cells[c];
    for (std::size_t i = 0; i < cell.size(); ++i)
      for (std::size_t j = i + 1; j < cell.size(); ++j)
        if (!g.adjacent(cell[i], cell[j])) {
          return PartitionViolation{Kind::not_a_clique, c, cell[i],
                                    "cell " + std::to_string(c) + " is not a clique: " +
                                        std::to_string(cell[i]) + " and " +
                                        std::to_string(cell[j]) + " are not adjacent"};
        }
  }
  return std::nullopt;
}

Graph saturate_cells(const Graph& g, const CliquePartition& p) {
  Graph out = g;
  for (const auto& cell : p.cells)
    for (std::size_t i = 0; i < cell.size(); ++i)
      for (std::size_t j = i + 1; j < cell.size(); ++j) out.add_edge(cell[i], cell[j]);
  return out;
}

}  // namespace vizlab
