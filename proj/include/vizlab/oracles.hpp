#pragma once

// Exhaustive reference computations. They share no code with the
// branch-and-bound solvers and exist to cross-check them on small graphs.

#include <cstddef>
#include <optional>
#include <vector>

#include "vizlab/graph.hpp"

namespace vizlab::oracle {

inline constexpr std::size_t kMaxOracleOrder = 20;

/// Smallest k such that some k-subset S has N[S] = V, trying subsets in
/// increasing cardinality. Throws SizeError above kMaxOracleOrder vertices.
std::size_t brute_force_gamma(const Graph& g);

/// Same answer, each cardinality level scanned with an OpenMP parallel loop
/// over all 2^n masks. `threads` <= 0 uses the OpenMP default.
std::size_t brute_force_gamma_parallel(const Graph& g, int threads = 0);

/// Minimum number of cliques partitioning V, by walking every set partition
/// (restricted growth strings) whose blocks stay cliques. Intended for n <= 10.
std::size_t brute_force_theta(const Graph& g);

/// Smallest subset of `allowed` whose closed neighborhood covers `targets`,
/// by increasing cardinality; nullopt when even all of `allowed` fails.
std::optional<std::vector<Vertex>> brute_force_cover(const Graph& g, const std::vector<Vertex>& allowed,
                                                     const std::vector<Vertex>& targets);

/// Every dominating set of size exactly k, in lexicographic order.
std::vector<std::vector<Vertex>> all_dominating_sets_of_size(const Graph& g, std::size_t k);

}  // namespace vizlab::oracle
