#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "vizlab/budget.hpp"
#include "vizlab/cover_search.hpp"
#include "vizlab/graph.hpp"

namespace vizlab {

/// A vertex set claimed to dominate `targets`.
struct DominationCertificate {
  VertexSet dominators;
  VertexSet targets;
  std::size_t cardinality = 0;

  /// Re-checks N[dominators] ⊇ targets and the cardinality, independently of any solver.
  bool verify(const Graph& g) const;
};

struct DominationResult {
  Outcome outcome = Outcome::unknown;
  std::size_t lower = 0;
  std::size_t upper = CoverResult::kNone;
  std::optional<DominationCertificate> witness;  // best set found; optimal iff exact

  bool exact() const { return outcome == Outcome::exact; }
  /// The exact value; throws std::logic_error for unknown/infeasible outcomes.
  std::size_t value() const;
};

struct CliqueCoverCertificate {
  CliquePartition partition;
  std::size_t size = 0;

  bool verify(const Graph& g) const;
};

struct CliqueCoverResult {
  Outcome outcome = Outcome::unknown;
  std::size_t lower = 0;
  std::size_t upper = CoverResult::kNone;
  std::optional<CliqueCoverCertificate> witness;

  bool exact() const { return outcome == Outcome::exact; }
  std::size_t value() const;
};

/// γ(G) with a minimum dominating set as witness.
DominationResult domination_number(const Graph& g, Budget& budget);

/// Minimum D ⊆ V(G) minus the target cells dominating every target-cell vertex.
/// `infeasible` when some target vertex has no neighbor outside the target cells.
/// Requires a nonempty proper subset of cell indices.
DominationResult external_domination(const Graph& g, const CliquePartition& p,
                                     const std::vector<std::size_t>& target_cells, Budget& budget);

/// θ(G) as the chromatic number of the complement: DSATUR branch and bound
/// seeded with a greedy clique, colour classes read back as cliques of G.
CliqueCoverResult clique_cover_number(const Graph& g, Budget& budget);

struct ColoringResult {
  Outcome outcome = Outcome::unknown;
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::vector<std::size_t> colors;  // best coloring found
};

ColoringResult chromatic_number(const Graph& g, Budget& budget);

struct DominatingSetEnumeration {
  Outcome gamma_outcome = Outcome::unknown;
  std::size_t gamma = 0;
  std::vector<DominationCertificate> sets;  // lexicographic by sorted members
  bool complete = false;                    // false if the limit or budget cut it short
};

/// Minimum dominating sets in lexicographic order, at most `limit` of them.
DominatingSetEnumeration enumerate_min_dominating_sets(const Graph& g, std::size_t limit,
                                                       Budget& budget);

/// Closed-neighborhood cover instance over all of V(G).
CoverInstance domination_instance(const Graph& g);

}  // namespace vizlab
