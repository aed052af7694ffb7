#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "vizlab/budget.hpp"
#include "vizlab/graph.hpp"

namespace vizlab {

/// Restraint bookkeeping for a vertex set D against a clique partition.
///
/// dominated_cells are all cells disjoint from D lying inside N[D] (the
/// maximal choice, so l is as large as possible); intersected_cells are the
/// cells meeting D. restraint = l + t, excess = restraint - |D|.
struct RestraintRecord {
  VertexSet set_d;
  std::vector<std::size_t> dominated_cells;
  std::vector<std::size_t> intersected_cells;
  std::size_t l = 0;
  std::size_t t = 0;
  std::size_t restraint = 0;
  long excess = 0;
};

/// `cells_in_scope`, when given, limits both cell lists to those cells.
RestraintRecord restraint_profile(const Graph& g, const CliquePartition& p, const VertexSet& d,
                                  const std::vector<std::size_t>* cells_in_scope = nullptr);

struct MinRestrainingResult {
  Outcome outcome = Outcome::unknown;  // infeasible means "absent"
  std::size_t r = 0;
  std::optional<RestraintRecord> record;
};

/// Smallest D with |D| <= size_cap (default γ(G)) and excess exactly n,
/// found by enumerating subsets in increasing size, lexicographically.
MinRestrainingResult min_restraining_set(const Graph& g, const CliquePartition& p, long excess_target,
                                         Budget& budget, std::optional<std::size_t> size_cap = {});

/// One instance where a lemma failed; its presence means a defect upstream.
struct LemmaCounterexample {
  std::vector<std::size_t> target_cells;  // tool lemma: C_{i_1..i_l}; restraining lemma: D's cells
  VertexSet set_d;
  std::optional<VertexSet> set_e;
  std::size_t l = 0;
  std::size_t t = 0;
  long lhs = 0;
  long rhs = 0;
  std::string message;
};

struct LemmaReport {
  Outcome outcome = Outcome::unknown;  // exact: every instance was checked
  std::size_t checked = 0;
  std::size_t skipped = 0;  // infeasible instances, outside the lemma's hypothesis
  std::optional<LemmaCounterexample> counterexample;

  bool ok() const { return outcome == Outcome::exact && !counterexample; }
};

/// For every nonempty proper subset of cells, a minimum outside dominator D
/// must satisfy sum over cells C meeting D of (|C ∩ D| - 1) >= l - n.
/// Requires |p| = γ(G) + n.
LemmaReport verify_lemma_tool(const Graph& g, const CliquePartition& p, long n, Budget& budget);

inline constexpr std::size_t kRestrainingLemmaMaxOrder = 12;

/// For every nonempty D and every E ⊆ V(G) minus the cells D dominates or
/// meets, E's restraint over the remaining cells stays below
/// |D| + |E| + n - (l + t) + 1. E = ∅ is included (it says excess(D) <= n).
/// Exhaustive; requires |p| = γ(G) + n and at most kRestrainingLemmaMaxOrder vertices.
LemmaReport verify_lemma_restraining(const Graph& g, const CliquePartition& p, long n,
                                     Budget& budget);

}  // namespace vizlab
