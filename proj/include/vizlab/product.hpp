#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "vizlab/budget.hpp"
#include "vizlab/graph.hpp"
#include "vizlab/solvers.hpp"

namespace vizlab {

using Rational = boost::rational<std::int64_t>;

/// γ(G □ H) on the canonical layout, delegated to domination_number.
DominationResult product_gamma(const Graph& g, const Graph& h, Budget& budget);

// Bound checks. Exact integer arithmetic only; the √γ(G) term is handled by
// squaring, so perfect squares cannot produce rounding ties.

bool check_vizing(std::int64_t gamma_g, std::int64_t gamma_h, std::int64_t gamma_product);

/// γ(G□H) >= (k - √k)·γ(H): with s = k·γ(H) - γ(G□H), holds iff s <= 0 or s² <= k·γ(H)².
bool check_theorem_a1(std::int64_t k, std::int64_t gamma_h, std::int64_t gamma_product);

/// value >= (k - √k)·γ(H), decided by the same squared comparison.
bool at_least_sqrt_bound(const Rational& value, std::int64_t k, std::int64_t gamma_h);

/// min over integer r in [1, k] of max{(k - r)·γ(H), r/(r+1)·(k + 1)·γ(H)}.
Rational minmax_bound(std::int64_t k, std::int64_t gamma_h);

bool check_corollary(std::int64_t k, std::int64_t gamma_h, std::int64_t gamma_product, std::int64_t r);

/// 2·γ(G□H) >= γ(G)·γ(H) + min{γ(G), γ(H)}.
bool check_suen_tarr(std::int64_t gamma_g, std::int64_t gamma_h, std::int64_t gamma_product);

/// A G-cell C_i^h: clique i of G's partition at height h.
struct CellId {
  std::size_t clique_index;
  Vertex h;
  friend auto operator<=>(const CellId&, const CellId&) = default;
};

/// For each h, the cliques i with D ∩ (C_i × N_H[h]) = ∅. Every h appears as a
/// key. `d` must dominate `gh` (= G □ H in canonical layout).
std::map<Vertex, std::vector<std::size_t>> missing_cells(const Graph& gh, const CliquePartition& g_partition,
                                                         const VertexSet& d, const Graph& h);

struct SimpleLabeling {
  std::map<Vertex, std::size_t> labels;  // flat product vertex in D -> clique index
  /// For every h and i with D ∩ (C_i × N[h]) nonempty, some vertex there is
  /// labelled i and the label-i projection onto H reaches h (h itself counts).
  bool postcondition_holds = false;
  std::string failure;
};

SimpleLabeling simple_labeling(const Graph& gh, const CliquePartition& g_partition, const VertexSet& d,
                               const Graph& h);

/// Column projection of the label-i vertices of D onto V(H).
VertexSet label_projection(const SimpleLabeling& labeling, std::size_t label, std::size_t g_order,
                           std::size_t h_order);

struct FiberProfile {
  Outcome outcome = Outcome::unknown;
  std::size_t max_missing_per_fiber = 0;
  std::size_t sets_examined = 0;
  std::size_t fibers_with_two_or_more = 0;
  bool complete = false;  // every minimum dominating set was examined
};

/// Evidence probe: over up to `enumeration_limit` minimum dominating sets of
/// G □ H, the largest number of missing cells in one G-fiber, using the
/// solver's θ-optimal partition of G. Reports, never asserts.
FiberProfile fiber_missing_profile(const Graph& g, const Graph& h, std::size_t enumeration_limit,
                                   Budget& budget);

struct BoundResult {
  std::string name;
  Rational lhs;
  Rational rhs;
  std::string rule;  // how lhs and rhs decide `holds`
  bool applicable = true;
  bool holds = false;
};

struct ProductAnalysisReport {
  std::string g_id;
  std::string h_id;
  Outcome gamma_g_outcome = Outcome::unknown;
  Outcome gamma_h_outcome = Outcome::unknown;
  Outcome gamma_product_outcome = Outcome::unknown;
  std::size_t gamma_g = 0;
  std::size_t gamma_h = 0;
  std::size_t gamma_product = 0;
  std::optional<VertexSet> product_witness;
  Outcome class_outcome = Outcome::unknown;
  std::optional<std::size_t> class_index_g;
  Outcome r_outcome = Outcome::unknown;  // infeasible: no set with that excess ("absent")
  std::optional<std::size_t> min_restraint_r;  // on the class witness, excess = class index
  std::vector<BoundResult> bound_results;
  std::map<Vertex, std::size_t> missing_cell_counts;  // for the solver's witness
  std::size_t max_missing_per_fiber = 0;
  bool vizing_violated = false;

  const BoundResult* bound(const std::string& name) const;
};

/// Everything for one (G, H) pair. Bounds whose hypotheses are not
/// established (unknown γ or class) are reported as not applicable.
ProductAnalysisReport analyze_product(const Graph& g, const Graph& h, Budget& budget);

}  // namespace vizlab
