#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "vizlab/budget.hpp"
#include "vizlab/vertex_set.hpp"

namespace vizlab {

/// Pick the fewest candidates u whose reach[u] together contain `targets`.
/// Domination is the case reach[u] = N[u]; the classifier also feeds
/// reach rows that include a vertex's cell-mates.
struct CoverInstance {
  std::vector<VertexSet> reach;
  VertexSet candidates;
  VertexSet targets;

  std::size_t universe() const { return targets.universe(); }
};

struct CoverResult {
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  Outcome outcome = Outcome::unknown;
  std::size_t lower = 0;
  std::size_t upper = kNone;  // size of `best`, kNone if nothing found
  VertexSet best;
};

/// Exact minimum cover by branch and bound: branch on the uncovered target
/// with the fewest usable coverers, trying coverers by decreasing gain
/// (ties to the lower index); prune with ceil(uncovered / max gain) and a
/// greedy incumbent.
CoverResult minimum_cover(const CoverInstance& instance, Budget& budget);

/// Decision form: is there a cover using at most `size` candidates?
/// nullopt when the budget ran out first. `witness` receives one if found.
std::optional<bool> has_cover_within(const CoverInstance& instance, std::size_t size,
                                     Budget& budget, VertexSet* witness = nullptr);

/// Greedy cover (largest gain first, lowest index on ties), or nullopt when
/// some target has no candidate coverer.
std::optional<VertexSet> greedy_cover(const CoverInstance& instance);

}  // namespace vizlab
