#include "vizlab/solvers.hpp"

#include <algorithm>
#include <stdexcept>

namespace vizlab {

bool DominationCertificate::verify(const Graph& g) const {
  if (dominators.universe() != g.order() || targets.universe() != g.order()) return false;
  return cardinality == dominators.count() && dominates(g, dominators, targets);
}

std::size_t DominationResult::value() const {
  if (outcome != Outcome::exact) {
    throw std::logic_error(std::string("domination value requested from ") + to_string(outcome) +
                           " outcome");
  }
  return upper;
}

bool CliqueCoverCertificate::verify(const Graph& g) const {
  return size == partition.size() && !validate_partition(g, partition).has_value();
}

std::size_t CliqueCoverResult::value() const {
  if (outcome != Outcome::exact) {
    throw std::logic_error(std::string("clique cover value requested from ") +
                           to_string(outcome) + " outcome");
  }
  return upper;
}

CoverInstance domination_instance(const Graph& g) {
  CoverInstance in;
  in.reach.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) in.reach.push_back(g.closed_neighbors(v));
  in.candidates = VertexSet::full(g.order());
  in.targets = VertexSet::full(g.order());
  return in;
}

namespace {

DominationResult from_cover(const CoverResult& cover, const VertexSet& targets) {
  DominationResult r;
  r.outcome = cover.outcome;
  r.lower = cover.lower;
  r.upper = cover.upper;
  if (cover.outcome != Outcome::infeasible) {
    r.witness = DominationCertificate{cover.best, targets, cover.best.count()};
  }
  return r;
}

}  // namespace

DominationResult domination_number(const Graph& g, Budget& budget) {
  if (g.order() == 0) throw std::invalid_argument("domination number of the empty graph");
  const CoverInstance in = domination_instance(g);
  return from_cover(minimum_cover(in, budget), in.targets);
}

DominationResult external_domination(const Graph& g, const CliquePartition& p,
                                     const std::vector<std::size_t>& target_cells, Budget& budget) {
  if (target_cells.empty()) throw std::invalid_argument("external domination needs target cells");
  VertexSet targets(g.order());
  for (std::size_t c : target_cells) {
    if (c >= p.size()) throw std::out_of_range("target cell index out of range");
    targets |= p.cell_set(c, g.order());
  }
  if (targets.count() == g.order()) {
    throw std::invalid_argument("external domination targets must be a proper subset of the cells");
  }
  CoverInstance in = domination_instance(g);
  in.candidates = VertexSet::full(g.order()) - targets;
  in.targets = targets;
  return from_cover(minimum_cover(in, budget), targets);
}

namespace {

constexpr std::size_t kUncolored = static_cast<std::size_t>(-1);

/// Largest clique found greedily from every start vertex.
std::vector<Vertex> greedy_clique(const Graph& g) {
  std::vector<Vertex> best;
  for (Vertex start = 0; start < g.order(); ++start) {
    std::vector<Vertex> clique{start};
    VertexSet candidates = g.neighbors(start);
    while (!candidates.empty()) {
      Vertex pick = g.order();
      std::size_t pick_degree = 0;
      candidates.for_each([&](Vertex v) {
        const std::size_t d = (g.neighbors(v) & candidates).count();
        if (pick == g.order() || d > pick_degree) {
          pick = v;
          pick_degree = d;
        }
      });
      clique.push_back(pick);
      candidates &= g.neighbors(pick);
    }
    if (clique.size() > best.size()) best = std::move(clique);
  }
  return best;
}

class Dsatur {
 public:
  Dsatur(const Graph& g, Budget& budget)
      : g_(g), n_(g.order()), budget_(budget), colors_(n_, kUncolored), counts_(n_ * n_, 0),
        saturation_(n_, 0) {}

  void assign(Vertex v, std::size_t c) {
    colors_[v] = c;
    g_.neighbors(v).for_each([&](Vertex u) {
      if (counts_[u * n_ + c]++ == 0) ++saturation_[u];
    });
  }

  void unassign(Vertex v) {
    const std::size_t c = colors_[v];
    colors_[v] = kUncolored;
    g_.neighbors(v).for_each([&](Vertex u) {
      if (--counts_[u * n_ + c] == 0) --saturation_[u];
    });
  }

  // max saturation, then most uncolored neighbors, then lowest index
  Vertex select() const {
    Vertex pick = n_;
    std::size_t pick_sat = 0;
    std::size_t pick_deg = 0;
    for (Vertex v = 0; v < n_; ++v) {
      if (colors_[v] != kUncolored) continue;
      std::size_t deg = 0;
      g_.neighbors(v).for_each([&](Vertex u) { deg += colors_[u] == kUncolored; });
      if (pick == n_ || saturation_[v] > pick_sat ||
          (saturation_[v] == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = saturation_[v];
        pick_deg = deg;
      }
    }
    return pick;
  }

  std::size_t greedy() {
    std::size_t used = 0;
    for (std::size_t step = 0; step < n_; ++step) {
      const Vertex v = select();
      std::size_t c = 0;
      while (counts_[v * n_ + c] > 0) ++c;
      assign(v, c);
      used = std::max(used, c + 1);
    }
    return used;
  }

  ColoringResult solve() {
    ColoringResult result;
    const auto clique = greedy_clique(g_);
    result.lower = clique.size();

    result.upper = greedy();
    result.colors = colors_;
    for (Vertex v = 0; v < n_; ++v) unassign(v);
    if (result.lower >= result.upper) {
      result.outcome = Outcome::exact;
      return result;
    }

    best_ = result.upper;
    best_colors_ = result.colors;
    lower_ = result.lower;
    // the clique takes distinct colours in any colouring; fixing them breaks symmetry
    for (std::size_t i = 0; i < clique.size(); ++i) assign(clique[i], i);
    dfs(clique.size(), clique.size());

    result.upper = best_;
    result.colors = best_colors_;
    if (aborted_) {
      result.outcome = Outcome::unknown;
    } else {
      result.outcome = Outcome::exact;
      result.lower = best_;
    }
    return result;
  }

 private:
  void dfs(std::size_t colored, std::size_t used) {
    if (colored == n_) {
      best_ = used;
      best_colors_ = colors_;
      return;
    }
    const Vertex v = select();
    for (std::size_t c = 0; c <= used; ++c) {
      if (counts_[v * n_ + c] > 0) continue;
      const std::size_t next_used = std::max(used, c + 1);
      if (next_used >= best_) break;
      if (!budget_.spend()) {
        aborted_ = true;
        return;
      }
      assign(v, c);
      dfs(colored + 1, next_used);
      unassign(v);
      if (aborted_ || best_ <= lower_) return;
    }
  }

  const Graph& g_;
  std::size_t n_;
  Budget& budget_;
  std::vector<std::size_t> colors_;
  std::vector<std::size_t> counts_;
  std::vector<std::size_t> saturation_;
  std::size_t best_ = 0;
  std::size_t lower_ = 0;
  std::vector<std::size_t> best_colors_;
  bool aborted_ = false;
};

CliquePartition partition_from_colors(const std::vector<std::size_t>& colors) {
  CliquePartition p;
  for (Vertex v = 0; v < colors.size(); ++v) {
    if (colors[v] >= p.cells.size()) p.cells.resize(colors[v] + 1);
    p.cells[colors[v]].push_back(v);
  }
  std::erase_if(p.cells, [](const auto& cell) { return cell.empty(); });
  p.normalize();
  return p;
}

}  // namespace

ColoringResult chromatic_number(const Graph& g, Budget& budget) {
  if (g.order() == 0) return {Outcome::exact, 0, 0, {}};
  return Dsatur(g, budget).solve();
}

CliqueCoverResult clique_cover_number(const Graph& g, Budget& budget) {
  if (g.order() == 0) throw std::invalid_argument("clique cover of the empty graph");
  const ColoringResult coloring = chromatic_number(complement(g), budget);
  CliqueCoverResult r;
  r.outcome = coloring.outcome;
  r.lower = coloring.lower;
  r.upper = coloring.upper;
  CliquePartition p = partition_from_colors(coloring.colors);
  const std::size_t size = p.size();
  r.witness = CliqueCoverCertificate{std::move(p), size};
  return r;
}

namespace {

class DominatingSetEnumerator {
 public:
  DominatingSetEnumerator(const Graph& g, std::size_t gamma, std::size_t limit, Budget& budget)
      : g_(g), n_(g.order()), gamma_(gamma), limit_(limit), budget_(budget), last_coverer_(n_) {
    for (Vertex v = 0; v < n_; ++v) {
      const auto members = g.closed_neighbors(v).members();
      last_coverer_[v] = members.back();
      max_reach_ = std::max(max_reach_, members.size());
    }
  }

  void run(DominatingSetEnumeration& out) {
    out_ = &out;
    VertexSet uncovered = VertexSet::full(n_);
    dfs(0, uncovered);
    out.complete = !aborted_ && !truncated_;
  }

 private:
  void dfs(Vertex start, const VertexSet& uncovered) {
    const std::size_t depth = chosen_.size();
    if (uncovered.empty()) {
      if (depth != gamma_) return;  // cannot happen below γ; a γ-set is minimal in size
      if (out_->sets.size() == limit_) {
        truncated_ = true;
        return;
      }
      VertexSet s(n_, chosen_);
      out_->sets.push_back(DominationCertificate{s, VertexSet::full(n_), gamma_});
      return;
    }
    if (depth == gamma_) return;
    const std::size_t remaining = gamma_ - depth;
    if (uncovered.count() > remaining * max_reach_) return;
    bool reachable = true;
    uncovered.for_each([&](Vertex w) { reachable = reachable && last_coverer_[w] >= start; });
    if (!reachable) return;

    for (Vertex u = start; u + remaining <= n_; ++u) {
      if (!budget_.spend()) {
        aborted_ = true;
        return;
      }
      chosen_.push_back(u);
      dfs(u + 1, uncovered - g_.closed_neighbors(u));
      chosen_.pop_back();
      if (aborted_ || truncated_) return;
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::size_t gamma_;
  std::size_t limit_;
  Budget& budget_;
  std::vector<Vertex> last_coverer_;
  std::size_t max_reach_ = 0;
  std::vector<Vertex> chosen_;
  DominatingSetEnumeration* out_ = nullptr;
  bool aborted_ = false;
  bool truncated_ = false;
};

}  // namespace

DominatingSetEnumeration enumerate_min_dominating_sets(const Graph& g, std::size_t limit,
                                                       Budget& budget) {
  DominatingSetEnumeration out;
  const DominationResult gamma = domination_number(g, budget);
  out.gamma_outcome = gamma.outcome;
  if (!gamma.exact()) {
    out.gamma = gamma.lower;
    return out;
  }
  out.gamma = gamma.value();
  DominatingSetEnumerator(g, out.gamma, limit, budget).run(out);
  return out;
}

}  // namespace vizlab
