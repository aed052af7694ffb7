#include "vizlab/classifier.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "vizlab/cover_search.hpp"
#include "vizlab/solvers.hpp"

namespace vizlab {

namespace {

constexpr std::size_t kNoCell = static_cast<std::size_t>(-1);

/// Assigns vertices to at most `max_cells` cells, keeping γ of the
/// cell-saturated graph at `gamma`.
class PartitionSearch {
 public:
  PartitionSearch(const Graph& g, std::size_t gamma, Budget& budget)
      : g_(g), n_(g.order()), gamma_(gamma), budget_(budget), cell_of_(n_, kNoCell) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), Vertex{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    base_.reserve(n_);
    for (Vertex v = 0; v < n_; ++v) base_.push_back(g.closed_neighbors(v));
  }

  /// true: found (see partition()); false: refuted; nullopt: budget ran out.
  std::optional<bool> search(std::size_t max_cells) {
    max_cells_ = max_cells;
    cells_.clear();
    std::fill(cell_of_.begin(), cell_of_.end(), kNoCell);
    aborted_ = false;
    const bool found = dfs(0);
    if (found) return true;
    if (aborted_) return std::nullopt;
    return false;
  }

  CliquePartition partition() const {
    CliquePartition p;
    for (const auto& cell : cells_) p.cells.push_back(cell.members());
    p.normalize();
    return p;
  }

 private:
  // γ(G + cell edges) ≥ gamma, i.e. no gamma-1 vertices dominate it
  std::optional<bool> preserves_gamma() {
    if (gamma_ <= 1) return true;
    CoverInstance in;
    in.reach = base_;
    for (Vertex v = 0; v < n_; ++v)
      if (cell_of_[v] != kNoCell) in.reach[v] |= cells_[cell_of_[v]];
    if (gamma_ == 2) {
      // cheap test: γ ≥ 2 iff no vertex reaches everything
      for (const auto& row : in.reach)
        if (row.count() == n_) return false;
      return true;
    }
    in.candidates = VertexSet::full(n_);
    in.targets = VertexSet::full(n_);
    const auto dominated = has_cover_within(in, gamma_ - 1, budget_);
    if (!dominated) return std::nullopt;
    return !*dominated;
  }

  bool dfs(std::size_t i) {
    if (i == n_) return true;
    const Vertex v = order_[i];
    for (std::size_t c = 0; c < cells_.size(); ++c) {
      if (!budget_.spend()) {
        aborted_ = true;
        return false;
      }
      cells_[c].insert(v);
      cell_of_[v] = c;
      const auto ok = preserves_gamma();
      if (!ok) {
        aborted_ = true;
      } else if (*ok && dfs(i + 1)) {
        return true;
      }
      cells_[c].erase(v);
      cell_of_[v] = kNoCell;
      if (aborted_) return false;
    }
    if (cells_.size() < max_cells_) {
      // a singleton cell adds no edges, so γ is unchanged
      if (!budget_.spend()) {
        aborted_ = true;
        return false;
      }
      cells_.emplace_back(n_, std::initializer_list<Vertex>{v});
      cell_of_[v] = cells_.size() - 1;
      if (dfs(i + 1)) return true;
      cells_.pop_back();
      cell_of_[v] = kNoCell;
    }
    return false;
  }

  const Graph& g_;
  std::size_t n_;
  std::size_t gamma_;
  Budget& budget_;
  std::vector<Vertex> order_;
  std::vector<VertexSet> base_;
  std::vector<VertexSet> cells_;
  std::vector<std::size_t> cell_of_;
  std::size_t max_cells_ = 0;
  bool aborted_ = false;
};

ClassCertificate make_certificate(const Graph& g, CliquePartition p, std::size_t gamma) {
  ClassCertificate cert;
  cert.base = g;
  cert.witness = saturate_cells(g, p);
  cert.class_index = p.size() - gamma;
  cert.partition = std::move(p);
  cert.gamma = gamma;
  return cert;
}

}  // namespace

ClassResult class_index(const Graph& g, Budget& budget) {
  if (g.order() == 0) throw std::invalid_argument("class index of the empty graph");
  if (!g.is_connected()) throw std::invalid_argument("class index requires a connected graph");
  const std::uint64_t start = budget.used();
  ClassResult result;
  auto finish = [&]() -> ClassResult {
    result.nodes = budget.used() - start;
    return result;
  };

  const DominationResult gamma = domination_number(g, budget);
  if (!gamma.exact()) return finish();
  const std::size_t k = gamma.value();

  const CliqueCoverResult theta = clique_cover_number(g, budget);
  CliquePartition incumbent = theta.witness->partition;
  result.certificate = make_certificate(g, incumbent, k);
  result.class_index = incumbent.size() - k;
  if (incumbent.size() == k) {
    result.outcome = Outcome::exact;
    result.lower_bound = 0;
    return finish();
  }

  PartitionSearch search(g, k, budget);
  for (std::size_t cells = k; cells < incumbent.size(); ++cells) {
    const auto found = search.search(cells);
    if (!found) {
      result.outcome = Outcome::unknown;
      result.lower_bound = cells - k;
      return finish();
    }
    if (*found) {
      result.certificate = make_certificate(g, search.partition(), k);
      result.class_index = cells - k;
      result.lower_bound = result.class_index;
      result.outcome = Outcome::exact;
      return finish();
    }
  }
  result.outcome = Outcome::exact;
  result.lower_bound = result.class_index;
  return finish();
}

A0Result is_in_A0(const Graph& g, Budget& budget) {
  A0Result out;
  const DominationResult gamma = domination_number(g, budget);
  if (gamma.exact()) {
    const CliqueCoverResult theta = clique_cover_number(g, budget);
    if (theta.exact() && theta.value() == gamma.value()) {
      out.outcome = Outcome::exact;
      out.in_a0 = true;
      out.certificate = make_certificate(g, theta.witness->partition, gamma.value());
      return out;
    }
  }
  const ClassResult cls = class_index(g, budget);
  out.certificate = cls.certificate;
  if (cls.exact()) {
    out.outcome = Outcome::exact;
    out.in_a0 = cls.class_index == 0;
  } else if (cls.certificate && cls.class_index == 0) {
    // an incumbent at index 0 already proves membership
    out.outcome = Outcome::exact;
    out.in_a0 = true;
  }
  return out;
}

CertificateCheck verify_class_certificate(const ClassCertificate& cert, Budget& budget) {
  CertificateCheck check;
  auto fail = [&](std::string msg) { check.violations.push_back(std::move(msg)); };

  if (cert.witness.order() != cert.base.order()) {
    fail("vertex sets differ: witness is not spanning");
  } else if (!cert.base.is_spanning_subgraph_of(cert.witness)) {
    fail("base is not a spanning subgraph of the witness (missing edge)");
  }
  if (auto v = validate_partition(cert.witness, cert.partition)) {
    fail(v->kind == PartitionViolation::Kind::not_a_clique ? "cell not complete: " + v->message
                                                          : "invalid partition: " + v->message);
  }
  if (cert.partition.size() != cert.gamma + cert.class_index) {
    fail("partition size " + std::to_string(cert.partition.size()) + " != gamma + class_index = " +
         std::to_string(cert.gamma + cert.class_index));
  }
  if (cert.base.order() > 0) {
    const DominationResult base_gamma = domination_number(cert.base, budget);
    const DominationResult witness_gamma = cert.witness.order() == cert.base.order()
                                               ? domination_number(cert.witness, budget)
                                               : DominationResult{};
    if (!base_gamma.exact() || !witness_gamma.exact()) {
      check.unknown = true;
    } else {
      if (base_gamma.value() != cert.gamma) {
        fail("stored gamma " + std::to_string(cert.gamma) + " != gamma(base) " +
             std::to_string(base_gamma.value()));
      }
      if (witness_gamma.value() != base_gamma.value()) {
        fail("gamma not preserved: gamma(witness) = " + std::to_string(witness_gamma.value()) +
             ", gamma(base) = " + std::to_string(base_gamma.value()));
      }
    }
  }
  check.ok = check.violations.empty() && !check.unknown;
  return check;
}

}  // namespace vizlab
