#include "vizlab/restraint.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

#include "vizlab/solvers.hpp"

namespace vizlab {

RestraintRecord restraint_profile(const Graph& g, const CliquePartition& p, const VertexSet& d,
                                  const std::vector<std::size_t>* cells_in_scope) {
  if (d.empty()) throw std::invalid_argument("restraint profile of an empty set");
  RestraintRecord rec;
  rec.set_d = d;
  const VertexSet reach = closed_neighborhood(g, d);
  auto consider = [&](std::size_t c) {
    const VertexSet cell = p.cell_set(c, g.order());
    if (cell.intersects(d)) {
      rec.intersected_cells.push_back(c);
    } else if (cell.is_subset_of(reach)) {
      rec.dominated_cells.push_back(c);
    }
  };
  if (cells_in_scope) {
    for (std::size_t c : *cells_in_scope) consider(c);
  } else {
    for (std::size_t c = 0; c < p.size(); ++c) consider(c);
  }
  rec.l = rec.dominated_cells.size();
  rec.t = rec.intersected_cells.size();
  rec.restraint = rec.l + rec.t;
  rec.excess = static_cast<long>(rec.restraint) - static_cast<long>(d.count());
  return rec;
}

namespace {

/// Lexicographic k-combinations of 0..n-1; returns false when exhausted.
bool next_combination(std::vector<Vertex>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
  if (i == 0) return false;
  ++idx[i - 1];
  for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

std::size_t require_partition_size(const Graph& g, const CliquePartition& p, long n, Budget& budget,
                                   bool& unknown) {
  if (auto v = validate_partition(g, p)) throw std::invalid_argument(v->message);
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  const DominationResult gamma = domination_number(g, budget);
  if (!gamma.exact()) {
    unknown = true;
    return 0;
  }
  if (p.size() != gamma.value() + static_cast<std::size_t>(n)) {
    throw std::invalid_argument("partition has " + std::to_string(p.size()) +
                                " cells but gamma + n = " +
                                std::to_string(gamma.value() + static_cast<std::size_t>(n)));
  }
  return gamma.value();
}

}  // namespace

MinRestrainingResult min_restraining_set(const Graph& g, const CliquePartition& p, long excess_target,
                                         Budget& budget, std::optional<std::size_t> size_cap) {
  if (auto v = validate_partition(g, p)) throw std::invalid_argument(v->message);
  MinRestrainingResult out;
  std::size_t cap = 0;
  if (size_cap) {
    cap = *size_cap;
  } else {
    const DominationResult gamma = domination_number(g, budget);
    if (!gamma.exact()) return out;
    cap = gamma.value();
  }
  const std::size_t n = g.order();
  cap = std::min(cap, n);
  for (std::size_t size = 1; size <= cap; ++size) {
    std::vector<Vertex> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    do {
      if (!budget.spend()) return out;
      const VertexSet d(n, idx);
      RestraintRecord rec = restraint_profile(g, p, d);
      if (rec.excess == excess_target) {
        out.outcome = Outcome::exact;
        out.r = size;
        out.record = std::move(rec);
        return out;
      }
    } while (next_combination(idx, n));
  }
  out.outcome = Outcome::infeasible;
  return out;
}

LemmaReport verify_lemma_tool(const Graph& g, const CliquePartition& p, long n, Budget& budget) {
  LemmaReport report;
  bool unknown = false;
  require_partition_size(g, p, n, budget, unknown);
  if (unknown) return report;

  const std::size_t m = p.size();
  if (m >= 63) throw SizeError("tool lemma sweep enumerates 2^cells subsets; too many cells");
  const auto owner = p.cell_of(g.order());
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << m); ++mask) {
    std::vector<std::size_t> targets;
    for (std::size_t c = 0; c < m; ++c)
      if ((mask >> c) & 1U) targets.push_back(c);
    const DominationResult d = external_domination(g, p, targets, budget);
    if (d.outcome == Outcome::infeasible) {
      ++report.skipped;
      continue;
    }
    if (!d.exact()) return report;

    const VertexSet& set_d = d.witness->dominators;
    std::vector<std::size_t> hits(m, 0);
    set_d.for_each([&](Vertex v) { ++hits[owner[v]]; });
    std::size_t t = 0;
    for (std::size_t h : hits) t += h > 0;
    const long lhs = static_cast<long>(set_d.count()) - static_cast<long>(t);
    const long rhs = static_cast<long>(targets.size()) - n;
    ++report.checked;
    if (lhs < rhs) {
      report.counterexample = LemmaCounterexample{targets, set_d, std::nullopt, targets.size(), t,
                                                  lhs, rhs, "sum(|C ∩ D| - 1) < l - n"};
      break;
    }
  }
  report.outcome = Outcome::exact;
  return report;
}

LemmaReport verify_lemma_restraining(const Graph& g, const CliquePartition& p, long n,
                                     Budget& budget) {
  using Mask = std::uint32_t;
  const std::size_t order = g.order();
  if (order > kRestrainingLemmaMaxOrder) {
    throw SizeError("restraining lemma sweep is exhaustive; limited to " +
                    std::to_string(kRestrainingLemmaMaxOrder) + " vertices");
  }
  LemmaReport report;
  bool unknown = false;
  require_partition_size(g, p, n, budget, unknown);
  if (unknown) return report;

  const std::size_t m = p.size();
  const Mask all = static_cast<Mask>((Mask{1} << order) - 1);
  std::vector<Mask> cell_mask(m, 0);
  for (std::size_t c = 0; c < m; ++c)
    for (Vertex v : p.cells[c]) cell_mask[c] |= Mask{1} << v;
  std::vector<Mask> closed(all + 1, 0);
  for (Mask s = 1; s <= all; ++s) {
    const auto v = static_cast<Vertex>(std::countr_zero(s));
    Mask nb = Mask{1} << v;
    for (Vertex u = 0; u < order; ++u)
      if (g.adjacent(u, v)) nb |= Mask{1} << u;
    closed[s] = closed[s & (s - 1)] | nb;
  }

  // (dominated, intersected) cell bitmaps of `set` over the cells in `scope`
  auto profile = [&](Mask set, std::uint64_t scope, std::uint64_t& dom, std::uint64_t& hit) {
    dom = hit = 0;
    for (std::size_t c = 0; c < m; ++c) {
      if (!((scope >> c) & 1U)) continue;
      if (cell_mask[c] & set) {
        hit |= std::uint64_t{1} << c;
      } else if ((cell_mask[c] & closed[set]) == cell_mask[c]) {
        dom |= std::uint64_t{1} << c;
      }
    }
  };
  auto cell_list = [&](std::uint64_t bits) {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < m; ++c)
      if ((bits >> c) & 1U) out.push_back(c);
    return out;
  };
  auto to_set = [&](Mask s) {
    VertexSet out(order);
    for (Vertex v = 0; v < order; ++v)
      if ((s >> v) & 1U) out.insert(v);
    return out;
  };

  const std::uint64_t every_cell = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
  for (Mask d = 1; d <= all; ++d) {
    std::uint64_t dom = 0;
    std::uint64_t hit = 0;
    profile(d, every_cell, dom, hit);
    const long l = std::popcount(dom);
    const long t = std::popcount(hit);
    const long size_d = std::popcount(d);
    const std::uint64_t rest_cells = every_cell & ~(dom | hit);
    Mask rest = 0;
    for (std::size_t c = 0; c < m; ++c)
      if ((rest_cells >> c) & 1U) rest |= cell_mask[c];

    // every E ⊆ rest, including the empty set
    Mask e = 0;
    while (true) {
      if (!budget.spend()) return report;
      std::uint64_t e_dom = 0;
      std::uint64_t e_hit = 0;
      if (e != 0) profile(e, rest_cells, e_dom, e_hit);
      const long e_restraint = std::popcount(e_dom) + std::popcount(e_hit);
      const long bound = size_d + std::popcount(e) + n - (l + t) + 1;
      ++report.checked;
      if (e_restraint >= bound) {
        report.counterexample = LemmaCounterexample{
            cell_list(dom | hit), to_set(d), to_set(e), static_cast<std::size_t>(l),
            static_cast<std::size_t>(t), e_restraint, bound,
            "remaining graph holds E with restraint >= |D| + |E| + n - (l + t) + 1"};
        report.outcome = Outcome::exact;
        return report;
      }
      if (e == rest) break;
      e = ((e | ~rest) + 1) & rest;  // next subset of rest
    }
  }
  report.outcome = Outcome::exact;
  return report;
}

}  // namespace vizlab
