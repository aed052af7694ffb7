#include "vizlab/product.hpp"

#include <algorithm>
#include <stdexcept>

#include "vizlab/classifier.hpp"
#include "vizlab/graph6.hpp"
#include "vizlab/restraint.hpp"

namespace vizlab {

DominationResult product_gamma(const Graph& g, const Graph& h, Budget& budget) {
  return domination_number(cartesian_product(g, h), budget);
}

bool check_vizing(std::int64_t gamma_g, std::int64_t gamma_h, std::int64_t gamma_product) {
  return gamma_product >= gamma_g * gamma_h;
}

bool check_theorem_a1(std::int64_t k, std::int64_t gamma_h, std::int64_t gamma_product) {
  const std::int64_t s = k * gamma_h - gamma_product;
  return s <= 0 || s * s <= k * gamma_h * gamma_h;
}

bool at_least_sqrt_bound(const Rational& value, std::int64_t k, std::int64_t gamma_h) {
  // value >= k·γh - √k·γh  <=>  s := k·γh - value <= √k·γh
  const Rational s = Rational(k * gamma_h) - value;
  if (s <= 0) return true;
  return s * s <= Rational(k * gamma_h * gamma_h);
}

Rational minmax_bound(std::int64_t k, std::int64_t gamma_h) {
  if (k < 1 || gamma_h < 1) throw std::invalid_argument("minmax_bound needs k, gamma_h >= 1");
  std::optional<Rational> best;
  for (std::int64_t r = 1; r <= k; ++r) {
    const Rational undercount((k - r) * gamma_h);
    const Rational overcount(r * (k + 1) * gamma_h, r + 1);
    const Rational worst = std::max(undercount, overcount);
    if (!best || worst < *best) best = worst;
  }
  return *best;
}

bool check_corollary(std::int64_t k, std::int64_t gamma_h, std::int64_t gamma_product, std::int64_t r) {
  return gamma_product >= (k - r) * gamma_h;
}

bool check_suen_tarr(std::int64_t gamma_g, std::int64_t gamma_h, std::int64_t gamma_product) {
  return 2 * gamma_product >= gamma_g * gamma_h + std::min(gamma_g, gamma_h);
}

namespace {

std::size_t g_order_of(const Graph& gh, const Graph& h) {
  if (h.order() == 0 || gh.order() % h.order() != 0) {
    throw std::invalid_argument("product order is not a multiple of |V(H)|");
  }
  return gh.order() / h.order();
}

void require_dominating(const Graph& gh, const VertexSet& d, std::size_t g_order) {
  const VertexSet covered = closed_neighborhood(gh, d);
  for (Vertex v = 0; v < gh.order(); ++v) {
    if (!covered.contains(v)) {
      const auto pv = ProductVertex::from_flat(v, g_order);
      throw std::invalid_argument("D does not dominate product vertex (" + std::to_string(pv.g) +
                                  "," + std::to_string(pv.h) + ")");
    }
  }
}

/// hit[i * |H| + h] = D has a vertex in C_i × {h}
std::vector<char> cell_hits(const CliquePartition& p, const VertexSet& d, std::size_t g_order,
                            std::size_t h_order) {
  const auto owner = p.cell_of(g_order);
  std::vector<char> hit(p.size() * h_order, 0);
  d.for_each([&](Vertex v) {
    const auto pv = ProductVertex::from_flat(v, g_order);
    hit[owner.at(pv.g) * h_order + pv.h] = 1;
  });
  return hit;
}

}  // namespace

std::map<Vertex, std::vector<std::size_t>> missing_cells(const Graph& gh, const CliquePartition& g_partition,
                                                         const VertexSet& d, const Graph& h) {
  const std::size_t g_order = g_order_of(gh, h);
  std::vector<Vertex> base_fiber(g_order);
  for (Vertex i = 0; i < g_order; ++i) base_fiber[i] = i;
  // G^0 occupies the first |V(G)| flat indices and is a copy of G
  if (auto v = validate_partition(induced_subgraph(gh, base_fiber), g_partition)) {
    throw std::invalid_argument("G partition invalid: " + v->message);
  }
  require_dominating(gh, d, g_order);
  const auto hit = cell_hits(g_partition, d, g_order, h.order());
  std::map<Vertex, std::vector<std::size_t>> out;
  for (Vertex hv = 0; hv < h.order(); ++hv) {
    auto& list = out[hv];
    const VertexSet column = h.closed_neighbors(hv);
    for (std::size_t i = 0; i < g_partition.size(); ++i) {
      bool touched = false;
      column.for_each([&](Vertex x) { touched = touched || hit[i * h.order() + x]; });
      if (!touched) list.push_back(i);
    }
  }
  return out;
}

VertexSet label_projection(const SimpleLabeling& labeling, std::size_t label, std::size_t g_order,
                           std::size_t h_order) {
  VertexSet out(h_order);
  for (const auto& [flat, l] : labeling.labels)
    if (l == label) out.insert(ProductVertex::from_flat(flat, g_order).h);
  return out;
}

SimpleLabeling simple_labeling(const Graph& gh, const CliquePartition& g_partition, const VertexSet& d,
                               const Graph& h) {
  const std::size_t g_order = g_order_of(gh, h);
  require_dominating(gh, d, g_order);
  const auto owner = g_partition.cell_of(g_order);
  SimpleLabeling out;
  d.for_each([&](Vertex v) { out.labels[v] = owner.at(ProductVertex::from_flat(v, g_order).g); });

  out.postcondition_holds = true;
  for (std::size_t i = 0; i < g_partition.size() && out.postcondition_holds; ++i) {
    const VertexSet projection = label_projection(out, i, g_order, h.order());
    const VertexSet reach = closed_neighborhood(h, projection);
    for (Vertex hv = 0; hv < h.order(); ++hv) {
      bool present = false;
      bool labelled = false;
      for (Vertex x : h.closed_neighbors(hv).members()) {
        for (Vertex gv : g_partition.cells[i]) {
          const Vertex flat = ProductVertex{gv, x}.flat(g_order);
          if (!d.contains(flat)) continue;
          present = true;
          labelled = labelled || out.labels.at(flat) == i;
        }
      }
      if (!present) continue;
      if (!labelled || !reach.contains(hv)) {
        out.postcondition_holds = false;
        out.failure = "label " + std::to_string(i) + " does not reach column " + std::to_string(hv);
        break;
      }
    }
  }
  return out;
}

FiberProfile fiber_missing_profile(const Graph& g, const Graph& h, std::size_t enumeration_limit,
                                   Budget& budget) {
  FiberProfile out;
  const CliqueCoverResult theta = clique_cover_number(g, budget);
  if (!theta.exact()) return out;
  const Graph gh = cartesian_product(g, h);
  const DominatingSetEnumeration sets = enumerate_min_dominating_sets(gh, enumeration_limit, budget);
  if (sets.gamma_outcome != Outcome::exact) return out;
  for (const auto& cert : sets.sets) {
    const auto missing = missing_cells(gh, theta.witness->partition, cert.dominators, h);
    for (const auto& [hv, cells] : missing) {
      out.max_missing_per_fiber = std::max(out.max_missing_per_fiber, cells.size());
      out.fibers_with_two_or_more += cells.size() >= 2;
    }
    ++out.sets_examined;
  }
  out.complete = sets.complete;
  out.outcome = sets.complete ? Outcome::exact : Outcome::unknown;
  return out;
}

const BoundResult* ProductAnalysisReport::bound(const std::string& name) const {
  for (const auto& b : bound_results)
    if (b.name == name) return &b;
  return nullptr;
}

ProductAnalysisReport analyze_product(const Graph& g, const Graph& h, Budget& budget) {
  ProductAnalysisReport rep;
  rep.g_id = emit_graph6(g);
  rep.h_id = emit_graph6(h);

  const DominationResult gg = domination_number(g, budget);
  const DominationResult hh = domination_number(h, budget);
  const Graph gh = cartesian_product(g, h);
  const DominationResult pp = domination_number(gh, budget);
  rep.gamma_g_outcome = gg.outcome;
  rep.gamma_h_outcome = hh.outcome;
  rep.gamma_product_outcome = pp.outcome;
  rep.gamma_g = gg.exact() ? gg.value() : gg.lower;
  rep.gamma_h = hh.exact() ? hh.value() : hh.lower;
  rep.gamma_product = pp.exact() ? pp.value() : pp.lower;
  if (pp.witness) rep.product_witness = pp.witness->dominators;

  std::optional<ClassCertificate> cert;
  if (g.is_connected()) {
    const ClassResult cls = class_index(g, budget);
    rep.class_outcome = cls.outcome;
    if (cls.exact()) {
      rep.class_index_g = cls.class_index;
      cert = cls.certificate;
    }
  }
  if (cert) {
    const MinRestrainingResult mr = min_restraining_set(
        cert->witness, cert->partition, static_cast<long>(cert->class_index), budget);
    rep.r_outcome = mr.outcome;
    if (mr.outcome == Outcome::exact) rep.min_restraint_r = mr.r;
  }

  const bool numbers = gg.exact() && hh.exact() && pp.exact();
  const auto k = static_cast<std::int64_t>(rep.gamma_g);
  const auto gamma_h = static_cast<std::int64_t>(rep.gamma_h);
  const auto gamma_p = static_cast<std::int64_t>(rep.gamma_product);
  const Rational lhs(gamma_p);
  const char* kAtLeast = "lhs >= rhs";

  auto add = [&](std::string name, Rational l, Rational r, std::string rule, bool applicable, bool holds) {
    rep.bound_results.push_back(
        BoundResult{std::move(name), l, r, std::move(rule), applicable, applicable && holds});
  };

  add("vizing", lhs, Rational(k * gamma_h), kAtLeast, numbers, check_vizing(k, gamma_h, gamma_p));
  add("suen_tarr", Rational(2 * gamma_p), Rational(k * gamma_h + std::min(k, gamma_h)), kAtLeast,
      numbers, check_suen_tarr(k, gamma_h, gamma_p));
  const bool class_one = numbers && rep.class_index_g == std::size_t{1};
  add("theorem_a1", Rational(k * gamma_h - gamma_p), Rational(k * gamma_h * gamma_h),
      "lhs <= 0 or lhs^2 <= rhs", class_one, check_theorem_a1(k, gamma_h, gamma_p));
  add("minmax", lhs, numbers && k >= 1 && gamma_h >= 1 ? minmax_bound(k, gamma_h) : Rational(0), kAtLeast,
      class_one, numbers && k >= 1 && gamma_h >= 1 && lhs >= minmax_bound(k, gamma_h));
  const bool corollary = numbers && rep.class_index_g && rep.min_restraint_r;
  const auto r = static_cast<std::int64_t>(rep.min_restraint_r.value_or(0));
  add("corollary", lhs, Rational((k - r) * gamma_h), kAtLeast, corollary,
      check_corollary(k, gamma_h, gamma_p, r));
  rep.vizing_violated = numbers && !check_vizing(k, gamma_h, gamma_p);

  if (pp.exact()) {
    // profile of the solver's D over G's own θ-optimal partition
    const CliqueCoverResult theta = clique_cover_number(g, budget);
    if (theta.exact()) {
      const auto missing = missing_cells(gh, theta.witness->partition, *rep.product_witness, h);
      for (const auto& [hv, cells] : missing) {
        rep.missing_cell_counts[hv] = cells.size();
        rep.max_missing_per_fiber = std::max(rep.max_missing_per_fiber, cells.size());
      }
    }
  }
  return rep;
}

}  // namespace vizlab
