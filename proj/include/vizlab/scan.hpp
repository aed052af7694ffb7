#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vizlab/budget.hpp"
#include "vizlab/graph.hpp"
#include "vizlab/report.hpp"
#include "vizlab/restraint.hpp"

namespace vizlab {

struct PanelGraph {
  std::string spec;
  Graph graph;
};

/// Bound outcomes for one H of the panel. Empty optionals mean "not applicable".
struct PanelResult {
  std::string h_spec;
  Outcome gamma_product_outcome = Outcome::unknown;
  std::size_t gamma_product = 0;
  std::optional<bool> vizing;
  std::optional<bool> theorem_a1;
  std::optional<bool> corollary;
  std::optional<bool> suen_tarr;
};

/// One corpus line's worth of invariants. Every number can be recomputed
/// from graph_id with the module operation that produced it.
struct ScanRecord {
  std::string graph_id;
  std::string error;  // nonempty: the line did not parse or the graph was rejected
  Outcome gamma_outcome = Outcome::unknown;
  std::size_t gamma = 0;
  Outcome theta_outcome = Outcome::unknown;
  std::size_t theta = 0;
  Outcome class_outcome = Outcome::unknown;
  std::size_t class_index = 0;  // lower bound when unknown
  Outcome r_outcome = Outcome::unknown;  // infeasible = absent
  std::size_t r_min = 0;
  std::vector<PanelResult> panel;
  std::uint64_t budget_spent = 0;
  std::optional<Json> vizing_counterexample;
};

/// Each record gets its own Budget(budget_limit), so a record's content does
/// not depend on which other records share a worker.
ScanRecord scan_graph(std::string_view line, const std::vector<PanelGraph>& panel,
                      std::uint64_t budget_limit);

std::string scan_csv_header(const std::vector<PanelGraph>& panel);
std::string scan_csv_row(const ScanRecord& rec);
Json scan_json(const ScanRecord& rec);

struct LemmaSweepRecord {
  std::string graph_id;
  std::string error;
  bool unknown = false;
  std::size_t gamma = 0;
  std::size_t theta = 0;
  long n = 0;
  CliquePartition partition;
  LemmaReport tool;
  LemmaReport restraining;
  bool restraining_skipped = false;  // graph above the exhaustive-sweep cap

  bool has_counterexample() const {
    return tool.counterexample.has_value() || restraining.counterexample.has_value();
  }
};

/// Runs both lemma verifiers on the solver's θ-optimal partition (or on
/// `partition` when given), with n = |partition| - γ.
LemmaSweepRecord verify_lemmas_for(std::string_view line, std::uint64_t budget_limit,
                                   const std::optional<CliquePartition>& partition = std::nullopt);

std::string lemma_line(const LemmaSweepRecord& rec);
Json lemma_json(const LemmaSweepRecord& rec);

}  // namespace vizlab
