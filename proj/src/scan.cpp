#include "vizlab/scan.hpp"

#include <sstream>

#include "vizlab/classifier.hpp"
#include "vizlab/graph6.hpp"
#include "vizlab/product.hpp"
#include "vizlab/solvers.hpp"

namespace vizlab {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  return s;
}

std::string cell(Outcome o, std::size_t v) {
  if (o == Outcome::exact) return std::to_string(v);
  if (o == Outcome::infeasible) return "absent";
  return "unknown";
}

std::string cell(const std::optional<bool>& b) {
  if (!b) return "n/a";
  return *b ? "true" : "false";
}

Json json_value(Outcome o, std::size_t v) {
  if (o == Outcome::exact) return v;
  if (o == Outcome::infeasible) return "absent";
  return Json{{"unknown", true}, {"lower", v}};
}

Json json_value(const std::optional<bool>& b) { return b ? Json(*b) : Json("n/a"); }

}  // namespace

ScanRecord scan_graph(std::string_view line, const std::vector<PanelGraph>& panel,
                      std::uint64_t budget_limit) {
  ScanRecord rec;
  rec.graph_id = std::string(trim(line));
  Budget budget(budget_limit);
  Graph g;
  try {
    g = parse_graph6(rec.graph_id);
    if (g.order() == 0) throw std::invalid_argument("empty graph");
    if (!g.is_connected()) throw std::invalid_argument("graph is not connected");
  } catch (const std::exception& e) {
    rec.error = e.what();
    return rec;
  }

  const DominationResult gamma = domination_number(g, budget);
  rec.gamma_outcome = gamma.outcome;
  rec.gamma = gamma.exact() ? gamma.value() : gamma.lower;
  const CliqueCoverResult theta = clique_cover_number(g, budget);
  rec.theta_outcome = theta.outcome;
  rec.theta = theta.exact() ? theta.value() : theta.lower;

  const ClassResult cls = class_index(g, budget);
  rec.class_outcome = cls.outcome;
  rec.class_index = cls.exact() ? cls.class_index : cls.lower_bound;
  if (cls.exact()) {
    const auto& cert = *cls.certificate;
    const MinRestrainingResult mr =
        min_restraining_set(cert.witness, cert.partition, static_cast<long>(cert.class_index), budget);
    rec.r_outcome = mr.outcome;
    rec.r_min = mr.r;
  }

  for (const auto& h : panel) {
    PanelResult pr;
    pr.h_spec = h.spec;
    const DominationResult gamma_h = domination_number(h.graph, budget);
    const DominationResult gamma_p = product_gamma(g, h.graph, budget);
    pr.gamma_product_outcome = gamma_p.outcome;
    pr.gamma_product = gamma_p.exact() ? gamma_p.value() : gamma_p.lower;
    if (gamma.exact() && gamma_h.exact() && gamma_p.exact()) {
      const auto k = static_cast<std::int64_t>(gamma.value());
      const auto gh = static_cast<std::int64_t>(gamma_h.value());
      const auto gp = static_cast<std::int64_t>(gamma_p.value());
      pr.vizing = check_vizing(k, gh, gp);
      pr.suen_tarr = check_suen_tarr(k, gh, gp);
      if (cls.exact() && cls.class_index == 1) pr.theorem_a1 = check_theorem_a1(k, gh, gp);
      if (rec.r_outcome == Outcome::exact) {
        pr.corollary = check_corollary(k, gh, gp, static_cast<std::int64_t>(rec.r_min));
      }
      if (!*pr.vizing && !rec.vizing_counterexample) {
        rec.vizing_counterexample = Json{{"g_g6", rec.graph_id},
                                         {"h_g6", emit_graph6(h.graph)},
                                         {"gamma_g", k},
                                         {"gamma_h", gh},
                                         {"gamma_product", gp},
                                         {"product_dominating_set", to_json(gamma_p.witness->dominators)}};
      }
    }
    rec.panel.push_back(std::move(pr));
  }
  rec.budget_spent = budget.used();
  return rec;
}

std::string scan_csv_header(const std::vector<PanelGraph>& panel) {
  std::string out = "g6,gamma,theta,class_index,r_min";
  for (const auto& h : panel) {
    for (const char* col : {"gamma_product", "vizing", "theorem_a1", "corollary", "suen_tarr"}) {
      out += ',';
      out += col;
      out += '[' + h.spec + ']';
    }
  }
  return out;
}

std::string scan_csv_row(const ScanRecord& rec) {
  std::ostringstream os;
  os << rec.graph_id;
  if (!rec.error.empty()) {
    os << ",error";
    return os.str();
  }
  os << ',' << cell(rec.gamma_outcome, rec.gamma) << ',' << cell(rec.theta_outcome, rec.theta) << ','
     << cell(rec.class_outcome, rec.class_index) << ',' << cell(rec.r_outcome, rec.r_min);
  for (const auto& pr : rec.panel) {
    os << ',' << cell(pr.gamma_product_outcome, pr.gamma_product) << ',' << cell(pr.vizing) << ','
       << cell(pr.theorem_a1) << ',' << cell(pr.corollary) << ',' << cell(pr.suen_tarr);
  }
  return os.str();
}

Json scan_json(const ScanRecord& rec) {
  Json out{{"graph_id", rec.graph_id}};
  if (!rec.error.empty()) {
    out["error"] = rec.error;
    return out;
  }
  out["gamma"] = json_value(rec.gamma_outcome, rec.gamma);
  out["theta"] = json_value(rec.theta_outcome, rec.theta);
  out["class_index"] = json_value(rec.class_outcome, rec.class_index);
  out["r_min"] = json_value(rec.r_outcome, rec.r_min);
  Json panel = Json::array();
  for (const auto& pr : rec.panel) {
    panel.push_back(Json{{"h", pr.h_spec},
                         {"gamma_product", json_value(pr.gamma_product_outcome, pr.gamma_product)},
                         {"vizing", json_value(pr.vizing)},
                         {"theorem_a1", json_value(pr.theorem_a1)},
                         {"corollary", json_value(pr.corollary)},
                         {"suen_tarr", json_value(pr.suen_tarr)}});
  }
  out["panel"] = std::move(panel);
  out["budget_spent"] = rec.budget_spent;
  return out;
}

LemmaSweepRecord verify_lemmas_for(std::string_view line, std::uint64_t budget_limit,
                                   const std::optional<CliquePartition>& partition) {
  LemmaSweepRecord rec;
  rec.graph_id = std::string(trim(line));
  Budget budget(budget_limit);
  Graph g;
  try {
    g = parse_graph6(rec.graph_id);
    if (g.order() == 0) throw std::invalid_argument("empty graph");
  } catch (const std::exception& e) {
    rec.error = e.what();
    return rec;
  }
  const DominationResult gamma = domination_number(g, budget);
  if (!gamma.exact()) {
    rec.unknown = true;
    return rec;
  }
  rec.gamma = gamma.value();
  if (partition) {
    if (auto v = validate_partition(g, *partition)) {
      rec.error = "partition rejected: " + v->message;
      return rec;
    }
    rec.partition = *partition;
  } else {
    const CliqueCoverResult theta = clique_cover_number(g, budget);
    if (!theta.exact()) {
      rec.unknown = true;
      return rec;
    }
    rec.partition = theta.witness->partition;
  }
  rec.theta = rec.partition.size();
  rec.n = static_cast<long>(rec.theta) - static_cast<long>(rec.gamma);

  rec.tool = verify_lemma_tool(g, rec.partition, rec.n, budget);
  if (g.order() <= kRestrainingLemmaMaxOrder) {
    rec.restraining = verify_lemma_restraining(g, rec.partition, rec.n, budget);
  } else {
    rec.restraining_skipped = true;
  }
  rec.unknown = rec.tool.outcome != Outcome::exact ||
                (!rec.restraining_skipped && rec.restraining.outcome != Outcome::exact);
  return rec;
}

namespace {

std::string verdict(const LemmaReport& r) {
  if (r.counterexample) return "FAIL";
  if (r.outcome != Outcome::exact) return "unknown";
  return "ok";
}

}  // namespace

std::string lemma_line(const LemmaSweepRecord& rec) {
  std::ostringstream os;
  os << rec.graph_id;
  if (!rec.error.empty()) {
    os << " error: " << rec.error;
    return os.str();
  }
  os << " gamma=" << rec.gamma << " n=" << rec.n << " partition=" << format_partition(rec.partition)
     << " tool=" << verdict(rec.tool) << "(checked=" << rec.tool.checked
     << ",skipped=" << rec.tool.skipped << ")";
  if (rec.restraining_skipped) {
    os << " restraining=skipped";
  } else {
    os << " restraining=" << verdict(rec.restraining) << "(checked=" << rec.restraining.checked << ")";
  }
  return os.str();
}

Json lemma_json(const LemmaSweepRecord& rec) {
  Json out{{"graph_id", rec.graph_id}};
  if (!rec.error.empty()) {
    out["error"] = rec.error;
    return out;
  }
  out["gamma"] = rec.gamma;
  out["n"] = rec.n;
  out["partition"] = to_json(rec.partition);
  auto report = [&](const LemmaReport& r, bool skipped) {
    Json j{{"status", skipped ? "skipped" : verdict(r)}, {"checked", r.checked}, {"skipped_instances", r.skipped}};
    if (r.counterexample) {
      j["counterexample"] = lemma_counterexample_json(parse_graph6(rec.graph_id), rec.partition, rec.n,
                                                      *r.counterexample);
    }
    return j;
  };
  out["tool"] = report(rec.tool, false);
  out["restraining"] = report(rec.restraining, rec.restraining_skipped);
  return out;
}

}  // namespace vizlab
