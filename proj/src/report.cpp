#include "vizlab/report.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "vizlab/graph6.hpp"

namespace vizlab {

Json to_json(const VertexSet& s) {
  Json out = Json::array();
  s.for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

Json to_json(const CliquePartition& p) {
  Json out = Json::array();
  for (const auto& cell : p.cells) out.push_back(cell);
  return out;
}

Json to_json(const Rational& q) { return Json{{"num", q.numerator()}, {"den", q.denominator()}}; }

Json certificate_json(const DominationCertificate& cert) {
  return Json{{"dominators", to_json(cert.dominators)},
              {"targets", to_json(cert.targets)},
              {"cardinality", cert.cardinality}};
}

Json clique_cover_json(const CliqueCoverCertificate& cert) {
  return Json{{"partition", to_json(cert.partition)}, {"size", cert.size}};
}

Json class_certificate_json(const ClassCertificate& cert) {
  return Json{{"base_g6", emit_graph6(cert.base)},
              {"witness_g6", emit_graph6(cert.witness)},
              {"partition", to_json(cert.partition)},
              {"gamma", cert.gamma},
              {"class_index", cert.class_index}};
}

Json product_report_json(const ProductAnalysisReport& rep) {
  auto value = [](Outcome o, std::size_t v) -> Json {
    if (o == Outcome::exact) return v;
    return Json{{"unknown", true}, {"lower", v}};
  };
  Json bounds = Json::array();
  for (const auto& b : rep.bound_results) {
    bounds.push_back(Json{{"name", b.name},
                          {"lhs", to_json(b.lhs)},
                          {"rhs", to_json(b.rhs)},
                          {"rule", b.rule},
                          {"applicable", b.applicable},
                          {"holds", b.holds}});
  }
  Json missing = Json::object();
  for (const auto& [h, count] : rep.missing_cell_counts) missing[std::to_string(h)] = count;

  Json out{{"g_g6", rep.g_id},
           {"h_g6", rep.h_id},
           {"gamma_g", value(rep.gamma_g_outcome, rep.gamma_g)},
           {"gamma_h", value(rep.gamma_h_outcome, rep.gamma_h)},
           {"gamma_product", value(rep.gamma_product_outcome, rep.gamma_product)}};
  out["product_witness"] = rep.product_witness ? to_json(*rep.product_witness) : Json(nullptr);
  out["class_index_g"] = rep.class_index_g ? Json(*rep.class_index_g) : Json("unknown");
  if (rep.min_restraint_r) out["min_restraint_r"] = *rep.min_restraint_r;
  else out["min_restraint_r"] = rep.r_outcome == Outcome::infeasible ? "absent" : "unknown";
  out["bound_results"] = std::move(bounds);
  out["missing_cell_counts"] = std::move(missing);
  out["max_missing_per_fiber"] = rep.max_missing_per_fiber;
  out["vizing_violated"] = rep.vizing_violated;
  return out;
}

Json lemma_counterexample_json(const Graph& g, const CliquePartition& p, long n,
                               const LemmaCounterexample& cx) {
  return Json{{"graph_g6", emit_graph6(g)},
              {"partition", to_json(p)},
              {"n", n},
              {"cells", cx.target_cells},
              {"D", to_json(cx.set_d)},
              {"E", cx.set_e ? to_json(*cx.set_e) : Json(nullptr)},
              {"l", cx.l},
              {"t", cx.t},
              {"lhs", cx.lhs},
              {"rhs", cx.rhs},
              {"message", cx.message}};
}

CliquePartition parse_partition(const std::string& text) {
  CliquePartition p;
  std::istringstream cells(text);
  std::string cell;
  while (std::getline(cells, cell, '|')) {
    std::vector<Vertex> members;
    std::istringstream items(cell);
    std::string item;
    while (std::getline(items, item, ',')) {
      Vertex v = 0;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
      if (ec != std::errc{} || ptr != item.data() + item.size() || item.empty()) {
        throw std::invalid_argument("bad vertex '" + item + "' in partition '" + text + "'");
      }
      members.push_back(v);
    }
    p.cells.push_back(std::move(members));
  }
  return p;
}

std::string format_partition(const CliquePartition& p) {
  std::string out;
  for (std::size_t c = 0; c < p.size(); ++c) {
    if (c) out += '|';
    for (std::size_t i = 0; i < p.cells[c].size(); ++i) {
      if (i) out += ',';
      out += std::to_string(p.cells[c][i]);
    }
  }
  return out;
}

}  // namespace vizlab
