#include "vizlab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "vizlab/classifier.hpp"
#include "vizlab/generators.hpp"
#include "vizlab/graph6.hpp"
#include "vizlab/product.hpp"
#include "vizlab/report.hpp"
#include "vizlab/scan.hpp"
#include "vizlab/solvers.hpp"
#include "vizlab/sweep.hpp"

#ifndef VIZLAB_DATA_DIR
#define VIZLAB_DATA_DIR "tests/data"
#endif

namespace vizlab::cli {

namespace {

/// Thrown for failures that map to a specific exit code.
struct CliFailure {
  ExitCode code;
  std::string kind;
  std::string message;
};

void report_error(std::ostream& err, const std::string& kind, const std::string& message) {
  err << "vizing-lab: error kind=" << kind << " message=" << Json(message).dump() << '\n';
}

std::string read_stdin_line(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) return line;
  }
  throw CliFailure{kParseError, "parse_error", "no graph6 line on stdin"};
}

Graph load_graph(const std::string& g6, const std::string& gen, std::istream& in) {
  try {
    if (!gen.empty()) return generate_from_spec(gen);
    if (g6 == "-") return parse_graph6(read_stdin_line(in));
    return parse_graph6(g6);
  } catch (const CliFailure&) {
    throw;
  } catch (const std::exception& e) {
    throw CliFailure{kParseError, "parse_error", e.what()};
  }
}

std::vector<std::string> read_corpus(const std::string& path, std::istream& in) {
  std::vector<std::string> lines;
  std::ifstream file;
  std::istream* src = &in;
  if (path != "-") {
    file.open(path);
    if (!file) throw CliFailure{kIoError, "io_error", "cannot read corpus '" + path + "'"};
    src = &file;
  }
  std::string line;
  while (std::getline(*src, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

std::string atlas_path(int n, const std::string& dir_flag) {
  std::string dir = dir_flag;
  if (dir.empty()) {
    const char* env = std::getenv("VIZLAB_ATLAS_DIR");
    dir = env ? env : VIZLAB_DATA_DIR;
  }
  return dir + "/atlas" + std::to_string(n) + ".g6";
}

std::string outcome_value(Outcome o, std::size_t value, std::size_t lower, std::size_t upper) {
  if (o == Outcome::exact) return std::to_string(value);
  std::string s = "unknown lower=" + std::to_string(lower);
  if (upper != CoverResult::kNone) s += " upper=" + std::to_string(upper);
  return s;
}

struct Common {
  std::uint64_t budget = Budget::kDefault;
  bool json = false;
  int jobs = 1;
};

// ---- invariants ---------------------------------------------------------

int cmd_invariants(const Graph& g, const Common& opt, std::ostream& out, std::ostream& err) {
  Budget budget(opt.budget);
  const DominationResult gamma = domination_number(g, budget);
  const CliqueCoverResult theta = clique_cover_number(g, budget);
  if (gamma.witness && !gamma.witness->verify(g)) {
    throw CliFailure{kCounterexample, "defect", "domination witness failed verification"};
  }
  if (theta.witness && !theta.witness->verify(g)) {
    throw CliFailure{kCounterexample, "defect", "clique cover witness failed verification"};
  }
  if (opt.json) {
    Json j{{"g6", emit_graph6(g)}, {"order", g.order()}, {"edges", g.edge_count()}};
    j["gamma"] = gamma.exact() ? Json(gamma.value()) : Json{{"unknown", true}, {"lower", gamma.lower}};
    j["gamma_witness"] = certificate_json(*gamma.witness);
    j["theta"] = theta.exact() ? Json(theta.value()) : Json{{"unknown", true}, {"lower", theta.lower}};
    j["theta_witness"] = clique_cover_json(*theta.witness);
    j["budget_spent"] = budget.used();
    out << j.dump() << '\n';
  } else {
    out << "g6=" << emit_graph6(g) << '\n'
        << "order=" << g.order() << '\n'
        << "edges=" << g.edge_count() << '\n'
        << "gamma=" << outcome_value(gamma.outcome, gamma.upper, gamma.lower, gamma.upper) << '\n'
        << "gamma_witness=" << gamma.witness->dominators.to_string() << '\n'
        << "theta=" << outcome_value(theta.outcome, theta.upper, theta.lower, theta.upper) << '\n'
        << "theta_witness=" << format_partition(theta.witness->partition) << '\n';
  }
  if (!gamma.exact() || !theta.exact()) {
    report_error(err, "budget_exhausted", "solver stopped after " + std::to_string(budget.used()) + " nodes");
    return kBudgetExhausted;
  }
  return kOk;
}

// ---- classify -----------------------------------------------------------

int cmd_classify(const Graph& g, const Common& opt, std::ostream& out, std::ostream& err) {
  if (!g.is_connected()) throw CliFailure{kParseError, "invalid_input", "classify requires a connected graph"};
  Budget budget(opt.budget);
  const ClassResult cls = class_index(g, budget);
  std::optional<CertificateCheck> check;
  if (cls.certificate) {
    Budget verify_budget(opt.budget);
    check = verify_class_certificate(*cls.certificate, verify_budget);
  }

  if (opt.json) {
    Json j = cls.certificate ? class_certificate_json(*cls.certificate) : Json::object();
    j["outcome"] = to_string(cls.outcome);
    j["lower_bound"] = cls.lower_bound;
    j["verified"] = check && check->ok;
    j["nodes"] = cls.nodes;
    if (!cls.certificate) j["base_g6"] = emit_graph6(g);
    out << j.dump() << '\n';
  } else {
    out << "g6=" << emit_graph6(g) << '\n';
    if (cls.certificate) out << "gamma=" << cls.certificate->gamma << '\n';
    if (cls.exact()) {
      out << "class_index=" << cls.class_index << '\n';
    } else {
      out << "class_index=unknown at_least=" << cls.lower_bound;
      if (cls.certificate) out << " at_most=" << cls.class_index;
      out << '\n';
    }
    if (cls.certificate) {
      out << "witness_g6=" << emit_graph6(cls.certificate->witness) << '\n'
          << "partition=" << format_partition(cls.certificate->partition) << '\n';
    }
    out << "verified=" << (check && check->ok ? "true" : "false") << '\n';
    out << "nodes=" << cls.nodes << '\n';
  }
  if (check && !check->ok && !check->unknown) {
    for (const auto& v : check->violations) report_error(err, "certificate_violation", v);
    return kCounterexample;
  }
  if (!cls.exact()) {
    report_error(err, "budget_exhausted", "class search stopped after " + std::to_string(cls.nodes) + " nodes");
    return kBudgetExhausted;
  }
  return kOk;
}

// ---- product ------------------------------------------------------------

int cmd_product(const Graph& g, const Graph& h, const Common& opt, std::ostream& out, std::ostream& err) {
  Budget budget(opt.budget);
  const ProductAnalysisReport rep = analyze_product(g, h, budget);
  if (opt.json) {
    out << product_report_json(rep).dump() << '\n';
  } else {
    auto value = [](Outcome o, std::size_t v) {
      return o == Outcome::exact ? std::to_string(v) : "unknown lower=" + std::to_string(v);
    };
    out << "g6=" << rep.g_id << '\n'
        << "h6=" << rep.h_id << '\n'
        << "gamma_g=" << value(rep.gamma_g_outcome, rep.gamma_g) << '\n'
        << "gamma_h=" << value(rep.gamma_h_outcome, rep.gamma_h) << '\n'
        << "gamma_product=" << value(rep.gamma_product_outcome, rep.gamma_product) << '\n'
        << "class_index_g="
        << (rep.class_index_g ? std::to_string(*rep.class_index_g) : std::string("unknown")) << '\n'
        << "min_restraint_r="
        << (rep.min_restraint_r ? std::to_string(*rep.min_restraint_r)
                                : std::string(rep.r_outcome == Outcome::infeasible ? "absent" : "unknown"))
        << '\n';
    for (const auto& b : rep.bound_results) {
      out << "check_" << b.name << '=' << (b.applicable ? (b.holds ? "true" : "false") : "n/a");
      if (b.applicable) {
        out << " lhs=" << b.lhs.numerator() << '/' << b.lhs.denominator() << " rhs=" << b.rhs.numerator()
            << '/' << b.rhs.denominator() << " rule=\"" << b.rule << '"';
      }
      out << '\n';
    }
    out << "max_missing_per_fiber=" << rep.max_missing_per_fiber << '\n';
  }
  if (rep.vizing_violated) {
    Json cert = product_report_json(rep);
    report_error(err, "vizing_counterexample", cert.dump());
    return kCounterexample;
  }
  if (rep.gamma_product_outcome != Outcome::exact || rep.gamma_g_outcome != Outcome::exact ||
      rep.gamma_h_outcome != Outcome::exact) {
    report_error(err, "budget_exhausted", "product solver stopped after " + std::to_string(budget.used()) + " nodes");
    return kBudgetExhausted;
  }
  return kOk;
}

// ---- verify-lemmas ------------------------------------------------------

int cmd_verify_lemmas(const std::vector<std::string>& lines, const std::optional<CliquePartition>& partition,
                      const Common& opt, std::ostream& out, std::ostream& err) {
  const auto records = sweep_parallel(
      std::span<const std::string>(lines),
      [&](const std::string& line) { return verify_lemmas_for(line, opt.budget, partition); }, opt.jobs);

  std::size_t pass = 0, fail = 0, unknown = 0, malformed = 0;
  for (const auto& rec : records) {
    out << (opt.json ? lemma_json(rec).dump() : lemma_line(rec)) << '\n';
    if (!rec.error.empty()) {
      ++malformed;
      report_error(err, "parse_error", rec.graph_id + ": " + rec.error);
    } else if (rec.has_counterexample()) {
      ++fail;
    } else if (rec.unknown) {
      ++unknown;
    } else {
      ++pass;
    }
  }
  if (opt.json) {
    out << Json{{"summary", {{"graphs", records.size()}, {"pass", pass}, {"fail", fail}, {"unknown", unknown},
                             {"malformed", malformed}}}}.dump()
        << '\n';
  } else {
    out << "summary graphs=" << records.size() << " pass=" << pass << " fail=" << fail
        << " unknown=" << unknown << " malformed=" << malformed << '\n';
  }
  if (fail) return kCounterexample;
  if (malformed) return kParseError;
  if (unknown) return kBudgetExhausted;
  return kOk;
}

// ---- scan ---------------------------------------------------------------

int cmd_scan(const std::vector<std::string>& lines, const std::vector<PanelGraph>& panel,
             const std::string& format, const Common& opt, std::ostream& out, std::ostream& err) {
  const auto records = sweep_parallel(
      std::span<const std::string>(lines),
      [&](const std::string& line) { return scan_graph(line, panel, opt.budget); }, opt.jobs);

  const bool csv = format == "csv";
  if (csv) out << scan_csv_header(panel) << '\n';
  bool malformed = false;
  bool unknown = false;
  for (const auto& rec : records) {
    out << (csv ? scan_csv_row(rec) : scan_json(rec).dump()) << '\n';
    if (rec.vizing_counterexample) {
      // a violation of the conjectured inequality: stop here with the certificate
      report_error(err, "vizing_counterexample", rec.vizing_counterexample->dump());
      return kCounterexample;
    }
    if (!rec.error.empty()) {
      malformed = true;
      report_error(err, "parse_error", rec.graph_id + ": " + rec.error);
    }
    bool incomplete = rec.error.empty() &&
                      (rec.gamma_outcome != Outcome::exact || rec.theta_outcome != Outcome::exact ||
                       rec.class_outcome != Outcome::exact);
    for (const auto& pr : rec.panel) incomplete = incomplete || pr.gamma_product_outcome != Outcome::exact;
    unknown = unknown || incomplete;
  }
  if (malformed) return kParseError;
  if (unknown) return kBudgetExhausted;
  return kOk;
}

}  // namespace

Graph resolve_graph_spec(const std::string& spec) {
  if (spec.starts_with("g6:")) return parse_graph6(spec.substr(3));
  return generate_from_spec(spec);
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact domination, clique-cover and Cartesian-product bound toolkit", "vizing-lab"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  Common opt;
  app.add_option("--budget", opt.budget, "Node-expansion budget per solver run")->capture_default_str();

  std::string g6, gen;
  auto add_input = [&](CLI::App* sub) {
    auto* a = sub->add_option("--g6", g6, "Graph in graph6 ('-' reads stdin)");
    auto* b = sub->add_option("--gen", gen, "Generator: complete:<n>, path:<n>, cycle:<n>, kbip:<a>,<b>, "
                                            "circulant:<n>:<s,...>, wagner, k66mc4");
    a->excludes(b);
  };

  auto* invariants = app.add_subcommand("invariants", "gamma and theta with witnesses");
  add_input(invariants);
  invariants->add_flag("--json", opt.json, "Emit JSON instead of text");

  auto* classify = app.add_subcommand("classify", "class index with a verified certificate");
  add_input(classify);
  classify->add_flag("--json", opt.json, "Emit JSON instead of text");

  std::string g_spec, h_spec;
  auto* product = app.add_subcommand("product", "gamma of G x H and all bound checks");
  product->add_option("--g", g_spec, "G as generator token or g6:<graph6>")->required();
  product->add_option("--h", h_spec, "H as generator token or g6:<graph6>")->required();
  product->add_flag("--json", opt.json, "Emit JSON instead of text");

  std::string corpus;
  int atlas = 0;
  std::string atlas_dir;
  std::string partition_text;
  auto* lemmas = app.add_subcommand("verify-lemmas", "exhaustive lemma checks over a graph6 corpus");
  lemmas->add_option("corpus", corpus, "graph6 file, one graph per line ('-' for stdin)");
  lemmas->add_option("--atlas", atlas, "Use the bundled atlas of connected graphs on <= N vertices");
  lemmas->add_option("--atlas-dir", atlas_dir, "Directory holding atlas<N>.g6 files");
  add_input(lemmas);
  lemmas->add_option("--partition", partition_text, "Clique partition for a single graph, e.g. 0,1|2,3|4");
  lemmas->add_option("--jobs", opt.jobs, "Worker threads")->capture_default_str();
  lemmas->add_flag("--json", opt.json, "Emit one JSON document per graph, then a summary");

  std::vector<std::string> panel_specs;
  std::string format = "csv";
  std::string output;
  auto* scan = app.add_subcommand("scan", "per-graph invariants and bound checks over a corpus");
  scan->add_option("corpus", corpus, "graph6 file ('-' for stdin)")->required();
  scan->add_option("--h", panel_specs, "Panel graph H (repeatable)");
  scan->add_option("--jobs", opt.jobs, "Worker threads")->capture_default_str();
  scan->add_option("--format", format, "csv or jsonl")->check(CLI::IsMember({"csv", "jsonl"}))->capture_default_str();
  scan->add_option("-o,--output", output, "Write to file instead of stdout");

  std::vector<std::string> argv_storage{"vizing-lab"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    report_error(err, "usage", e.what());
    return kParseError;
  }

  try {
    if (*invariants || *classify) {
      if (g6.empty() && gen.empty()) throw CliFailure{kParseError, "usage", "need --g6 or --gen"};
      const Graph g = load_graph(g6, gen, in);
      return *invariants ? cmd_invariants(g, opt, out, err) : cmd_classify(g, opt, out, err);
    }
    if (*product) {
      Graph g, h;
      try {
        g = resolve_graph_spec(g_spec);
        h = resolve_graph_spec(h_spec);
      } catch (const std::exception& e) {
        throw CliFailure{kParseError, "parse_error", e.what()};
      }
      return cmd_product(g, h, opt, out, err);
    }
    if (*lemmas) {
      std::vector<std::string> lines;
      std::optional<CliquePartition> partition;
      if (!g6.empty() || !gen.empty()) {
        lines.push_back(emit_graph6(load_graph(g6, gen, in)));
        if (!partition_text.empty()) {
          try {
            partition = parse_partition(partition_text);
          } catch (const std::exception& e) {
            throw CliFailure{kParseError, "parse_error", e.what()};
          }
        }
      } else if (atlas > 0) {
        lines = read_corpus(atlas_path(atlas, atlas_dir), in);
      } else if (!corpus.empty()) {
        lines = read_corpus(corpus, in);
      } else {
        throw CliFailure{kParseError, "usage", "need a corpus file, --atlas N, or --g6/--gen"};
      }
      return cmd_verify_lemmas(lines, partition, opt, out, err);
    }
    if (*scan) {
      if (panel_specs.empty()) panel_specs.push_back("path:2");
      std::vector<PanelGraph> panel;
      for (const auto& spec : panel_specs) {
        try {
          panel.push_back(PanelGraph{spec, resolve_graph_spec(spec)});
        } catch (const std::exception& e) {
          throw CliFailure{kParseError, "parse_error", "panel graph '" + spec + "': " + e.what()};
        }
      }
      const auto lines = read_corpus(corpus, in);
      if (output.empty()) return cmd_scan(lines, panel, format, opt, out, err);
      std::ofstream file(output);
      if (!file) throw CliFailure{kIoError, "io_error", "cannot write '" + output + "'"};
      const int code = cmd_scan(lines, panel, format, opt, file, err);
      file.close();
      if (!file) throw CliFailure{kIoError, "io_error", "failed writing '" + output + "'"};
      return code;
    }
  } catch (const CliFailure& f) {
    report_error(err, f.kind, f.message);
    return f.code;
  } catch (const std::exception& e) {
    report_error(err, "invalid_input", e.what());
    return kParseError;
  }
  return kOk;
}

}  // namespace vizlab::cli
