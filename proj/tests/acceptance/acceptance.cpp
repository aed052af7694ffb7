// Acceptance suite: one PASS/FAIL line per criterion.
//
// Usage: acceptance [--data DIR] [--known-failure N]...
// Exit status is 0 iff the failing criteria are exactly the ones listed with
// --known-failure, so an unexpected pass is reported as loudly as a new failure.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vizlab/classifier.hpp"
#include "vizlab/cli.hpp"
#include "vizlab/generators.hpp"
#include "vizlab/graph6.hpp"
#include "vizlab/oracles.hpp"
#include "vizlab/product.hpp"
#include "vizlab/scan.hpp"
#include "vizlab/solvers.hpp"
#include "vizlab/sweep.hpp"

using namespace vizlab;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);)
    if (!l.empty()) lines.push_back(l);
  return lines;
}

Graph random_connected(std::mt19937_64& rng, std::size_t n, double p) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  for (Vertex v = 1; v < n; ++v) g.add_edge(std::uniform_int_distribution<Vertex>(0, v - 1)(rng), v);
  return g;
}

Verdict classify_expect(const Graph& g, std::uint64_t budget_limit, std::size_t expected) {
  Budget budget(budget_limit);
  const auto r = class_index(g, budget);
  std::ostringstream os;
  if (!r.exact()) {
    os << "unknown (at least " << r.lower_bound << ") after " << r.nodes << " nodes";
    return {false, os.str()};
  }
  Budget vb;
  const bool verified = verify_class_certificate(*r.certificate, vb).ok;
  os << "class_index=" << r.class_index << " (expected " << expected << "), gamma=" << r.certificate->gamma
     << ", witness partition " << r.certificate->partition.size() << " cells, " << r.nodes
     << " nodes, certificate " << (verified ? "verified" : "REJECTED");
  return {r.class_index == expected && verified, os.str()};
}

const std::vector<PanelGraph>& panel() {
  static const std::vector<PanelGraph> p{{"path:2", path_graph(2)},
                                         {"path:3", path_graph(3)},
                                         {"path:4", path_graph(4)},
                                         {"cycle:3", cycle_graph(3)},
                                         {"cycle:5", cycle_graph(5)}};
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vizing-lab acceptance suite"};
  std::string data_dir = VIZLAB_TEST_DATA_DIR;
  std::vector<int> known;
  int jobs = 0;
  app.add_option("--data", data_dir, "Directory with atlas7.g6 and connected8.g6");
  app.add_option("--known-failure", known, "Criterion expected to fail");
  app.add_option("--jobs", jobs, "Worker threads for corpus sweeps (0 = OpenMP default)");
  CLI11_PARSE(app, argc, argv);

  const auto atlas = read_lines(data_dir + "/atlas7.g6");

  // criteria 4, 5, 7 and 9 share one scan of the atlas against the panel
  std::vector<ScanRecord> scan;
  std::function<void()> ensure_scan = [&] {
    if (!scan.empty()) return;
    scan = sweep_parallel(
        std::span<const std::string>(atlas),
        [](const std::string& line) { return scan_graph(line, panel(), Budget::kDefault); }, jobs);
  };

  std::vector<ScanRecord> scan8;
  std::function<void()> ensure_scan8 = [&] {
    if (!scan8.empty()) return;
    const auto lines = read_lines(data_dir + "/connected8.g6");
    scan8 = sweep_parallel(
        std::span<const std::string>(lines),
        [](const std::string& line) { return scan_graph(line, panel(), Budget::kDefault); }, jobs);
  };

  std::vector<std::pair<std::string, std::function<Verdict()>>> criteria;

  criteria.emplace_back("wagner example is class 1 within 10^7 nodes",
                        [] { return classify_expect(wagner_example(), 10'000'000, 1); });

  criteria.emplace_back("K66 minus three 4-cycles is class 1 within the default budget",
                        [] { return classify_expect(k66_minus_c4s(), Budget::kDefault, 1); });

  criteria.emplace_back("both lemmas hold on every atlas graph with its theta partition", [&] {
    const auto recs = sweep_parallel(
        std::span<const std::string>(atlas),
        [](const std::string& line) { return verify_lemmas_for(line, Budget::kDefault); }, jobs);
    std::size_t pass = 0, fail = 0, unknown = 0, skipped = 0, malformed = 0;
    std::string first_failure;
    for (const auto& r : recs) {
      if (!r.error.empty()) ++malformed;
      else if (r.has_counterexample()) {
        ++fail;
        if (first_failure.empty()) first_failure = r.graph_id;
      } else if (r.unknown || r.restraining_skipped) ++unknown;
      else ++pass;
      skipped += r.tool.skipped;
    }
    std::ostringstream os;
    os << recs.size() << " graphs: " << pass << " pass, " << fail << " counterexamples, " << unknown
       << " incomplete, " << malformed << " malformed (" << skipped << " infeasible tool instances skipped)";
    if (!first_failure.empty()) os << "; first failure " << first_failure;
    return Verdict{pass == recs.size(), os.str()};
  });

  // Every connected graph on <= 7 vertices is class 0, so on the atlas alone
  // criteria 4 and 5 would hold vacuously. They also run over all connected
  // 8-vertex graphs, where class-1 graphs exist.
  struct ClassOneTally {
    std::size_t graphs = 0, absent = 0, pairs = 0, holds = 0, incomplete = 0;
  };
  auto tally = [](const std::vector<ScanRecord>& recs, bool corollary) {
    ClassOneTally t;
    for (const auto& r : recs) {
      if (r.class_outcome != Outcome::exact) ++t.incomplete;
      if (r.class_outcome != Outcome::exact || r.class_index != 1) continue;
      if (corollary && r.r_outcome == Outcome::infeasible) {
        ++t.absent;
        continue;
      }
      ++t.graphs;
      for (const auto& pr : r.panel) {
        ++t.pairs;
        t.holds += (corollary ? pr.corollary : pr.theorem_a1).value_or(false);
      }
    }
    return t;
  };
  auto describe = [](const char* corpus, const ClassOneTally& t, bool corollary) {
    std::ostringstream os;
    os << corpus << ": " << t.graphs << " class-1 graphs";
    if (corollary) os << " with r (" << t.absent << " without)";
    os << ", " << t.holds << "/" << t.pairs << " pairs hold";
    if (t.incomplete) os << ", " << t.incomplete << " unclassified";
    return os.str();
  };
  auto class_one_criterion = [&](bool corollary) {
    ensure_scan();
    ensure_scan8();
    const auto a = tally(scan, corollary), b = tally(scan8, corollary);
    const bool pass = a.graphs + b.graphs > 0 && a.holds == a.pairs && b.holds == b.pairs &&
                      a.incomplete == 0 && b.incomplete == 0;
    return Verdict{pass, describe("atlas <= 7", a, corollary) + "; connected 8-vertex: " +
                             describe("", b, corollary).substr(2)};
  };

  criteria.emplace_back("theorem bound holds for class-1 graphs on the panel",
                        [&] { return class_one_criterion(false); });

  criteria.emplace_back("corollary bound holds where a minimum restraining set exists",
                        [&] { return class_one_criterion(true); });

  criteria.emplace_back("minmax bound dominates (k - sqrt k) gamma(H) for k <= 100, gamma(H) <= 10", [] {
    std::size_t ok = 0;
    for (std::int64_t k = 1; k <= 100; ++k)
      for (std::int64_t gh = 1; gh <= 10; ++gh) ok += at_least_sqrt_bound(minmax_bound(k, gh), k, gh);
    return Verdict{ok == 1000, std::to_string(ok) + "/1000 (k, gamma_h) pairs"};
  });

  criteria.emplace_back("Suen-Tarr and Vizing hold on every panel pair", [&] {
    ensure_scan();
    std::size_t pairs = 0, vizing = 0, suen = 0, unknown = 0;
    std::string certificate;
    for (const auto& r : scan) {
      for (const auto& pr : r.panel) {
        if (!pr.vizing) {
          ++unknown;
          continue;
        }
        ++pairs;
        vizing += *pr.vizing;
        suen += pr.suen_tarr.value_or(false);
      }
      if (r.vizing_counterexample && certificate.empty()) certificate = r.vizing_counterexample->dump();
    }
    std::ostringstream os;
    os << pairs << " pairs: vizing " << vizing << ", suen_tarr " << suen << ", undecided " << unknown;
    if (!certificate.empty()) os << "; VIZING COUNTEREXAMPLE " << certificate;
    return Verdict{pairs > 0 && vizing == pairs && suen == pairs && unknown == 0, os.str()};
  });

  criteria.emplace_back("solvers agree with brute-force oracles on random graphs", [] {
    std::mt19937_64 rng(8'500);
    std::size_t gamma_ok = 0, theta_ok = 0;
    for (int i = 0; i < 500; ++i) {
      const std::size_t n = 1 + rng() % 12;
      const Graph g = random_connected(rng, n, 0.05 + 0.6 * static_cast<double>(rng() % 100) / 100.0);
      Budget b;
      const auto r = domination_number(g, b);
      gamma_ok += r.exact() && r.witness->verify(g) && r.value() == oracle::brute_force_gamma(g);
    }
    for (int i = 0; i < 200; ++i) {
      const std::size_t n = 1 + rng() % 9;
      Graph g(n);
      const double p = 0.1 + 0.8 * static_cast<double>(rng() % 100) / 100.0;
      std::bernoulli_distribution coin(p);
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
          if (coin(rng)) g.add_edge(u, v);
      Budget b;
      const auto r = clique_cover_number(g, b);
      theta_ok += r.exact() && r.witness->verify(g) && r.value() == oracle::brute_force_theta(g);
    }
    std::ostringstream os;
    os << "gamma " << gamma_ok << "/500, theta " << theta_ok << "/200";
    return Verdict{gamma_ok == 500 && theta_ok == 200, os.str()};
  });

  criteria.emplace_back("gamma <= theta on the atlas; product counts on all constructed products", [&] {
    ensure_scan();
    std::size_t ordered = 0, products = 0, counts_ok = 0;
    for (const auto& r : scan) ordered += r.error.empty() && r.gamma_outcome == Outcome::exact &&
                                          r.theta_outcome == Outcome::exact && r.gamma <= r.theta;
    for (const auto& line : atlas) {
      const Graph g = parse_graph6(line);
      for (const auto& h : panel()) {
        const Graph gh = cartesian_product(g, h.graph);
        ++products;
        counts_ok += gh.order() == g.order() * h.graph.order() &&
                     gh.edge_count() == g.edge_count() * h.graph.order() + h.graph.edge_count() * g.order();
      }
    }
    std::ostringstream os;
    os << ordered << "/" << atlas.size() << " graphs with gamma <= theta, " << counts_ok << "/" << products
       << " products with matching counts";
    return Verdict{ordered == atlas.size() && counts_ok == products, os.str()};
  });

  criteria.emplace_back("scan output is byte-identical for --jobs 1 and --jobs 8 on 100 graphs", [&] {
    std::ostringstream corpus_text;
    for (std::size_t i = 0; i < 100; ++i) corpus_text << atlas[(i * 97) % atlas.size()] << '\n';
    const std::string corpus = corpus_text.str();
    auto run_scan = [&](const std::string& j) {
      std::istringstream in(corpus);
      std::ostringstream out, err;
      const int code = cli::run({"scan", "-", "--h", "path:2", "--h", "cycle:5", "--jobs", j}, in, out, err);
      return std::make_pair(code, out.str());
    };
    const auto one = run_scan("1");
    const auto eight = run_scan("8");
    std::ostringstream os;
    os << "exit codes " << one.first << "/" << eight.first << ", " << one.second.size() << " bytes, "
       << (one.second == eight.second ? "identical" : "DIFFERENT");
    return Verdict{one.first == 0 && eight.first == 0 && one.second == eight.second, os.str()};
  });

  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i + 1);
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!v.pass) failed.insert(id);
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << criteria[i].first << " -- "
              << v.detail << " [" << std::fixed << std::setprecision(1) << secs << "s]"
              << (!v.pass && std::count(known.begin(), known.end(), id) ? " (known failure)" : "") << std::endl;
  }

  const std::set<int> expected(known.begin(), known.end());
  std::cout << "summary: " << criteria.size() - failed.size() << "/" << criteria.size() << " criteria pass";
  if (!expected.empty()) std::cout << ", known failures: " << expected.size();
  std::cout << std::endl;
  if (failed != expected) {
    for (int id : expected)
      if (!failed.count(id)) std::cout << "unexpected pass: criterion " << id << std::endl;
    for (int id : failed)
      if (!expected.count(id)) std::cout << "unexpected failure: criterion " << id << std::endl;
    return 1;
  }
  return 0;
}
