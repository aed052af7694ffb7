#pragma once

// JSON forms of certificates and reports. Schemas live in docs/schema/.

#include <string>

#include "json.hpp"
#include "vizlab/classifier.hpp"
#include "vizlab/product.hpp"
#include "vizlab/restraint.hpp"
#include "vizlab/solvers.hpp"

namespace vizlab {

using Json = nlohmann::ordered_json;

Json to_json(const VertexSet& s);
Json to_json(const CliquePartition& p);
Json to_json(const Rational& q);  // {"num": n, "den": d}

Json certificate_json(const DominationCertificate& cert);
Json clique_cover_json(const CliqueCoverCertificate& cert);
/// {base_g6, witness_g6, partition, gamma, class_index}
Json class_certificate_json(const ClassCertificate& cert);
Json product_report_json(const ProductAnalysisReport& rep);
/// Full instance for independent re-checking.
Json lemma_counterexample_json(const Graph& g, const CliquePartition& p, long n,
                               const LemmaCounterexample& cx);

/// Reads a partition written as "0,1|2,3|4".
CliquePartition parse_partition(const std::string& text);
std::string format_partition(const CliquePartition& p);

}  // namespace vizlab
