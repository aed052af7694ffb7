#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vizlab/budget.hpp"
#include "vizlab/graph.hpp"

namespace vizlab {

/// Witness that G sits in class A_n: a spanning supergraph H with
/// γ(H) = γ(G) and a clique partition of H with γ + n cells.
struct ClassCertificate {
  Graph base;
  Graph witness;
  CliquePartition partition;
  std::size_t gamma = 0;
  std::size_t class_index = 0;
};

struct ClassResult {
  Outcome outcome = Outcome::unknown;
  /// Exact class index, or the incumbent's index when unknown.
  std::size_t class_index = 0;
  /// Proven lower bound ("at least m"); equals class_index when exact.
  std::size_t lower_bound = 0;
  std::optional<ClassCertificate> certificate;
  std::uint64_t nodes = 0;

  bool exact() const { return outcome == Outcome::exact; }
};

/// class_index(G) = min over spanning supergraphs H with γ(H) = γ(G) of θ(H) − γ(G).
///
/// Adding edges never raises γ or θ, so only supergraphs of the form
/// "G plus all edges inside the cells of a vertex partition P" need to be
/// examined: for such H_P we have θ(H_P) ≤ |P|, and any γ-preserving H with
/// clique partition P contains H_P. The minimum is therefore the fewest cells
/// of a partition P with γ(H_P) = γ(G). Coarsening P adds edges, so
/// feasibility is closed under refinement and a partial assignment can be
/// abandoned as soon as its saturated graph admits a dominating set of size
/// γ(G) − 1. Cell counts are tried from γ(G) upward; θ(G) always succeeds.
///
/// A witness H attaining the minimum has θ(H) = γ(H) + n and no γ-equal
/// spanning supergraph with a smaller gap, which is the D_n condition; G is
/// then in A_n through H. Requires a connected graph.
ClassResult class_index(const Graph& g, Budget& budget);

struct A0Result {
  Outcome outcome = Outcome::unknown;
  bool in_a0 = false;
  std::optional<ClassCertificate> certificate;
};

/// True iff class_index(G) = 0, short-circuiting when θ(G) = γ(G).
A0Result is_in_A0(const Graph& g, Budget& budget);

struct CertificateCheck {
  bool ok = false;
  bool unknown = false;  // a γ recomputation ran out of budget
  std::vector<std::string> violations;
};

/// Re-derives every stored quantity except minimality of the class index.
CertificateCheck verify_class_certificate(const ClassCertificate& cert, Budget& budget);

}  // namespace vizlab
