#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "vizlab/graph.hpp"

namespace vizlab::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 2,
  kBudgetExhausted = 3,
  kCounterexample = 4,
  kIoError = 5,
};

/// Generator token (complete:5, wagner, ...) or "g6:<graph6>".
Graph resolve_graph_spec(const std::string& spec);

/// Entry point of the vizing-lab tool; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace vizlab::cli
