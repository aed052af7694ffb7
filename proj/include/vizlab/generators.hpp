#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vizlab/graph.hpp"

namespace vizlab {

class GeneratorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Family { complete, path, cycle, complete_bipartite, circulant, wagner_example, k66_minus_c4s };

Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
/// Vertex i adjacent to i +- s (mod n) for each offset s.
Graph circulant(std::size_t n, const std::vector<std::size_t>& offsets);
/// 8-cycle u1..u8 plus the four long diagonals u_i u_{i+4}.
Graph wagner_example();
/// K_{6,6} on L={0..5}, R={6..11} minus the 4-cycles on ({0,1},{6,7}),
/// ({2,3},{8,9}) and ({4,5},{10,11}).
Graph k66_minus_c4s();

Graph generate(Family family, const std::vector<std::size_t>& params);

/// CLI tokens: complete:<n>, path:<n>, cycle:<n>, kbip:<a>,<b>,
/// circulant:<n>:<s1,s2,...>, wagner, k66mc4.
Graph generate_from_spec(std::string_view spec);

}  // namespace vizlab
