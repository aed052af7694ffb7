#include "vizlab/generators.hpp"

#include <charconv>

namespace vizlab {

namespace {

void require_positive(std::size_t n, const char* what) {
  if (n == 0) throw GeneratorError(std::string(what) + " needs a positive size");
}

std::size_t parse_count(std::string_view token, std::string_view spec) {
  std::size_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end || token.empty()) {
    throw GeneratorError("bad integer '" + std::string(token) + "' in generator spec '" +
                         std::string(spec) + "'");
  }
  return value;
}

std::vector<std::size_t> parse_list(std::string_view token, std::string_view spec) {
  std::vector<std::size_t> out;
  while (true) {
    const auto comma = token.find(',');
    out.push_back(parse_count(token.substr(0, comma), spec));
    if (comma == std::string_view::npos) break;
    token.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

Graph complete_graph(std::size_t n) {
  require_positive(n, "complete");
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph path_graph(std::size_t n) {
  require_positive(n, "path");
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw GeneratorError("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  require_positive(a, "complete_bipartite");
  require_positive(b, "complete_bipartite");
  Graph g(a + b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

Graph circulant(std::size_t n, const std::vector<std::size_t>& offsets) {
  require_positive(n, "circulant");
  Graph g(n);
  for (std::size_t s : offsets) {
    if (s == 0 || s >= n) {
      throw GeneratorError("circulant offset " + std::to_string(s) + " must lie in [1, " +
                           std::to_string(n) + ")");
    }
    for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + s) % n);
  }
  return g;
}

Graph wagner_example() { return circulant(8, {1, 4}); }

Graph k66_minus_c4s() {
  Graph g(12);
  for (Vertex u = 0; u < 6; ++u) {
    for (Vertex v = 6; v < 12; ++v) {
      // u and v-6 in the same consecutive pair {0,1}, {2,3}, {4,5}: removed 4-cycle
      if (u / 2 != (v - 6) / 2) g.add_edge(u, v);
    }
  }
  return g;
}

Graph generate(Family family, const std::vector<std::size_t>& params) {
  auto need = [&](std::size_t count, const char* name) {
    if (params.size() != count) {
      throw GeneratorError(std::string(name) + " takes " + std::to_string(count) + " parameter(s)");
    }
  };
  switch (family) {
    case Family::complete:
      need(1, "complete");
      return complete_graph(params[0]);
    case Family::path:
      need(1, "path");
      return path_graph(params[0]);
    case Family::cycle:
      need(1, "cycle");
      return cycle_graph(params[0]);
    case Family::complete_bipartite:
      need(2, "complete_bipartite");
      return complete_bipartite(params[0], params[1]);
    case Family::circulant: {
      if (params.size() < 2) throw GeneratorError("circulant takes n and at least one offset");
      return circulant(params[0], {params.begin() + 1, params.end()});
    }
    case Family::wagner_example:
      need(0, "wagner_example");
      return wagner_example();
    case Family::k66_minus_c4s:
      need(0, "k66_minus_c4s");
      return k66_minus_c4s();
  }
  throw GeneratorError("unknown family");
}

Graph generate_from_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  const std::string_view rest =
      colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);

  if (name == "wagner" || name == "k66mc4") {
    if (!rest.empty() || colon != std::string_view::npos) {
      throw GeneratorError("generator '" + std::string(name) + "' takes no parameters");
    }
    return name == "wagner" ? wagner_example() : k66_minus_c4s();
  }
  if (colon == std::string_view::npos) {
    throw GeneratorError("unknown generator '" + std::string(spec) + "'");
  }
  if (name == "complete") return complete_graph(parse_count(rest, spec));
  if (name == "path") return path_graph(parse_count(rest, spec));
  if (name == "cycle") return cycle_graph(parse_count(rest, spec));
  if (name == "kbip") {
    const auto sizes = parse_list(rest, spec);
    if (sizes.size() != 2) throw GeneratorError("kbip takes <a>,<b>");
    return complete_bipartite(sizes[0], sizes[1]);
  }
  if (name == "circulant") {
    const auto sep = rest.find(':');
    if (sep == std::string_view::npos) throw GeneratorError("circulant takes <n>:<s1,s2,...>");
    return circulant(parse_count(rest.substr(0, sep), spec), parse_list(rest.substr(sep + 1), spec));
  }
  throw GeneratorError("unknown generator '" + std::string(name) + "'");
}

}  // namespace vizlab
