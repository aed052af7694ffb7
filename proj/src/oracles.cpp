#include "vizlab/oracles.hpp"

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>

#include <omp.h>

namespace vizlab::oracle {

namespace {

using Mask = std::uint32_t;

std::vector<Mask> closed_masks(const Graph& g) {
  if (g.order() > kMaxOracleOrder) {
    throw SizeError("oracle limited to " + std::to_string(kMaxOracleOrder) + " vertices");
  }
  std::vector<Mask> masks(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    masks[v] = Mask{1} << v;
    for (Vertex u = 0; u < g.order(); ++u)
      if (g.adjacent(u, v)) masks[v] |= Mask{1} << u;
  }
  return masks;
}

Mask union_of(const std::vector<Mask>& masks, Mask subset) {
  Mask covered = 0;
  while (subset) {
    covered |= masks[static_cast<std::size_t>(std::countr_zero(subset))];
    subset &= subset - 1;
  }
  return covered;
}

/// Next larger mask with the same popcount (Gosper's hack).
Mask next_combination(Mask x) {
  const Mask smallest = x & (~x + 1);
  const Mask ripple = x + smallest;
  return ripple | (((x ^ ripple) >> 2) / smallest);
}

}  // namespace

std::size_t brute_force_gamma(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("empty graph");
  const auto masks = closed_masks(g);
  const std::size_t n = g.order();
  const Mask all = static_cast<Mask>((std::uint64_t{1} << n) - 1);
  for (std::size_t k = 1; k <= n; ++k) {
    for (Mask s = static_cast<Mask>((std::uint64_t{1} << k) - 1); s <= all; s = next_combination(s)) {
      if (union_of(masks, s) == all) return k;
      if (s == all) break;
    }
  }
  return n;
}

std::size_t brute_force_gamma_parallel(const Graph& g, int threads) {
  if (g.order() == 0) throw std::invalid_argument("empty graph");
  const auto masks = closed_masks(g);
  const std::size_t n = g.order();
  const Mask all = static_cast<Mask>((std::uint64_t{1} << n) - 1);
  const std::int64_t total = std::int64_t{1} << n;
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
  // one pass over every mask; no early exit, so this loses to the serial
  // search whenever gamma is small
  std::size_t best = n;
#pragma omp parallel for num_threads(nthreads) schedule(static) reduction(min : best)
  for (std::int64_t s = 1; s < total; ++s) {
    const auto subset = static_cast<Mask>(s);
    const auto size = static_cast<std::size_t>(std::popcount(subset));
    if (size < best && union_of(masks, subset) == all) best = size;
  }
  return best;
}

std::size_t brute_force_theta(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return 0;
  std::vector<std::vector<Vertex>> blocks;
  std::size_t best = n;
  std::function<void(Vertex)> place = [&](Vertex v) {
    if (blocks.size() >= best) return;
    if (v == n) {
      best = blocks.size();
      return;
    }
    // by index: the recursion appends to `blocks`
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      bool clique = true;
      for (Vertex u : blocks[b]) clique = clique && g.adjacent(u, v);
      if (!clique) continue;
      blocks[b].push_back(v);
      place(v + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({v});
    place(v + 1);
    blocks.pop_back();
  };
  place(0);
  return best;
}

std::optional<std::vector<Vertex>> brute_force_cover(const Graph& g, const std::vector<Vertex>& allowed,
                                                     const std::vector<Vertex>& targets) {
  const auto masks = closed_masks(g);
  Mask need = 0;
  for (Vertex t : targets) need |= Mask{1} << t;
  const std::size_t m = allowed.size();
  for (std::size_t k = 0; k <= m; ++k) {
    // combinations of allowed indices, lexicographic
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      Mask covered = 0;
      for (std::size_t i : idx) covered |= masks[allowed[i]];
      if ((covered & need) == need) {
        std::vector<Vertex> out;
        for (std::size_t i : idx) out.push_back(allowed[i]);
        return out;
      }
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

std::vector<std::vector<Vertex>> all_dominating_sets_of_size(const Graph& g, std::size_t k) {
  const auto masks = closed_masks(g);
  const std::size_t n = g.order();
  const Mask all = static_cast<Mask>((std::uint64_t{1} << n) - 1);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> current;
  std::function<void(Vertex, Mask)> walk = [&](Vertex start, Mask covered) {
    if (current.size() == k) {
      if (covered == all) out.push_back(current);
      return;
    }
    for (Vertex v = start; v < n; ++v) {
      current.push_back(v);
      walk(v + 1, covered | masks[v]);
      current.pop_back();
    }
  };
  walk(0, 0);
  return out;
}

}  // namespace vizlab::oracle
