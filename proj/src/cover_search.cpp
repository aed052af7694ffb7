#include "vizlab/cover_search.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace vizlab {

namespace {

using Word = VertexSet::Word;

std::size_t popcount_and(const Word* a, const Word* b, std::size_t words) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < words; ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

std::size_t popcount(const Word* a, std::size_t words) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < words; ++i) c += static_cast<std::size_t>(std::popcount(a[i]));
  return c;
}

bool none(const Word* a, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i)
    if (a[i]) return false;
  return true;
}

void reset(Word* a, std::size_t v) { a[v / 64] &= ~(Word{1} << (v % 64)); }

template <class Fn>
void for_each_bit(const Word* a, std::size_t words, Fn&& fn) {
  for (std::size_t w = 0; w < words; ++w) {
    Word bits = a[w];
    while (bits) {
      fn(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
}

void check_instance(const CoverInstance& in) {
  const std::size_t n = in.universe();
  if (in.reach.size() != n || in.candidates.universe() != n) {
    throw std::invalid_argument("cover instance rows do not match the target universe");
  }
  for (const auto& row : in.reach)
    if (row.universe() != n) throw std::invalid_argument("cover instance row has wrong universe");
}

class CoverSearch {
 public:
  CoverSearch(const CoverInstance& in, Budget& budget)
      : n_(in.universe()), words_(in.targets.word_count()), budget_(budget) {
    reach_.resize(n_ * words_);
    coverers_.assign(n_ * words_, 0);
    for (std::size_t u = 0; u < n_; ++u) {
      if (!in.candidates.contains(u)) continue;
      const auto row = in.reach[u].words();
      std::copy(row.begin(), row.end(), reach_.begin() + static_cast<std::ptrdiff_t>(u * words_));
      in.reach[u].for_each([&](Vertex v) { coverers_[v * words_ + u / 64] |= Word{1} << (u % 64); });
    }
    const auto cand = in.candidates.words();
    candidates_.assign(cand.begin(), cand.end());
    const auto tgt = in.targets.words();
    targets_.assign(tgt.begin(), tgt.end());
  }

  bool feasible() const {
    bool ok = true;
    for_each_bit(targets_.data(), words_, [&](std::size_t v) {
      if (none(&coverers_[v * words_], words_)) ok = false;
    });
    return ok;
  }

  std::size_t root_lower_bound() const { return lower_bound(targets_.data(), candidates_.data()); }

  /// Searches for covers strictly smaller than `incumbent`, stopping early once
  /// one of size <= stop_at is found. Returns false if the budget ran out.
  bool run(std::size_t incumbent, std::size_t stop_at) {
    best_size_ = incumbent;
    stop_at_ = stop_at;
    aborted_ = false;
    chosen_.clear();
    dfs(targets_, candidates_);
    return !aborted_;
  }

  std::size_t best_size() const { return best_size_; }
  const std::vector<std::size_t>& best_set() const { return best_set_; }

 private:
  std::size_t lower_bound(const Word* uncovered, const Word* allowed) const {
    const std::size_t remaining = popcount(uncovered, words_);
    if (remaining == 0) return 0;
    std::size_t max_gain = 0;
    for_each_bit(allowed, words_, [&](std::size_t u) {
      max_gain = std::max(max_gain, popcount_and(&reach_[u * words_], uncovered, words_));
    });
    if (max_gain == 0) return CoverResult::kNone;
    return (remaining + max_gain - 1) / max_gain;
  }

  void dfs(const std::vector<Word>& uncovered, const std::vector<Word>& allowed) {
    const std::size_t depth = chosen_.size();
    if (none(uncovered.data(), words_)) {
      if (depth < best_size_) {
        best_size_ = depth;
        best_set_ = chosen_;
      }
      return;
    }
    if (depth + 1 >= best_size_) return;
    const std::size_t lb = lower_bound(uncovered.data(), allowed.data());
    if (lb == CoverResult::kNone || depth + lb >= best_size_) return;

    // uncovered target with the fewest usable coverers
    std::size_t pivot = n_;
    std::size_t pivot_options = CoverResult::kNone;
    for_each_bit(uncovered.data(), words_, [&](std::size_t v) {
      const std::size_t options = popcount_and(&coverers_[v * words_], allowed.data(), words_);
      if (options < pivot_options) {
        pivot_options = options;
        pivot = v;
      }
    });
    if (pivot_options == 0) return;

    std::vector<std::pair<std::size_t, std::size_t>> branches;  // (gain, u)
    branches.reserve(pivot_options);
    for (std::size_t w = 0; w < words_; ++w) {
      Word bits = coverers_[pivot * words_ + w] & allowed[w];
      while (bits) {
        const std::size_t u = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        branches.emplace_back(popcount_and(&reach_[u * words_], uncovered.data(), words_), u);
        bits &= bits - 1;
      }
    }
    std::sort(branches.begin(), branches.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });

    std::vector<Word> sibling_allowed = allowed;
    std::vector<Word> next_uncovered(words_);
    for (const auto& [gain, u] : branches) {
      if (!budget_.spend()) {
        aborted_ = true;
        return;
      }
      for (std::size_t w = 0; w < words_; ++w) next_uncovered[w] = uncovered[w] & ~reach_[u * words_ + w];
      // covers containing earlier siblings were already explored
      reset(sibling_allowed.data(), u);
      chosen_.push_back(u);
      dfs(next_uncovered, sibling_allowed);
      chosen_.pop_back();
      if (aborted_ || best_size_ <= stop_at_) return;
      if (depth + 1 >= best_size_) return;
    }
  }

  std::size_t n_;
  std::size_t words_;
  Budget& budget_;
  std::vector<Word> reach_;
  std::vector<Word> coverers_;
  std::vector<Word> candidates_;
  std::vector<Word> targets_;

  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_set_;
  std::size_t best_size_ = CoverResult::kNone;
  std::size_t stop_at_ = 0;
  bool aborted_ = false;
};

}  // namespace

std::optional<VertexSet> greedy_cover(const CoverInstance& in) {
  check_instance(in);
  const std::size_t n = in.universe();
  VertexSet uncovered = in.targets;
  VertexSet picked(n);
  while (!uncovered.empty()) {
    std::size_t best_gain = 0;
    Vertex best = n;
    in.candidates.for_each([&](Vertex u) {
      const std::size_t gain = (in.reach[u] & uncovered).count();
      if (gain > best_gain) {
        best_gain = gain;
        best = u;
      }
    });
    if (best == n) return std::nullopt;
    picked.insert(best);
    uncovered -= in.reach[best];
  }
  return picked;
}

CoverResult minimum_cover(const CoverInstance& in, Budget& budget) {
  check_instance(in);
  CoverResult result;
  const std::size_t n = in.universe();
  CoverSearch search(in, budget);
  if (!search.feasible()) {
    result.outcome = Outcome::infeasible;
    result.best = VertexSet(n);
    return result;
  }
  auto greedy = greedy_cover(in);
  result.best = *greedy;
  result.upper = greedy->count();
  result.lower = search.root_lower_bound();
  if (result.lower >= result.upper) {
    result.outcome = Outcome::exact;
    return result;
  }
  const bool finished = search.run(result.upper, 0);
  if (search.best_size() < result.upper) {
    result.upper = search.best_size();
    result.best = VertexSet(n, search.best_set());
  }
  if (finished) {
    result.outcome = Outcome::exact;
    result.lower = result.upper;
  } else {
    result.outcome = Outcome::unknown;
  }
  return result;
}

std::optional<bool> has_cover_within(const CoverInstance& in, std::size_t size, Budget& budget,
                                     VertexSet* witness) {
  check_instance(in);
  if (in.targets.empty()) {
    if (witness) *witness = VertexSet(in.universe());
    return true;
  }
  CoverSearch search(in, budget);
  if (!search.feasible() || size == 0) return false;
  if (auto greedy = greedy_cover(in); greedy && greedy->count() <= size) {
    if (witness) *witness = *greedy;
    return true;
  }
  if (search.root_lower_bound() > size) return false;
  const bool finished = search.run(size + 1, size);
  if (search.best_size() <= size) {
    if (witness) *witness = VertexSet(in.universe(), search.best_set());
    return true;
  }
  if (!finished) return std::nullopt;
  return false;
}

}  // namespace vizlab
