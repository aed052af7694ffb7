#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace vizlab {

using Vertex = std::size_t;

/// Dense set of vertex indices over a fixed universe [0, universe()).
///
/// Stored as 64-bit words so the solvers can run union/intersection over
/// whole neighborhoods at once. Two sets compare equal only when their
/// universes match.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
  VertexSet(std::size_t universe, std::span<const Vertex> members);

  static VertexSet full(std::size_t universe);

  std::size_t universe() const { return universe_; }
  std::size_t word_count() const { return words_.size(); }
  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  bool contains(Vertex v) const {
    return v < universe_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1U);
  }
  void insert(Vertex v);
  void erase(Vertex v);
  void clear();

  std::size_t count() const;
  bool empty() const;
  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  /// Smallest member, or universe() when empty.
  Vertex first() const;
  /// Smallest member greater than v, or universe() when none.
  Vertex next(Vertex v) const;

  std::vector<Vertex> members() const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Lexicographic comparison of the sorted member lists.
  bool lex_less(const VertexSet& other) const;

  std::string to_string() const;

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits) {
        fn(static_cast<Vertex>(w * kWordBits + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

 private:
  void check(Vertex v) const;

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

}  // namespace vizlab
