#include "vizlab/vertex_set.hpp"

#include <sstream>
#include <stdexcept>

namespace vizlab {

namespace {
std::size_t words_for(std::size_t universe) {
  return (universe + VertexSet::kWordBits - 1) / VertexSet::kWordBits;
}
}  // namespace

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_(words_for(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~Word{0};
  if (const std::size_t tail = universe % kWordBits; tail != 0) {
    s.words_.back() = (Word{1} << tail) - 1;
  }
  return s;
}

void VertexSet::check(Vertex v) const {
  if (v >= universe_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside universe of size " +
                            std::to_string(universe_));
  }
}

void VertexSet::insert(Vertex v) {
  check(v);
  words_[v / kWordBits] |= Word{1} << (v % kWordBits);
}

void VertexSet::erase(Vertex v) {
  check(v);
  words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
}

void VertexSet::clear() {
  for (auto& w : words_) w = 0;
}

std::size_t VertexSet::count() const {
  std::size_t c = 0;
  for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexSet::empty() const {
  for (Word w : words_)
    if (w) return false;
  return true;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  if (other.universe_ != universe_) throw std::invalid_argument("universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  if (other.universe_ != universe_) throw std::invalid_argument("universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

Vertex VertexSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return w * kWordBits + std::countr_zero(words_[w]);
  return universe_;
}

Vertex VertexSet::next(Vertex v) const {
  ++v;
  if (v >= universe_) return universe_;
  std::size_t w = v / kWordBits;
  Word bits = words_[w] & (~Word{0} << (v % kWordBits));
  while (true) {
    if (bits) return w * kWordBits + std::countr_zero(bits);
    if (++w == words_.size()) return universe_;
    bits = words_[w];
  }
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(count());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  if (other.universe_ != universe_) throw std::invalid_argument("universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  if (other.universe_ != universe_) throw std::invalid_argument("universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  if (other.universe_ != universe_) throw std::invalid_argument("universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

bool VertexSet::lex_less(const VertexSet& other) const {
  Vertex a = first();
  Vertex b = other.first();
  while (a != universe_ && b != other.universe_) {
    if (a != b) return a < b;
    a = next(a);
    b = other.next(b);
  }
  // a proper prefix sorts first
  return a == universe_ && b != other.universe_;
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first_member = true;
  for_each([&](Vertex v) {
    if (!first_member) os << ',';
    os << v;
    first_member = false;
  });
  os << '}';
  return os.str();
}

}  // namespace vizlab
