#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

namespace berge {

using Vertex = int;

inline constexpr int kMaxVertices = 128;

// Fixed-width bitset over vertices 0..kMaxVertices-1. Two machine words, so
// every set operation is a handful of instructions.
class VertexSet {
 public:
  constexpr VertexSet() = default;

  static constexpr VertexSet range(Vertex lo, Vertex hi) {
    VertexSet s;
    for (Vertex v = lo; v < hi; ++v) s.set(v);
    return s;
  }

  template <class Range>
  static VertexSet of(const Range& vertices) {
    VertexSet s;
    for (Vertex v : vertices) s.set(v);
    return s;
  }

  constexpr void set(Vertex v) { words_[v >> 6] |= bit(v); }
  constexpr void reset(Vertex v) { words_[v >> 6] &= ~bit(v); }
  constexpr bool test(Vertex v) const { return (words_[v >> 6] & bit(v)) != 0; }

  constexpr int count() const {
    return std::popcount(words_[0]) + std::popcount(words_[1]);
  }
  constexpr bool empty() const { return (words_[0] | words_[1]) == 0; }
  constexpr bool intersects(const VertexSet& o) const {
    return ((words_[0] & o.words_[0]) | (words_[1] & o.words_[1])) != 0;
  }
  constexpr bool is_subset_of(const VertexSet& o) const {
    return ((words_[0] & ~o.words_[0]) | (words_[1] & ~o.words_[1])) == 0;
  }

  // Smallest member, or -1 when empty.
  constexpr Vertex first() const {
    if (words_[0] != 0) return std::countr_zero(words_[0]);
    if (words_[1] != 0) return 64 + std::countr_zero(words_[1]);
    return -1;
  }

  template <class F>
  constexpr void for_each(F&& f) const {
    for (int w = 0; w < 2; ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        f(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  constexpr VertexSet& operator&=(const VertexSet& o) {
    words_[0] &= o.words_[0];
    words_[1] &= o.words_[1];
    return *this;
  }
  constexpr VertexSet& operator|=(const VertexSet& o) {
    words_[0] |= o.words_[0];
    words_[1] |= o.words_[1];
    return *this;
  }
  // Set difference.
  constexpr VertexSet& operator-=(const VertexSet& o) {
    words_[0] &= ~o.words_[0];
    words_[1] &= ~o.words_[1];
    return *this;
  }

  friend constexpr VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend constexpr VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend constexpr VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend constexpr bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  static constexpr std::uint64_t bit(Vertex v) { return std::uint64_t{1} << (v & 63); }

  std::array<std::uint64_t, 2> words_{};
};

// Unordered vertex pair, stored with u < v.
struct VertexPair {
  Vertex u = 0;
  Vertex v = 0;

  static constexpr VertexPair of(Vertex a, Vertex b) {
    return a < b ? VertexPair{a, b} : VertexPair{b, a};
  }
  constexpr bool contains(Vertex x) const { return x == u || x == v; }
  constexpr Vertex other(Vertex x) const { return x == u ? v : u; }

  friend constexpr auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

}  // namespace berge
