#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace reasm {

using Vertex = int;

/// Dynamic bitset over vertex ids. Bit v stands for vertex v; the set grows
/// on insertion so callers never size it up front.
class VertexSet {
public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) insert(v);
  }
  static VertexSet range(Vertex first, Vertex last); // [first, last]
  static VertexSet of(const std::vector<Vertex>& vs);

  void insert(Vertex v);
  void erase(Vertex v);
  bool contains(Vertex v) const {
    auto w = static_cast<std::size_t>(v) >> 6;
    return w < words_.size() && ((words_[w] >> (v & 63)) & 1U);
  }

  std::size_t size() const;
  bool empty() const;
  Vertex min() const; // -1 when empty
  Vertex max() const; // -1 when empty

  bool intersects(const VertexSet& o) const;
  bool is_subset_of(const VertexSet& o) const;
  std::size_t intersection_size(const VertexSet& o) const;

  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet& a, const VertexSet& b);
  /// Orders by the sorted member list, lexicographically.
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b);

  std::vector<Vertex> to_vector() const;
  std::string to_string() const; // "{1,2,3}"
  std::size_t hash() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = std::countr_zero(bits);
        f(static_cast<Vertex>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

private:
  void trim();
  std::vector<std::uint64_t> words_; // no trailing zero words
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

} // namespace reasm
