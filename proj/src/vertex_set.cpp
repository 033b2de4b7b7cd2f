#include "reasm/vertex_set.hpp"

#include <algorithm>

namespace reasm {

VertexSet VertexSet::range(Vertex first, Vertex last) {
  VertexSet s;
  for (Vertex v = first; v <= last; ++v) s.insert(v);
  return s;
}

VertexSet VertexSet::of(const std::vector<Vertex>& vs) {
  VertexSet s;
  for (Vertex v : vs) s.insert(v);
  return s;
}

void VertexSet::insert(Vertex v) {
  auto w = static_cast<std::size_t>(v) >> 6;
  if (w >= words_.size()) words_.resize(w + 1, 0);
  words_[w] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
  auto w = static_cast<std::size_t>(v) >> 6;
  if (w >= words_.size()) return;
  words_[w] &= ~(std::uint64_t{1} << (v & 63));
  trim();
}

std::size_t VertexSet::size() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool VertexSet::empty() const { return words_.empty(); }

Vertex VertexSet::min() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return static_cast<Vertex>(w * 64 + std::countr_zero(words_[w]));
  return -1;
}

Vertex VertexSet::max() const {
  if (words_.empty()) return -1;
  std::size_t w = words_.size() - 1;
  return static_cast<Vertex>(w * 64 + 63 - std::countl_zero(words_[w]));
}

bool VertexSet::intersects(const VertexSet& o) const {
  std::size_t k = std::min(words_.size(), o.words_.size());
  for (std::size_t i = 0; i < k; ++i)
    if (words_[i] & o.words_[i]) return true;
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
  if (words_.size() > o.words_.size()) return false;
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

std::size_t VertexSet::intersection_size(const VertexSet& o) const {
  std::size_t k = std::min(words_.size(), o.words_.size());
  std::size_t n = 0;
  for (std::size_t i = 0; i < k; ++i)
    n += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
  return n;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
  for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  if (words_.size() > o.words_.size()) words_.resize(o.words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  trim();
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  std::size_t k = std::min(words_.size(), o.words_.size());
  for (std::size_t i = 0; i < k; ++i) words_[i] &= ~o.words_[i];
  trim();
  return *this;
}

bool operator==(const VertexSet& a, const VertexSet& b) { return a.words_ == b.words_; }

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
  auto va = a.to_vector();
  auto vb = b.to_vector();
  return std::lexicographical_compare_three_way(va.begin(), va.end(), vb.begin(), vb.end());
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

std::string VertexSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for_each([&](Vertex v) {
    if (!first) s += ',';
    s += std::to_string(v);
    first = false;
  });
  return s + "}";
}

std::size_t VertexSet::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (auto w : words_) {
    h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

void VertexSet::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

} // namespace reasm
