#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "uniphy/error.hpp"

namespace uniphy {

// Set of small nonnegative integers (graph vertices, tree nodes, taxon or
// character indices). Capacity is 64; structures that would exceed it must
// reject their input with TooLarge before constructing one.
class VertexSet {
 public:
  static constexpr int kCapacity = 64;

  constexpr VertexSet() = default;

  static VertexSet of(std::initializer_list<int> items) {
    VertexSet s;
    for (int v : items) s.insert(v);
    return s;
  }

  static VertexSet single(int v) {
    VertexSet s;
    s.insert(v);
    return s;
  }

  // {0, 1, ..., n-1}
  static VertexSet first_n(int n) {
    check_index(n == 0 ? 0 : n - 1);
    VertexSet s;
    s.bits_ = (n >= kCapacity) ? ~0ull : ((1ull << n) - 1);
    return s;
  }

  bool contains(int v) const { return v >= 0 && v < kCapacity && (bits_ >> v) & 1; }
  void insert(int v) {
    check_index(v);
    bits_ |= 1ull << v;
  }
  void erase(int v) {
    if (v >= 0 && v < kCapacity) bits_ &= ~(1ull << v);
  }

  bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }
  int lowest() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

  VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  friend VertexSet operator|(VertexSet a, VertexSet b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, VertexSet b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, VertexSet b) { return a -= b; }

  friend bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }
  friend bool operator!=(VertexSet a, VertexSet b) { return a.bits_ != b.bits_; }

  bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  std::uint64_t raw() const { return bits_; }

  class iterator {
   public:
    explicit iterator(std::uint64_t bits) : bits_(bits) {}
    int operator*() const { return std::countr_zero(bits_); }
    iterator& operator++() {
      bits_ &= bits_ - 1;
      return *this;
    }
    bool operator!=(const iterator& o) const { return bits_ != o.bits_; }

   private:
    std::uint64_t bits_;
  };
  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

 private:
  static void check_index(int v) {
    if (v < 0 || v >= kCapacity)
      fail(ErrorKind::TooLarge, "index " + std::to_string(v) + " outside supported range [0, 64)");
  }

  std::uint64_t bits_ = 0;
};

// Ascending-element (shortlex-free, true lexicographic) order on sets viewed
// as sorted vectors; a proper prefix precedes its extensions.
inline bool lex_less(VertexSet a, VertexSet b) {
  while (!a.empty() && !b.empty()) {
    int x = a.lowest(), y = b.lowest();
    if (x != y) return x < y;
    a.erase(x);
    b.erase(y);
  }
  return a.empty() && !b.empty();
}

}  // namespace uniphy
