#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "macloops/errors.hpp"

namespace macloops {

// A subset of the vertex set {1..m}, m <= 64. Vertices are 1-based labels;
// bit v-1 of the mask is set exactly when vertex v belongs to the set.
// Used for faces, non-faces and index sets alike.
class FaceSet {
public:
  static constexpr int max_vertices = 64;

  constexpr FaceSet() = default;

  static FaceSet of(std::initializer_list<int> vertices) {
    FaceSet s;
    for (int v : vertices) s.insert(v);
    return s;
  }

  static FaceSet from_vertices(const std::vector<int>& vertices) {
    FaceSet s;
    for (int v : vertices) s.insert(v);
    return s;
  }

  static FaceSet from_mask(std::uint64_t mask) {
    FaceSet s;
    s.bits_ = mask;
    return s;
  }

  // The full set {1..m}.
  static FaceSet full(int m) {
    check_vertex_bound(m == 0 ? 1 : m);
    FaceSet s;
    s.bits_ = (m == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1);
    return s;
  }

  void insert(int v) {
    check_vertex_bound(v);
    bits_ |= bit(v);
  }

  void erase(int v) {
    check_vertex_bound(v);
    bits_ &= ~bit(v);
  }

  bool contains(int v) const { return v >= 1 && v <= max_vertices && (bits_ & bit(v)); }

  bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }

  bool subset_of(FaceSet other) const { return (bits_ & ~other.bits_) == 0; }
  bool intersects(FaceSet other) const { return (bits_ & other.bits_) != 0; }

  FaceSet operator|(FaceSet o) const { return from_mask(bits_ | o.bits_); }
  FaceSet operator&(FaceSet o) const { return from_mask(bits_ & o.bits_); }
  FaceSet operator-(FaceSet o) const { return from_mask(bits_ & ~o.bits_); }

  // Smallest vertex, or 0 when empty.
  int min_vertex() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }
  // Largest vertex, or 0 when empty.
  int max_vertex() const { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }

  // Relabels every vertex v to v + offset (used when joining complexes).
  FaceSet shifted(int offset) const {
    if (bits_ == 0) return {};
    if (offset < 0 || max_vertex() + offset > max_vertices)
      throw Error(Errc::VertexOutOfRange, "shift exceeds the supported vertex range");
    return from_mask(bits_ << offset);
  }

  std::vector<int> vertices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1)
      out.push_back(std::countr_zero(rest) + 1);
    return out;
  }

  std::uint64_t mask() const { return bits_; }

  bool operator==(const FaceSet&) const = default;

private:
  static constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << (v - 1); }

  static void check_vertex_bound(int v) {
    if (v < 1 || v > max_vertices)
      throw Error(Errc::VertexOutOfRange,
                  "vertex " + std::to_string(v) + " outside supported range 1..64");
  }

  std::uint64_t bits_ = 0;
};

// Lexicographic order on the ascending vertex sequences, so {1,4} < {2,3}
// and {1,2} < {1,2,3}. This is the tie-break order used everywhere outputs
// must be reproducible.
inline bool lex_less(FaceSet a, FaceSet b) {
  if (a == b) return false;
  std::uint64_t x = a.mask(), y = b.mask();
  while (x != 0 && y != 0) {
    int va = std::countr_zero(x), vb = std::countr_zero(y);
    if (va != vb) return va < vb;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0;  // the proper prefix is smaller
}

struct FaceSetLexLess {
  bool operator()(FaceSet a, FaceSet b) const { return lex_less(a, b); }
};

}  // namespace macloops
