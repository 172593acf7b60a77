#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace uso {

// Coordinates are 1-based (1..n); a CoordSet packs coordinate i into
// bit i-1. Vertices use the same little-endian packing, so the integer
// encoding of a vertex is index(v) = sum v_i 2^{i-1}.
using CoordSet = std::uint32_t;

constexpr CoordSet coord_bit(int i) { return CoordSet{1} << (i - 1); }
constexpr CoordSet full_coord_set(int n) {
  return n == 32 ? ~CoordSet{0} : (CoordSet{1} << n) - 1;
}

struct Vertex {
  int n = 0;
  std::uint32_t bits = 0;

  std::uint32_t index() const { return bits; }
  bool coord(int i) const { return (bits >> (i - 1)) & 1u; }
  bool operator==(const Vertex&) const = default;
};

void check_coord_set(int n, CoordSet I);

// v with every coordinate in I complemented.
Vertex flip(Vertex v, CoordSet I);

struct Subcube {
  Vertex base;
  CoordSet coords = 0;

  int dimension() const;
  // All 2^|coords| vertex indices of the subcube, base first.
  std::vector<std::uint32_t> vertex_indices() const;
};

// An orientation of the n-cube stored as an outmap: out(v) is the set of
// coordinates whose incident edge leaves v. Antisymmetry (each edge has
// exactly one direction) is validated on construction; instances are
// immutable values afterwards.
class Orientation {
 public:
  Orientation(int n, std::vector<std::uint32_t> out);

  // All edges directed 0 -> 1; the unique sink is the all-ones vertex.
  static Orientation uniform(int n);

  int dim() const { return n_; }
  std::uint32_t vertex_count() const { return std::uint32_t{1} << n_; }
  CoordSet out(std::uint32_t v) const { return out_[v]; }
  const std::vector<std::uint32_t>& outmap() const { return out_; }

  // True iff the edge at v in coordinate i leaves v.
  bool edge_out(std::uint32_t v, int i) const {
    return (out_[v] >> (i - 1)) & 1u;
  }

  bool operator==(const Orientation&) const = default;
  auto operator<=>(const Orientation&) const = default;

 private:
  int n_;
  std::vector<std::uint32_t> out_;
};

// Orientation with every edge in a coordinate of F reversed.
Orientation reverse(const Orientation& phi, CoordSet F);

// The orientation induced on a subcube, with coordinates relabelled to
// 1..|C| in increasing original order and vertices re-based at s.base.
Orientation subcube_restriction(const Orientation& phi, const Subcube& s);

// Visits every subcube of the n-cube exactly once: coordinate sets in
// increasing mask order, bases ascending with base bits zero on C.
template <typename F>
void for_each_subcube(int n, F&& fn) {
  const std::uint32_t all = full_coord_set(n);
  for (CoordSet C = 0; C <= all; ++C) {
    std::uint32_t free = all & ~C;
    // enumerate submasks of `free` ascending
    std::uint32_t base = 0;
    while (true) {
      fn(base, C);
      if (base == free) break;
      base = (base - free) & free;
    }
  }
}

// Bit string with coordinate 1 leftmost, e.g. n=3, index 1 -> "100".
std::string vertex_string(int n, std::uint32_t bits);
std::uint32_t parse_vertex_string(const std::string& s, int n);

}  // namespace uso
