#include "uso/cube.hpp"

#include <bit>

namespace uso {

void check_coord_set(int n, CoordSet I) {
  if (n < 1 || n > 31) throw std::invalid_argument("dimension out of range");
  if ((I & ~full_coord_set(n)) != 0)
    throw std::invalid_argument("coordinate out of range");
}

Vertex flip(Vertex v, CoordSet I) {
  check_coord_set(v.n, I);
  return Vertex{v.n, v.bits ^ I};
}

int Subcube::dimension() const { return std::popcount(coords); }

std::vector<std::uint32_t> Subcube::vertex_indices() const {
  std::vector<std::uint32_t> verts;
  verts.reserve(std::uint32_t{1} << dimension());
  std::uint32_t I = 0;
  while (true) {
    verts.push_back(base.bits ^ I);
    if (I == coords) break;
    I = (I - coords) & coords;
  }
  return verts;
}

Orientation::Orientation(int n, std::vector<std::uint32_t> out)
    : n_(n), out_(std::move(out)) {
  if (n < 1 || n > 31) throw std::invalid_argument("dimension out of range");
  if (out_.size() != (std::size_t{1} << n))
    throw std::invalid_argument("outmap size must be 2^n");
  const CoordSet all = full_coord_set(n);
  for (std::uint32_t v = 0; v < out_.size(); ++v) {
    if ((out_[v] & ~all) != 0)
      throw std::invalid_argument("outmap has out-of-range coordinate");
    for (int i = 1; i <= n; ++i) {
      std::uint32_t u = v ^ coord_bit(i);
      if (u < v) continue;
      bool a = (out_[v] >> (i - 1)) & 1u;
      bool b = (out_[u] >> (i - 1)) & 1u;
      if (a == b)
        throw std::invalid_argument("antisymmetry violated at vertex " +
                                    vertex_string(n, v) + " coordinate " +
                                    std::to_string(i));
    }
  }
}

Orientation Orientation::uniform(int n) {
  if (n < 1 || n > 31) throw std::invalid_argument("dimension out of range");
  const CoordSet all = full_coord_set(n);
  std::vector<std::uint32_t> out(std::size_t{1} << n);
  for (std::uint32_t v = 0; v < out.size(); ++v) out[v] = all & ~v;
  return Orientation(n, std::move(out));
}

Orientation reverse(const Orientation& phi, CoordSet F) {
  check_coord_set(phi.dim(), F);
  std::vector<std::uint32_t> out(phi.vertex_count());
  for (std::uint32_t v = 0; v < out.size(); ++v) {
    // edges in F coordinates now leave v iff they entered v before
    out[v] = (phi.out(v) & ~F) | (~phi.out(v) & F);
  }
  return Orientation(phi.dim(), std::move(out));
}

Orientation subcube_restriction(const Orientation& phi, const Subcube& s) {
  check_coord_set(phi.dim(), s.coords);
  if (s.base.n != phi.dim() || s.base.bits >= phi.vertex_count())
    throw std::invalid_argument("subcube base outside the cube");
  const int d = s.dimension();
  if (d == 0) throw std::invalid_argument("zero-dimensional restriction");
  // compress bits of s.coords to positions 1..d, increasing order
  std::vector<std::uint32_t> out(std::size_t{1} << d);
  for (std::uint32_t I = 0; I < out.size(); ++I) {
    std::uint32_t full_I = 0;
    {
      std::uint32_t rem = s.coords;
      for (int k = 0; k < d; ++k) {
        std::uint32_t low = rem & (~rem + 1);
        if ((I >> k) & 1u) full_I |= low;
        rem ^= low;
      }
    }
    std::uint32_t v = s.base.bits ^ full_I;
    std::uint32_t m = phi.out(v) & s.coords;
    std::uint32_t compressed = 0;
    std::uint32_t rem = s.coords;
    for (int k = 0; k < d; ++k) {
      std::uint32_t low = rem & (~rem + 1);
      if (m & low) compressed |= std::uint32_t{1} << k;
      rem ^= low;
    }
    out[I] = compressed;
  }
  return Orientation(d, std::move(out));
}

std::string vertex_string(int n, std::uint32_t bits) {
  std::string s(n, '0');
  for (int i = 0; i < n; ++i)
    if ((bits >> i) & 1u) s[i] = '1';
  return s;
}

std::uint32_t parse_vertex_string(const std::string& s, int n) {
  if (static_cast<int>(s.size()) != n)
    throw std::invalid_argument("vertex string must have length n");
  std::uint32_t bits = 0;
  for (int i = 0; i < n; ++i) {
    if (s[i] == '1') bits |= std::uint32_t{1} << i;
    else if (s[i] != '0') throw std::invalid_argument("vertex string must be 0/1");
  }
  return bits;
}

}  // namespace uso
