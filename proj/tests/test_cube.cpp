#include <doctest.h>

#include <random>

#include "uso/checks.hpp"
#include "uso/cube.hpp"
#include "uso/io.hpp"

using namespace uso;

namespace {

// all 16 orientations of the 2-cube, via the 4 edge-direction bits
std::vector<Orientation> all_orientations_2() {
  std::vector<Orientation> res;
  for (int bits = 0; bits < 16; ++bits) {
    std::vector<std::uint32_t> out(4, 0);
    int k = 0;
    for (std::uint32_t v = 0; v < 4; ++v)
      for (int i = 1; i <= 2; ++i) {
        if ((v >> (i - 1)) & 1u) continue;
        if ((bits >> k++) & 1)
          out[v] |= coord_bit(i);
        else
          out[v ^ coord_bit(i)] |= coord_bit(i);
      }
    res.emplace_back(2, std::move(out));
  }
  return res;
}

Orientation random_orientation(int n, std::mt19937_64& rng) {
  std::vector<std::uint32_t> out(std::size_t{1} << n, 0);
  for (std::uint32_t v = 0; v < out.size(); ++v)
    for (int i = 1; i <= n; ++i) {
      if ((v >> (i - 1)) & 1u) continue;
      if (rng() & 1)
        out[v] |= coord_bit(i);
      else
        out[v ^ coord_bit(i)] |= coord_bit(i);
    }
  return Orientation(n, std::move(out));
}

}  // namespace

TEST_CASE("flip") {
  CHECK(flip(Vertex{3, 0b000}, coord_bit(1) | coord_bit(3)).bits == 0b101);
  CHECK(flip(Vertex{3, 0b011}, 0).bits == 0b011);
  for (std::uint32_t v = 0; v < 8; ++v)
    for (CoordSet I = 0; I < 8; ++I)
      CHECK(flip(flip(Vertex{3, v}, I), I).bits == v);
  CHECK_THROWS_AS(flip(Vertex{2, 0}, coord_bit(3)), std::invalid_argument);
}

TEST_CASE("uniform orientation") {
  Orientation u2 = Orientation::uniform(2);
  CHECK(u2.out(0b00) == (coord_bit(1) | coord_bit(2)));
  CHECK(u2.out(0b11) == 0);
  for (int n = 1; n <= 5; ++n) {
    Orientation u = Orientation::uniform(n);
    Subcube full{Vertex{n, 0}, full_coord_set(n)};
    CHECK(unique_sink(u, full).bits == full_coord_set(n));
  }
  CHECK(is_uso(Orientation::uniform(3)));
  CHECK_THROWS_AS(Orientation::uniform(0), std::invalid_argument);
}

TEST_CASE("antisymmetry validated on construction") {
  // both endpoints claim the coordinate-1 edge
  CHECK_THROWS_AS(Orientation(1, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Orientation(1, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Orientation(2, {4, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("reverse") {
  Orientation u2 = Orientation::uniform(2);
  CHECK(reverse(u2, 0) == u2);
  Orientation r = reverse(u2, coord_bit(1) | coord_bit(2));
  Subcube full{Vertex{2, 0}, full_coord_set(2)};
  CHECK(unique_sink(r, full).bits == 0b00);
  // involution over all 12 two-dimensional USOs and all 4 F
  for (const Orientation& phi : all_orientations_2()) {
    if (!is_uso(phi)) continue;
    for (CoordSet F = 0; F < 4; ++F) CHECK(reverse(reverse(phi, F), F) == phi);
  }
}

TEST_CASE("subcube restriction") {
  Orientation u3 = Orientation::uniform(3);
  SUBCASE("restriction to the full coordinate set is the identity") {
    Subcube full{Vertex{3, 0}, full_coord_set(3)};
    CHECK(subcube_restriction(u3, full) == u3);
  }
  SUBCASE("uniformity is hereditary") {
    for_each_subcube(3, [&](std::uint32_t base, CoordSet C) {
      if (C == 0) return;
      Subcube s{Vertex{3, base}, C};
      CHECK(subcube_restriction(u3, s) == Orientation::uniform(s.dimension()));
    });
  }
  SUBCASE("hand-built 3-USO restricted to base 000, C = {1,3}") {
    // uniform(3) with coordinate 2 reversed; on the face v_2 = 0 the edges
    // of coordinates 1 and 3 still point 0 -> 1
    Orientation phi = reverse(u3, coord_bit(2));
    Subcube s{Vertex{3, 0}, coord_bit(1) | coord_bit(3)};
    Orientation r = subcube_restriction(phi, s);
    CHECK(r == Orientation::uniform(2));
  }
}

TEST_CASE("restriction commutes with reverse on shared coordinates") {
  std::mt19937_64 rng(2024);
  auto check_all = [](const Orientation& phi) {
    const int n = phi.dim();
    for_each_subcube(n, [&](std::uint32_t base, CoordSet C) {
      if (C == 0) return;
      Subcube s{Vertex{n, base}, C};
      for (CoordSet F = 0; F <= full_coord_set(n); ++F) {
        // compress F & C to the restricted coordinate labels
        CoordSet Fc = 0;
        int k = 0;
        for (int i = 1; i <= n; ++i) {
          if (!((C >> (i - 1)) & 1u)) continue;
          ++k;
          if ((F >> (i - 1)) & 1u) Fc |= coord_bit(k);
        }
        CHECK(subcube_restriction(reverse(phi, F), s) ==
              reverse(subcube_restriction(phi, s), Fc));
      }
    });
  };
  for (const Orientation& phi : all_orientations_2()) check_all(phi);
  for (int t = 0; t < 20; ++t) check_all(random_orientation(3, rng));
}

TEST_CASE("orientation json round trip is byte identical") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 10; ++t) {
    Orientation phi = random_orientation(4, rng);
    auto j = orientation_to_json(phi);
    CHECK(orientation_from_json(j) == phi);
    CHECK(orientation_to_json(orientation_from_json(j)).dump() == j.dump());
  }
}

TEST_CASE("vertex strings") {
  CHECK(vertex_string(3, 0b001) == "100");
  CHECK(parse_vertex_string("100", 3) == 0b001);
  CHECK_THROWS_AS(parse_vertex_string("10", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_vertex_string("10x", 3), std::invalid_argument);
}

TEST_CASE("dot export lists every vertex and edge") {
  std::string dot = orientation_to_dot(Orientation::uniform(2));
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("\"00\" -> \"10\"") != std::string::npos);
  CHECK(dot.find("\"00\" -> \"01\"") != std::string::npos);
  CHECK(dot.find("\"11\" ->") == std::string::npos);
}
