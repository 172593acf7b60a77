#include "uso/census.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "uso/lcp.hpp"
#include "uso/random.hpp"

namespace uso {

namespace {

// Walks every orientation by assigning outmaps vertex by vertex in index
// order. Bits at coordinates with v_i = 1 are forced by antisymmetry from
// the lower neighbour; bits with v_i = 0 are free. With pruning on, a
// partial assignment is abandoned as soon as the pairwise screen fails.
template <typename Leaf>
void walk_orientations(int n, bool prune, Leaf&& leaf) {
  const std::uint32_t N = std::uint32_t{1} << n;
  const CoordSet all = full_coord_set(n);
  std::vector<std::uint32_t> out(N, 0);

  auto rec = [&](auto&& self, std::uint32_t v) -> void {
    if (v == N) {
      leaf(out);
      return;
    }
    const CoordSet forced_coords = v;  // bits set in v point to lower vertices
    CoordSet forced = 0;
    for (int i = 1; i <= n; ++i)
      if ((forced_coords >> (i - 1)) & 1u && !((out[v ^ coord_bit(i)] >> (i - 1)) & 1u))
        forced |= coord_bit(i);
    const CoordSet free = all & ~forced_coords;
    // iterate submasks of `free` ascending
    std::uint32_t sub = 0;
    while (true) {
      out[v] = forced | sub;
      bool ok = true;
      if (prune) {
        for (std::uint32_t u = 0; u < v; ++u)
          if (((out[u] ^ out[v]) & (u ^ v)) == 0) { ok = false; break; }
      }
      if (ok) self(self, v + 1);
      if (sub == free) break;
      sub = (sub - free) & free;
    }
    out[v] = 0;
  };
  rec(rec, 0);
}

}  // namespace

CensusReport enumerate_usos(int n, bool prune) {
  if (n < 1 || n > 4) throw std::invalid_argument("enumeration supported for n <= 4");
  CensusReport rep;
  rep.n = n;
  const std::uint64_t edges = static_cast<std::uint64_t>(n) << (n - 1);
  rep.total = std::uint64_t{1} << edges;  // orientations covered by the sweep
  std::uint64_t leaves = 0;
  walk_orientations(n, prune, [&](const std::vector<std::uint32_t>& out) {
    ++leaves;
    Orientation phi(n, out);
    bool uso = is_uso(phi);
    if (uso != uso_screen(phi))
      throw std::logic_error("definitional USO test disagrees with the screen");
    if (!uso) return;
    ++rep.usos;
    ClassProfile p = classify(phi);
    if (p.is_acyclic) ++rep.acyclic;
    if (p.is_locally_uniform) ++rep.locally_uniform;
    if (p.is_holt_klee) ++rep.holt_klee;
    if (p.is_strongly_holt_klee) ++rep.strongly_holt_klee;
  });
  if (!prune && leaves != rep.total)
    throw std::logic_error("orientation sweep miscounted");
  return rep;
}

std::uint64_t count_usos(int n, bool prune) {
  std::uint64_t count = 0;
  walk_orientations(n, prune, [&](const std::vector<std::uint32_t>& out) {
    if (is_uso(Orientation(n, out))) ++count;
  });
  return count;
}

CensusReport census_sampled_p(int n, int trials, std::uint64_t seed) {
  CensusReport rep;
  rep.n = n;
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    RationalMatrix M = random_p_matrix(n, rng);
    RationalVector q = random_nondegenerate_q(M, rng);
    Orientation phi = induced_orientation(M, q);
    ++rep.total;
    ++rep.usos;
    ClassProfile p = classify(phi);
    if (p.is_acyclic) ++rep.acyclic;
    if (p.is_locally_uniform) ++rep.locally_uniform;
    if (p.is_holt_klee) ++rep.holt_klee;
    if (p.is_strongly_holt_klee) ++rep.strongly_holt_klee;
    else ++rep.strong_hk_failures;
  }
  return rep;
}

namespace {

struct Dir {
  Rational x, y;
};

bool upper_half(const Dir& d) {
  int sy = sgn(d.y);
  return sy > 0 || (sy == 0 && sgn(d.x) > 0);
}

Rational cross(const Dir& a, const Dir& b) { return a.x * b.y - a.y * b.x; }

// strict angular order on [0, 2pi)
bool angle_less(const Dir& a, const Dir& b) {
  bool ha = upper_half(a), hb = upper_half(b);
  if (ha != hb) return ha;
  return sgn(cross(a, b)) > 0;
}

bool same_direction(const Dir& a, const Dir& b) {
  return sgn(cross(a, b)) == 0 && sgn(a.x * b.x + a.y * b.y) > 0;
}

int exact_sector_count(const RationalMatrix& M, std::set<Orientation>& usos) {
  std::vector<Dir> dirs;
  for (Basis B = 0; B < 4; ++B) {
    RationalMatrix inv = basis_matrix(M, B).inverse();
    for (int r = 0; r < 2; ++r) {
      // boundary rays of the cell arrangement: the directions lying on
      // the line {x : row . x = 0}, i.e. the row rotated by 90 degrees
      dirs.push_back({-inv.at(r, 1), inv.at(r, 0)});
      dirs.push_back({inv.at(r, 1), -inv.at(r, 0)});
    }
  }
  std::sort(dirs.begin(), dirs.end(), angle_less);
  dirs.erase(std::unique(dirs.begin(), dirs.end(), same_direction), dirs.end());
  const int k = static_cast<int>(dirs.size());
  int count = 0;
  for (int i = 0; i < k; ++i) {
    const Dir& a = dirs[i];
    const Dir& b = dirs[(i + 1) % k];
    Dir mid{a.x + b.x, a.y + b.y};
    if (sgn(mid.x) == 0 && sgn(mid.y) == 0)
      mid = {-a.y, a.x};  // adjacent antipodal pair: rotate 90 degrees
    RationalVector q(2);
    q[0] = mid.x;
    q[1] = mid.y;
    usos.insert(induced_orientation(M, q));
    ++count;
  }
  return count;
}

}  // namespace

FixedMatrixCount count_fixed_matrix_usos(const RationalMatrix& M, int samples,
                                         std::uint64_t seed, bool exact_n2) {
  if (!is_p_matrix(M)) throw NotPMatrixError();
  if (exact_n2 && M.rows() != 2)
    throw std::invalid_argument("exact sector enumeration is n = 2 only");
  FixedMatrixCount res;
  res.samples = samples;
  Rng rng(seed);
  std::set<Orientation> seen;
  for (int t = 0; t < samples; ++t) {
    RationalVector q = random_q(M.rows(), rng);
    try {
      seen.insert(induced_orientation(M, q));
    } catch (const DegenerateError&) {
      ++res.degenerate_skipped;
    }
  }
  res.distinct = static_cast<int>(seen.size());
  if (exact_n2) {
    std::set<Orientation> sector_usos;
    exact_sector_count(M, sector_usos);
    res.exact = static_cast<int>(sector_usos.size());
    // the cells of the arrangement refine the USO partition
    for (const Orientation& phi : seen)
      if (!sector_usos.count(phi))
        throw std::logic_error("sampled USO missing from sector enumeration");
  }
  return res;
}

}  // namespace uso
