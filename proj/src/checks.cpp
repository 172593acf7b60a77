#include "uso/checks.hpp"

#include <bit>
#include <deque>
#include <vector>

namespace uso {

namespace {

// Tiny unit-capacity max flow (BFS augmentation). Node count is at most
// 2 * 2^d + 2, and at most d augmentations are ever needed.
class UnitFlow {
 public:
  explicit UnitFlow(int nodes) : head_(nodes, -1) {}

  void add_edge(int a, int b) {
    edges_.push_back({b, head_[a], 1});
    head_[a] = static_cast<int>(edges_.size()) - 1;
    edges_.push_back({a, head_[b], 0});
    head_[b] = static_cast<int>(edges_.size()) - 1;
  }

  int max_flow(int s, int t, int limit) {
    int flow = 0;
    std::vector<int> par_edge(head_.size());
    while (flow < limit) {
      std::fill(par_edge.begin(), par_edge.end(), -2);
      par_edge[s] = -1;
      std::deque<int> q{s};
      while (!q.empty() && par_edge[t] == -2) {
        int a = q.front();
        q.pop_front();
        for (int e = head_[a]; e != -1; e = edges_[e].next) {
          if (edges_[e].cap > 0 && par_edge[edges_[e].to] == -2) {
            par_edge[edges_[e].to] = e;
            q.push_back(edges_[e].to);
          }
        }
      }
      if (par_edge[t] == -2) break;
      for (int v = t; v != s;) {
        int e = par_edge[v];
        edges_[e].cap -= 1;
        edges_[e ^ 1].cap += 1;
        v = edges_[e ^ 1].to;
      }
      ++flow;
    }
    return flow;
  }

 private:
  struct Edge {
    int to, next, cap;
  };
  std::vector<int> head_;
  std::vector<Edge> edges_;
};

int count_subcube_sinks(const Orientation& phi, std::uint32_t base, CoordSet C) {
  int sinks = 0;
  std::uint32_t I = 0;
  while (true) {
    if ((phi.out(base ^ I) & C) == 0) ++sinks;
    if (I == C) break;
    I = (I - C) & C;
  }
  return sinks;
}

}  // namespace

bool is_uso(const Orientation& phi) {
  bool ok = true;
  for_each_subcube(phi.dim(), [&](std::uint32_t base, CoordSet C) {
    if (ok && count_subcube_sinks(phi, base, C) != 1) ok = false;
  });
  return ok;
}

bool uso_screen(const Orientation& phi) {
  const std::uint32_t N = phi.vertex_count();
  for (std::uint32_t u = 0; u < N; ++u)
    for (std::uint32_t v = u + 1; v < N; ++v)
      if (((phi.out(u) ^ phi.out(v)) & (u ^ v)) == 0) return false;
  return true;
}

Vertex unique_sink(const Orientation& phi, const Subcube& s) {
  check_coord_set(phi.dim(), s.coords);
  int found = 0;
  std::uint32_t sink = 0;
  for (std::uint32_t v : s.vertex_indices()) {
    if ((phi.out(v) & s.coords) == 0) {
      ++found;
      sink = v;
    }
  }
  if (found != 1)
    throw NotUniqueSinkError("subcube has " + std::to_string(found) + " sinks");
  return Vertex{phi.dim(), sink};
}

Vertex unique_source(const Orientation& phi, const Subcube& s) {
  check_coord_set(phi.dim(), s.coords);
  int found = 0;
  std::uint32_t src = 0;
  for (std::uint32_t v : s.vertex_indices()) {
    if ((phi.out(v) & s.coords) == s.coords) {
      ++found;
      src = v;
    }
  }
  if (found != 1)
    throw NotUniqueSinkError("subcube has " + std::to_string(found) + " sources");
  return Vertex{phi.dim(), src};
}

bool is_acyclic(const Orientation& phi) {
  const std::uint32_t N = phi.vertex_count();
  std::vector<int> indeg(N, 0);
  for (std::uint32_t v = 0; v < N; ++v)
    for (int i = 1; i <= phi.dim(); ++i)
      if (phi.edge_out(v, i)) ++indeg[v ^ coord_bit(i)];
  std::deque<std::uint32_t> q;
  for (std::uint32_t v = 0; v < N; ++v)
    if (indeg[v] == 0) q.push_back(v);
  std::uint32_t seen = 0;
  while (!q.empty()) {
    std::uint32_t v = q.front();
    q.pop_front();
    ++seen;
    for (int i = 1; i <= phi.dim(); ++i) {
      if (!phi.edge_out(v, i)) continue;
      std::uint32_t u = v ^ coord_bit(i);
      if (--indeg[u] == 0) q.push_back(u);
    }
  }
  return seen == N;
}

bool is_locally_uniform(const Orientation& phi) {
  const int n = phi.dim();
  for (std::uint32_t u = 0; u < phi.vertex_count(); ++u) {
    for (int i = 1; i <= n; ++i) {
      if ((u >> (i - 1)) & 1u) continue;
      for (int j = i + 1; j <= n; ++j) {
        if ((u >> (j - 1)) & 1u) continue;
        std::uint32_t ui = u ^ coord_bit(i), uj = u ^ coord_bit(j);
        // both outgoing at u => far edges point into u+{i,j}
        if (phi.edge_out(u, i) && phi.edge_out(u, j)) {
          if (!phi.edge_out(ui, j) || !phi.edge_out(uj, i)) return false;
        }
        // both incoming at u => far edges point out of u+{i,j}
        if (phi.edge_out(ui, i) && phi.edge_out(uj, j)) {
          std::uint32_t uij = ui ^ coord_bit(j);
          if (!phi.edge_out(uij, j) || !phi.edge_out(uij, i)) return false;
        }
      }
    }
  }
  return true;
}

int disjoint_path_count(const Orientation& phi, const Subcube& s) {
  const int d = s.dimension();
  if (d == 0) return 0;
  std::uint32_t src = unique_source(phi, s).bits;
  std::uint32_t snk = unique_sink(phi, s).bits;
  auto verts = s.vertex_indices();
  // dense local ids: compress subcube index over coords
  auto local_id = [&](std::uint32_t v) {
    std::uint32_t rel = (v ^ s.base.bits);
    std::uint32_t id = 0;
    std::uint32_t rem = s.coords;
    for (int k = 0; k < d; ++k) {
      std::uint32_t low = rem & (~rem + 1);
      if (rel & low) id |= std::uint32_t{1} << k;
      rem ^= low;
    }
    return id;
  };
  // node layout: in(v) = 2*id, out(v) = 2*id+1; source uses its out node,
  // sink its in node
  UnitFlow flow(2 << d);
  for (std::uint32_t v : verts) {
    if (v != src && v != snk) flow.add_edge(2 * local_id(v), 2 * local_id(v) + 1);
    std::uint32_t m = phi.out(v) & s.coords;
    for (int i = 1; i <= phi.dim(); ++i) {
      if (!((m >> (i - 1)) & 1u)) continue;
      std::uint32_t w = v ^ coord_bit(i);
      flow.add_edge(2 * local_id(v) + 1, 2 * local_id(w));
    }
  }
  // src/snk are not split: flow starts at out(src) and ends at in(snk)
  return flow.max_flow(2 * local_id(src) + 1, 2 * local_id(snk), d);
}

namespace {

bool holt_klee_unchecked(const Orientation& phi) {
  bool ok = true;
  for_each_subcube(phi.dim(), [&](std::uint32_t base, CoordSet C) {
    int d = std::popcount(C);
    if (!ok || d < 2) return;
    Subcube s{Vertex{phi.dim(), base}, C};
    if (disjoint_path_count(phi, s) != d) ok = false;
  });
  return ok;
}

}  // namespace

bool is_holt_klee(const Orientation& phi) {
  if (!is_uso(phi)) throw NotUsoError();
  return holt_klee_unchecked(phi);
}

bool is_strongly_holt_klee(const Orientation& phi) {
  if (!is_uso(phi)) throw NotUsoError();
  const CoordSet all = full_coord_set(phi.dim());
  for (CoordSet F = 0; F <= all; ++F) {
    Orientation rev = reverse(phi, F);
    if (!is_uso(rev)) throw NotUsoError();  // reversal of a USO stays a USO
    if (!holt_klee_unchecked(rev)) return false;
  }
  return true;
}

ClassProfile classify(const Orientation& phi) {
  ClassProfile p;
  p.is_uso = is_uso(phi);
  p.is_acyclic = is_acyclic(phi);
  p.is_locally_uniform = is_locally_uniform(phi);
  if (p.is_uso) {
    p.is_holt_klee = holt_klee_unchecked(phi);
    p.is_strongly_holt_klee = p.is_holt_klee && is_strongly_holt_klee(phi);
  }
  return p;
}

}  // namespace uso
