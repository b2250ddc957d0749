#pragma once

// Weyl hyperplane patterns: the set of root kernels of a root system,
// together with the relatedness / triad / family combinatorics.
//
// Two distinct hyperplanes U, V are "related" when some third pattern
// hyperplane W shares their common codimension-2 intersection. For central
// hyperplanes this is equivalent to the normal of W lying in the
// 2-dimensional span of the normals of U and V, which is how it is decided
// here (a rank computation, exact and basis-free).

#include "weylpat/matrix.hpp"
#include "weylpat/rational.hpp"
#include "weylpat/rootsystem.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

namespace weylpat {

struct Hyperplane {
  Vec normal;  // primitive integer entries, first nonzero entry positive

  bool operator==(const Hyperplane& o) const { return normal == o.normal; }
  bool operator<(const Hyperplane& o) const { return normal < o.normal; }
};

struct Pattern {
  int rank = 0;
  int ambient_dim = 0;
  std::vector<Hyperplane> hyperplanes;  // sorted, pairwise distinct
  std::vector<Vec> intrinsic_normals;   // rank-dim primitive normals, same order
  Mat basis;                            // ambient_dim x rank, from the system
  Mat gram;                             // basis^t basis
  std::optional<Family> origin_family;

  int index_of(const Vec& ambient_normal) const {
    Hyperplane h{primitive_normal(ambient_normal)};
    auto it = std::lower_bound(hyperplanes.begin(), hyperplanes.end(), h);
    if (it == hyperplanes.end() || !(*it == h)) return -1;
    return static_cast<int>(it - hyperplanes.begin());
  }

  std::size_t size() const { return hyperplanes.size(); }
};

// Hyperplanes are the kernels of the roots, deduplicated projectively
// (x_i and 2x_i give a single hyperplane, so B_n, C_n, BC_n all yield the
// same pattern).
inline Pattern pattern_of(const RootSystem& rs) {
  Pattern p;
  p.rank = rs.rank;
  p.ambient_dim = rs.ambient_dim;
  p.basis = rs.basis;
  p.gram = rs.gram;
  p.origin_family = rs.family;
  std::vector<Hyperplane> hs;
  for (const auto& r : rs.positive_roots) hs.push_back({primitive_normal(r)});
  std::sort(hs.begin(), hs.end());
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
  p.hyperplanes = std::move(hs);
  for (const auto& h : p.hyperplanes) {
    // intrinsic normal of {x : <n, x> = 0} restricted to span(basis) is B^t n
    p.intrinsic_normals.push_back(
        primitive_normal(p.basis.transpose() * h.normal));
  }
  return p;
}

inline bool dependent_triple(const Vec& u, const Vec& v, const Vec& w) {
  return span_rank({u, v, w}) <= 2;
}

// Relatedness of the i-th and j-th hyperplanes.
inline bool related(const Pattern& p, int i, int j) {
  if (i == j) throw std::invalid_argument("related: hyperplanes must differ");
  const auto& u = p.intrinsic_normals.at(i);
  const auto& v = p.intrinsic_normals.at(j);
  for (int k = 0; k < static_cast<int>(p.size()); ++k) {
    if (k == i || k == j) continue;
    if (dependent_triple(u, v, p.intrinsic_normals[k])) return true;
  }
  return false;
}

inline bool related(const Pattern& p, const Hyperplane& u, const Hyperplane& v) {
  int i = p.index_of(u.normal), j = p.index_of(v.normal);
  if (i < 0 || j < 0)
    throw std::invalid_argument("related: hyperplane not in pattern");
  return related(p, i, j);
}

// All unordered triples whose normals span a 2-dimensional space.
inline std::vector<std::array<int, 3>> triads(const Pattern& p) {
  std::vector<std::array<int, 3>> out;
  int n = static_cast<int>(p.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (dependent_triple(p.intrinsic_normals[i], p.intrinsic_normals[j],
                             p.intrinsic_normals[k]))
          out.push_back({i, j, k});
  return out;
}

struct FamilySet {
  std::vector<int> members;  // sorted hyperplane indices
  bool large = false;        // four or more members
};

inline std::vector<std::vector<bool>> relatedness_graph(const Pattern& p) {
  int n = static_cast<int>(p.size());
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      adj[i][j] = adj[j][i] = related(p, i, j);
  return adj;
}

namespace detail {

inline void bron_kerbosch(const std::vector<std::vector<bool>>& adj,
                          std::vector<int>& r, std::vector<int> p,
                          std::vector<int> x,
                          std::vector<std::vector<int>>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  // pivot: vertex of p+x with most neighbours in p
  int pivot = -1;
  std::size_t best = 0;
  for (const auto* set : {&p, &x})
    for (int v : *set) {
      std::size_t cnt = 0;
      for (int u : p)
        if (adj[v][u]) ++cnt;
      if (pivot < 0 || cnt > best) { pivot = v; best = cnt; }
    }
  std::vector<int> cand;
  for (int v : p)
    if (pivot < 0 || !adj[pivot][v]) cand.push_back(v);
  for (int v : cand) {
    std::vector<int> np, nx;
    for (int u : p)
      if (adj[v][u]) np.push_back(u);
    for (int u : x)
      if (adj[v][u]) nx.push_back(u);
    r.push_back(v);
    bron_kerbosch(adj, r, std::move(np), std::move(nx), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace detail

// All inclusion-maximal families (maximal cliques of the relatedness graph),
// sorted deterministically and tagged large (>= 4 members) or small.
inline std::vector<FamilySet> maximal_families(const Pattern& p) {
  auto adj = relatedness_graph(p);
  int n = static_cast<int>(p.size());
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  std::vector<std::vector<int>> cliques;
  std::vector<int> r;
  detail::bron_kerbosch(adj, r, all, {}, cliques);
  for (auto& c : cliques) std::sort(c.begin(), c.end());
  std::sort(cliques.begin(), cliques.end());
  std::vector<FamilySet> out;
  for (auto& c : cliques) {
    bool large = c.size() >= 4;
    out.push_back({std::move(c), large});
  }
  return out;
}

}  // namespace weylpat
