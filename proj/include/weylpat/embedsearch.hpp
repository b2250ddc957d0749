#pragma once

// Exhaustive classification of linear pattern embeddings between equal-rank
// patterns.
//
// An embedding is an invertible T with: for every domain hyperplane normal u
// there is a range normal v with T^t v parallel to u. The search runs over
// the induced hyperplane assignment (domain index -> range index) with two
// prunes:
//   (a) dependent triples must map to dependent triples and vice versa
//       (T^t is linear and invertible, so rank-2 spans are preserved both
//       ways), and related pairs must map to related pairs;
//   (b) the linear system cutting out T^t from the partial assignment must
//       keep a nonzero solution space.
// Every embedding induces exactly one assignment, and every assignment
// surviving the prunes is solved for T, so the enumeration is complete.
//
// At a full assignment the solution space is searched for an invertible
// element via the determinant of a generic combination: det has degree at
// most r in each combination variable, so a nonzero det polynomial is
// nonzero somewhere on the integer grid {0..r}^dim, making the grid scan a
// decision procedure, not a heuristic.

#include "weylpat/distortion.hpp"
#include "weylpat/matrix.hpp"
#include "weylpat/pattern.hpp"
#include "weylpat/rational.hpp"
#include "weylpat/rootsystem.hpp"
#include "weylpat/weylgroup.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace weylpat {

struct PatternEmbedding {
  Mat T;                   // intrinsic coords, scale-normalized
  Assignment assignment;   // domain hyperplane index -> range index
  bool conformal = false;
  std::optional<Rat> conformal_scalar;
  int solution_dim = 1;    // dimension of the solution space at this assignment
  Assignment class_id;     // canonical orbit form; filled by classify
};

struct SearchOptions {
  int rank_cap = 6;
  bool override_rank_cap = false;
};

// First nonzero entry of the first row scaled to 1 (quotients out scaling).
inline Mat scale_normalize(const Mat& t) {
  for (std::size_t j = 0; j < t.cols(); ++j)
    if (t(0, j) != 0) return t * (Rat(1) / t(0, j));
  throw std::invalid_argument("scale_normalize: zero first row");
}

// Conformality of T as a map (span(src), restricted metric) ->
// (span(dst), restricted metric): T^t G_dst T = c G_src.
inline std::optional<Rat> embedding_conformal_scalar(const Mat& t,
                                                     const Pattern& src,
                                                     const Pattern& dst) {
  return conformal_scalar_pencil(t.transpose() * dst.gram * t, src.gram);
}

inline DistortionBound embedding_distortion(const Mat& t, const Pattern& src,
                                            const Pattern& dst,
                                            const Rat& eps = Rat(1, 1000000)) {
  return distortion_pencil(t.transpose() * dst.gram * t, src.gram, eps);
}

// The induced assignment, if T maps every domain hyperplane into a range
// hyperplane; nullopt otherwise (including singular T).
inline std::optional<Assignment> verify_embedding(const Mat& t,
                                                  const Pattern& src,
                                                  const Pattern& dst) {
  auto inv = t.inverse();
  if (!inv) return std::nullopt;
  Mat invt = inv->transpose();
  Assignment a(src.size());
  std::vector<bool> used(dst.size(), false);
  for (std::size_t i = 0; i < src.size(); ++i) {
    Vec w = invt * src.intrinsic_normals[i];
    Vec wn = primitive_normal(w);
    int j = -1;
    for (std::size_t k = 0; k < dst.size(); ++k)
      if (primitive_normal(dst.intrinsic_normals[k]) == wn) { j = static_cast<int>(k); break; }
    if (j < 0 || used[j]) return std::nullopt;
    used[j] = true;
    a[i] = j;
  }
  return a;
}

namespace detail {

struct PairSpans {
  // spans[i][j] = bitmask of hyperplane indices lying in span(u_i, u_j)
  std::vector<std::vector<std::uint64_t>> spans;
  std::vector<std::vector<bool>> related;

  explicit PairSpans(const Pattern& p) {
    int n = static_cast<int>(p.size());
    if (n > 64)
      throw std::invalid_argument("embed search: pattern too large (> 64)");
    spans.assign(n, std::vector<std::uint64_t>(n, 0));
    related.assign(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        std::uint64_t m = 0;
        for (int k = 0; k < n; ++k)
          if (k == i || k == j ||
              dependent_triple(p.intrinsic_normals[i], p.intrinsic_normals[j],
                               p.intrinsic_normals[k]))
            m |= std::uint64_t(1) << k;
        spans[i][j] = spans[j][i] = m;
        bool rel = (m & ~((std::uint64_t(1) << i) | (std::uint64_t(1) << j))) != 0;
        related[i][j] = related[j][i] = rel;
      }
  }

  bool in_span(int i, int j, int k) const {
    return (spans[i][j] >> k) & 1;
  }
};

// Linear functionals (as rows over vec(S), S row-major r x r) expressing
// "S v parallel to u": u[a] (S v)[b] - u[b] (S v)[a] = 0 for all a < b.
inline std::vector<Vec> parallel_constraints(const Vec& u, const Vec& v,
                                             int r) {
  std::vector<Vec> rows;
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b) {
      if (u[a] == 0 && u[b] == 0) continue;
      Vec row(static_cast<std::size_t>(r) * r, Rat(0));
      for (int c = 0; c < r; ++c) {
        if (v[c] == 0) continue;
        row[static_cast<std::size_t>(b) * r + c] += u[a] * v[c];
        row[static_cast<std::size_t>(a) * r + c] -= u[b] * v[c];
      }
      rows.push_back(std::move(row));
    }
  return rows;
}

// Restrict a solution-space basis by new constraint functionals.
inline std::vector<Vec> restrict_space(const std::vector<Vec>& basis,
                                       const std::vector<Vec>& constraints) {
  if (basis.empty() || constraints.empty()) return basis;
  Mat f(constraints.size(), basis.size());
  for (std::size_t i = 0; i < constraints.size(); ++i)
    for (std::size_t k = 0; k < basis.size(); ++k)
      f(i, k) = dot(constraints[i], basis[k]);
  auto combos = f.kernel();
  std::vector<Vec> out;
  for (const auto& c : combos) {
    Vec v(basis[0].size(), Rat(0));
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (c[k] == 0) continue;
      for (std::size_t m = 0; m < v.size(); ++m) v[m] += c[k] * basis[k][m];
    }
    out.push_back(std::move(v));
  }
  return out;
}

inline Mat unvec(const Vec& v, int r) {
  Mat m(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) m(i, j) = v[static_cast<std::size_t>(i) * r + j];
  return m;
}

// Invertible element of span(basis), or nullopt if none exists. The grid
// {0..r}^dim is exhaustive: det is a polynomial of degree <= r in each
// coordinate, and such a polynomial vanishing on the whole grid is zero.
inline std::optional<Mat> find_invertible(const std::vector<Vec>& basis, int r) {
  if (basis.empty()) return std::nullopt;
  for (const auto& b : basis) {
    Mat m = unvec(b, r);
    if (m.invertible()) return m;
  }
  std::size_t d = basis.size();
  if (d == 1) return std::nullopt;
  std::vector<int> t(d, 0);
  while (true) {
    // advance odometer
    std::size_t pos = 0;
    while (pos < d && t[pos] == r) t[pos++] = 0;
    if (pos == d) break;
    ++t[pos];
    Vec v(basis[0].size(), Rat(0));
    for (std::size_t k = 0; k < d; ++k) {
      if (t[k] == 0) continue;
      for (std::size_t m = 0; m < v.size(); ++m) v[m] += Rat(t[k]) * basis[k][m];
    }
    if (is_zero(v)) continue;
    Mat m = unvec(v, r);
    if (m.invertible()) return m;
  }
  return std::nullopt;
}

}  // namespace detail

// Complete list of embeddings up to positive scaling, one per surviving
// assignment, sorted by assignment.
inline std::vector<PatternEmbedding> find_embeddings(
    const Pattern& src, const Pattern& dst, const SearchOptions& opts = {}) {
  if (src.rank != dst.rank)
    throw std::invalid_argument("find_embeddings: rank mismatch");
  if (src.rank > opts.rank_cap && !opts.override_rank_cap)
    throw std::invalid_argument(
        "find_embeddings: rank " + std::to_string(src.rank) +
        " exceeds cap " + std::to_string(opts.rank_cap) +
        " (set override to search anyway)");
  std::vector<PatternEmbedding> out;
  if (src.size() > dst.size()) return out;  // counting obstruction

  const int r = src.rank;
  const int ns = static_cast<int>(src.size());
  const int nd = static_cast<int>(dst.size());
  detail::PairSpans sp_src(src), sp_dst(dst);

  // processing order: greedily maximize dependence constraints against the
  // already-ordered prefix (the most triad-heavy hyperplanes go first)
  std::vector<int> order;
  {
    std::vector<bool> placed(ns, false);
    std::vector<int> triad_count(ns, 0);
    for (int i = 0; i < ns; ++i)
      for (int j = 0; j < ns; ++j)
        if (j != i && sp_src.related[i][j]) ++triad_count[i];
    for (int step = 0; step < ns; ++step) {
      int best = -1;
      long best_score = -1;
      for (int i = 0; i < ns; ++i) {
        if (placed[i]) continue;
        long score = 0;
        for (int a = 0; a < ns; ++a)
          if (placed[a])
            for (int b = a + 1; b < ns; ++b)
              if (placed[b] && sp_src.in_span(a, b, i)) ++score;
        score = score * 1000 + triad_count[i];
        if (score > best_score) { best_score = score; best = i; }
      }
      placed[best] = true;
      order.push_back(best);
    }
  }

  Assignment assign(ns, -1);
  std::vector<bool> used(nd, false);
  std::vector<std::vector<Vec>> spaces;  // solution-space basis per depth
  {
    std::vector<Vec> full;
    for (int k = 0; k < r * r; ++k) {
      Vec e(static_cast<std::size_t>(r) * r, Rat(0));
      e[k] = 1;
      full.push_back(std::move(e));
    }
    spaces.push_back(std::move(full));
  }

  std::vector<int> assigned;  // domain indices already assigned, in order

  auto compatible = [&](int i, int j) {
    for (std::size_t a = 0; a < assigned.size(); ++a) {
      int p = assigned[a];
      if (sp_src.related[i][p] && !sp_dst.related[j][assign[p]]) return false;
      for (std::size_t b = a + 1; b < assigned.size(); ++b) {
        int q = assigned[b];
        bool dep_src = sp_src.in_span(p, q, i);
        bool dep_dst = sp_dst.in_span(assign[p], assign[q], j);
        if (dep_src != dep_dst) return false;
      }
    }
    return true;
  };

  auto emit = [&](const std::vector<Vec>& space) {
    auto s = detail::find_invertible(space, r);
    if (!s) return;
    PatternEmbedding e;
    e.T = scale_normalize(s->transpose());
    e.assignment = assign;
    e.solution_dim = static_cast<int>(space.size());
    if (auto c = embedding_conformal_scalar(e.T, src, dst)) {
      e.conformal = true;
      e.conformal_scalar = c;
    }
    out.push_back(std::move(e));
  };

  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == ns) {
      emit(spaces.back());
      return;
    }
    int i = order[depth];
    for (int j = 0; j < nd; ++j) {
      if (used[j] || !compatible(i, j)) continue;
      auto cons = detail::parallel_constraints(src.intrinsic_normals[i],
                                               dst.intrinsic_normals[j], r);
      auto next = detail::restrict_space(spaces.back(), cons);
      if (next.empty()) continue;
      assign[i] = j;
      used[j] = true;
      assigned.push_back(i);
      spaces.push_back(std::move(next));
      self(self, depth + 1);
      spaces.pop_back();
      assigned.pop_back();
      used[j] = false;
      assign[i] = -1;
    }
  };
  rec(rec, 0);

  std::sort(out.begin(), out.end(),
            [](const PatternEmbedding& a, const PatternEmbedding& b) {
              return a.assignment < b.assignment;
            });
  return out;
}

// The two explicit A_n -> BC_n maps, in domain coordinates
// (x_0,...,x_n) on the sum-zero subspace:
//   first form:   (x_1 - x_0, ..., x_n - x_0)
//   second form:  (2x_1 - (x_0+x_n), ..., 2x_{n-1} - (x_0+x_n), x_n - x_0)
// Intrinsic matrix of the form maps, without scale normalization (the raw
// coordinate formulas, also used for the AN-map cross checks).
inline Mat form_matrix(int n, bool second) {
  if (n < 2) throw std::invalid_argument("form maps need n >= 2");
  Mat ambient(n, n + 1);
  if (!second) {
    for (int i = 1; i <= n; ++i) {
      ambient(i - 1, 0) = -1;
      ambient(i - 1, i) = 1;
    }
  } else {
    for (int i = 1; i < n; ++i) {
      ambient(i - 1, i) = 2;
      ambient(i - 1, 0) = -1;
      ambient(i - 1, n) = -1;
    }
    ambient(n - 1, 0) = -1;
    ambient(n - 1, n) = 1;
  }
  RootSystem a = build_root_system(Family::A, n);
  return ambient * a.basis;
}

inline PatternEmbedding make_form(int n, bool second) {
  Pattern src = pattern_of(build_root_system(Family::A, n));
  Pattern dst = pattern_of(build_root_system(Family::BC, n));
  Mat t = form_matrix(n, second);
  auto a = verify_embedding(t, src, dst);
  if (!a) throw std::logic_error("form map is not an embedding");
  PatternEmbedding e;
  e.T = scale_normalize(t);
  e.assignment = *a;
  if (auto c = embedding_conformal_scalar(e.T, src, dst)) {
    e.conformal = true;
    e.conformal_scalar = c;
  }
  return e;
}

inline PatternEmbedding first_form(int n) { return make_form(n, false); }
inline PatternEmbedding second_form(int n) { return make_form(n, true); }

struct EmbeddingClass {
  PatternEmbedding rep;            // representative, class_id filled in
  std::vector<int> members;        // indices into the classified list
  std::optional<Rat> conformal;    // conformal scalar of the representative
  DistortionBound distortion;
};

// Partition a complete find_embeddings output into Weyl x scaling orbits.
// The input must be closed under the two-sided Weyl action (which the full
// search output is); a missing neighbour is reported as an error.
inline std::vector<EmbeddingClass> classify(
    const std::vector<PatternEmbedding>& embeddings, const WeylGroup& w_src,
    const WeylGroup& w_dst, const Pattern& src, const Pattern& dst,
    const Rat& eps = Rat(1, 1000000)) {
  std::map<Assignment, int> index;
  for (std::size_t i = 0; i < embeddings.size(); ++i)
    index[embeddings[i].assignment] = static_cast<int>(i);

  std::vector<int> parent(embeddings.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

  std::vector<int> id_src(w_src.pattern.size()), id_dst(w_dst.pattern.size());
  for (std::size_t i = 0; i < id_src.size(); ++i) id_src[i] = static_cast<int>(i);
  for (std::size_t i = 0; i < id_dst.size(); ++i) id_dst[i] = static_cast<int>(i);

  for (std::size_t i = 0; i < embeddings.size(); ++i) {
    const auto& a = embeddings[i].assignment;
    auto link = [&](const Assignment& moved) {
      auto it = index.find(moved);
      if (it == index.end())
        throw std::logic_error("classify: orbit leaves the embedding list "
                               "(input not a complete search output)");
      unite(static_cast<int>(i), it->second);
    };
    for (int g : w_src.generator_indices)
      link(detail::act(a, w_src.hyperplane_perms[g], id_dst));
    for (int g : w_dst.generator_indices)
      link(detail::act(a, id_src, w_dst.hyperplane_perms[g]));
  }

  std::map<int, std::vector<int>> groups;
  for (std::size_t i = 0; i < embeddings.size(); ++i)
    groups[find(static_cast<int>(i))].push_back(static_cast<int>(i));

  std::vector<EmbeddingClass> classes;
  for (auto& [root, members] : groups) {
    int best = members[0];
    for (int m : members)
      if (embeddings[m].assignment < embeddings[best].assignment) best = m;
    EmbeddingClass c;
    c.rep = embeddings[best];
    c.rep.class_id = c.rep.assignment;
    c.members = members;
    c.conformal = embedding_conformal_scalar(c.rep.T, src, dst);
    c.distortion = embedding_distortion(c.rep.T, src, dst, eps);
    classes.push_back(std::move(c));
  }
  std::sort(classes.begin(), classes.end(),
            [](const EmbeddingClass& a, const EmbeddingClass& b) {
              return a.rep.class_id < b.rep.class_id;
            });
  return classes;
}

}  // namespace weylpat
