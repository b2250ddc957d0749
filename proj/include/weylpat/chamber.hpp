#pragma once

// Chamber enumeration for patterns and chamber-subdivision profiles of
// linear maps between flats.
//
// A chamber is a feasible sign vector over the pattern's hyperplanes; each
// carries an exact rational interior witness. For patterns of type A the
// chamber also records the ordering of the ambient coordinates, which is
// how the chambers are usually named.

#include "weylpat/feasible.hpp"
#include "weylpat/matrix.hpp"
#include "weylpat/pattern.hpp"
#include "weylpat/rational.hpp"
#include "weylpat/util.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace weylpat {

struct Chamber {
  std::vector<int> signs;                 // +1/-1 per hyperplane
  Vec witness;                            // intrinsic coordinates
  std::optional<std::vector<int>> ordering;  // type A: coordinate order, ascending
};

namespace detail {

// All feasible sign vectors of `normals` inside the cone cut out by `fixed`
// (strict constraints in intrinsic coordinates). Returns sign vectors with
// witnesses, in deterministic (lexicographic, + before -) order.
inline std::vector<std::pair<std::vector<int>, Vec>> enumerate_cells(
    const std::vector<Vec>& normals, const std::vector<Vec>& fixed, int dim) {
  struct Cell {
    std::vector<int> signs;
    std::vector<Vec> constraints;
    Vec witness;
  };
  std::vector<Cell> frontier;
  {
    auto w = strict_feasible(fixed, dim);
    if (!w) return {};
    frontier.push_back({{}, fixed, *w});
  }
  for (const auto& n : normals) {
    std::vector<Cell> next;
    for (auto& cell : frontier) {
      Rat side = dot(n, cell.witness);
      for (int s : {+1, -1}) {
        Vec c = s > 0 ? n : scale(Rat(-1), n);
        int sign_here = side > 0 ? +1 : (side < 0 ? -1 : 0);
        std::optional<Vec> w;
        if (sign_here == s) {
          w = cell.witness;  // witness already on this side
        } else {
          auto cons = cell.constraints;
          cons.push_back(c);
          w = strict_feasible(cons, dim);
        }
        if (w) {
          Cell nc;
          nc.signs = cell.signs;
          nc.signs.push_back(s);
          nc.constraints = cell.constraints;
          nc.constraints.push_back(std::move(c));
          nc.witness = std::move(*w);
          next.push_back(std::move(nc));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::pair<std::vector<int>, Vec>> out;
  for (auto& c : frontier) out.emplace_back(std::move(c.signs), std::move(c.witness));
  return out;
}

}  // namespace detail

inline std::vector<Chamber> chambers(const Pattern& p, int rank_cap = 5) {
  if (p.rank > rank_cap)
    throw std::invalid_argument("chambers: rank " + std::to_string(p.rank) +
                                " exceeds cap " + std::to_string(rank_cap));
  auto cells = detail::enumerate_cells(p.intrinsic_normals, {}, p.rank);
  std::vector<Chamber> out;
  for (auto& [signs, witness] : cells) {
    Chamber c{std::move(signs), std::move(witness), std::nullopt};
    if (p.origin_family == Family::A) {
      Vec ambient = p.basis * c.witness;
      std::vector<int> order(ambient.size());
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(),
                [&](int a, int b) { return ambient[a] < ambient[b]; });
      c.ordering = std::move(order);
    }
    out.push_back(std::move(c));
  }
  return out;
}

// Number of range chambers met by the image of chamber c under T
// (T in intrinsic coordinates, domain rank = range rank). Equivalently:
// feasible sign vectors of the pulled-back range hyperplanes inside c.
inline long subdivision_count(const Mat& t, const Chamber& c,
                              const Pattern& src, const Pattern& dst) {
  if (!t.invertible())
    throw std::invalid_argument("subdivision_count: singular map");
  std::vector<Vec> cone;
  for (std::size_t i = 0; i < src.size(); ++i)
    cone.push_back(scale(Rat(c.signs.at(i)), src.intrinsic_normals[i]));
  Mat tt = t.transpose();
  std::vector<Vec> pulled;
  for (const auto& v : dst.intrinsic_normals) pulled.push_back(tt * v);
  auto cells = detail::enumerate_cells(pulled, cone, src.rank);
  return static_cast<long>(cells.size());
}

struct SubdivisionReport {
  std::vector<long> counts;  // parallel to chambers(src)
  long total = 0;
  Rat average;               // total / number of domain chambers
};

inline SubdivisionReport subdivision_report(const Mat& t, const Pattern& src,
                                            const Pattern& dst,
                                            int rank_cap = 5,
                                            int threads = 1) {
  auto cs = chambers(src, rank_cap);
  SubdivisionReport rep;
  rep.counts = parallel_map<long>(cs.size(), threads, [&](std::size_t i) {
    return subdivision_count(t, cs[i], src, dst);
  });
  for (long n : rep.counts) rep.total += n;
  rep.average = Rat(rep.total) / Rat(static_cast<long>(cs.size()));
  return rep;
}

// The four flat types of the rank-2 analysis, by which chamber labels the
// six chambers of the flat carry relative to the distinguished chamber C_0.
enum class FlatType { through_C0, type2, type3, generic };

// Per-label subdivision counts: C_0 and its opposite map across two range
// chambers, chambers adjacent to either map across one.
inline int sl3_flat_profile(FlatType type) {
  constexpr int kC0 = 2, kOpposite = 2, kAdjacent = 1, kAdjacentOpposite = 1;
  switch (type) {
    case FlatType::through_C0:
      return kC0 + kOpposite + 2 * kAdjacent + 2 * kAdjacentOpposite;  // 8
    case FlatType::type2:
      return 2 * kOpposite + 2 * kAdjacentOpposite + 2 * kAdjacent;    // 8
    case FlatType::type3:
      return 2 * kAdjacent + 4 * kOpposite;                            // 10
    case FlatType::generic:
      return 6 * kOpposite;                                            // 12
  }
  throw std::invalid_argument("sl3_flat_profile: unknown flat type");
}

}  // namespace weylpat
