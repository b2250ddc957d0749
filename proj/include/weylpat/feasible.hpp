#pragma once

// Exact feasibility of homogeneous strict linear inequality systems
// { x : <a_i, x> > 0 for all i } by Fourier-Motzkin elimination, with a
// rational witness on success. The elimination is the authority; callers
// may pre-screen with a candidate point, but every verdict here is exact.

#include "weylpat/rational.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

namespace weylpat {

// Witness x with <a_i, x> > 0 for all i, or nullopt when the open cone is
// empty. Constraints with zero normal make the system infeasible.
inline std::optional<Vec> strict_feasible(const std::vector<Vec>& constraints,
                                          int dim) {
  // normalize + dedupe to keep the elimination small
  auto reduce = [](std::vector<Vec> cs) {
    std::set<Vec> seen;
    std::vector<Vec> out;
    for (auto& c : cs) {
      if (is_zero(c)) return std::optional<std::vector<Vec>>();  // 0 > 0
      Vec n = primitive_normal(c);
      // primitive_normal forces the first nonzero entry positive, which
      // would flip the inequality; rescale by sign instead
      Rat f = 0;
      for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) { f = c[i] / n[i]; break; }
      if (f < 0)
        for (auto& x : n) x = -x;
      if (seen.insert(n).second) out.push_back(std::move(n));
    }
    return std::optional<std::vector<Vec>>(std::move(out));
  };

  // stages[k] holds the system in the first (dim - k) variables
  std::vector<std::vector<Vec>> stages;
  auto first = reduce(constraints);
  if (!first) return std::nullopt;
  stages.push_back(std::move(*first));

  for (int var = dim - 1; var >= 1; --var) {
    const auto& cur = stages.back();
    std::vector<Vec> pos, neg, next;
    for (const auto& c : cur) {
      if (c[var] > 0) pos.push_back(c);
      else if (c[var] < 0) neg.push_back(c);
      else next.push_back(Vec(c.begin(), c.begin() + var));
    }
    for (const auto& p : pos)
      for (const auto& n : neg) {
        // p[var] * n - n[var] * p has zero coefficient at var and keeps > 0
        Vec c(var);
        for (int i = 0; i < var; ++i) c[i] = p[var] * n[i] - n[var] * p[i];
        next.push_back(std::move(c));
      }
    auto red = reduce(std::move(next));
    if (!red) return std::nullopt;
    stages.push_back(std::move(*red));
  }

  // one variable left: constraints c0 * x > 0
  {
    const auto& last = stages.back();
    bool want_pos = false, want_neg = false;
    for (const auto& c : last) {
      if (c[0] > 0) want_pos = true;
      else want_neg = true;
    }
    if (want_pos && want_neg) return std::nullopt;
  }

  // back-substitute a witness
  Vec x;
  {
    bool neg1 = !stages.back().empty() && stages.back()[0][0] < 0;
    x.push_back(neg1 ? Rat(-1) : Rat(1));
  }
  for (int var = 1; var < dim; ++var) {
    const auto& sys = stages[dim - 1 - var];  // system in var+1 variables
    std::optional<Rat> lower, upper;          // lower < x[var] < upper
    for (const auto& c : sys) {
      if (c[var] == 0) continue;
      Rat rest = 0;
      for (int i = 0; i < var; ++i) rest += c[i] * x[i];
      Rat bound = -rest / c[var];
      if (c[var] > 0) {
        if (!lower || bound > *lower) lower = bound;
      } else {
        if (!upper || bound < *upper) upper = bound;
      }
    }
    Rat v;
    if (lower && upper) v = (*lower + *upper) / 2;
    else if (lower) v = *lower + 1;
    else if (upper) v = *upper - 1;
    else v = 0;
    x.push_back(v);
  }
  return x;
}

}  // namespace weylpat
