#pragma once

// Finite Weyl group of a pattern, generated by the reflections in its
// hyperplanes, stored as explicit orthogonal rational matrices together with
// the permutation each element induces on the pattern's hyperplanes.
//
// The induced label permutations are what drive equivalence-class reduction
// of embeddings: an assignment (injection of hyperplane labels) is reduced
// modulo the two-sided action of the domain and range groups.

#include "weylpat/matrix.hpp"
#include "weylpat/pattern.hpp"
#include "weylpat/rational.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace weylpat {

using Assignment = std::vector<int>;  // domain hyperplane index -> range index

struct WeylGroup {
  Pattern pattern;
  std::vector<Mat> elements;                      // ambient matrices, [0] = id
  std::vector<std::vector<int>> hyperplane_perms; // same order as elements
  std::vector<int> generator_indices;             // indices of the reflections

  std::size_t order() const { return elements.size(); }
};

// Reflection through the hyperplane with the given (ambient) normal.
inline Mat reflection(const Vec& normal) {
  std::size_t d = normal.size();
  Rat nn = dot(normal, normal);
  Mat r = Mat::identity(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      r(i, j) -= 2 * normal[i] * normal[j] / nn;
  return r;
}

// Full element list by closure from the pattern's reflections. Throws if the
// closure exceeds cap.
inline WeylGroup generate(const Pattern& p, std::size_t cap = 1000000) {
  WeylGroup w;
  w.pattern = p;

  auto perm_of = [&](const Mat& m) {
    // reflections are orthogonal, so normals transform by m itself
    std::vector<int> perm(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      int j = p.index_of(m * p.hyperplanes[i].normal);
      if (j < 0)
        throw std::logic_error("generate: element does not preserve pattern");
      perm[i] = j;
    }
    return perm;
  };

  std::vector<Mat> gens;
  for (const auto& h : p.hyperplanes) gens.push_back(reflection(h.normal));

  std::map<Mat, int> seen;
  std::deque<int> queue;
  auto insert = [&](const Mat& m) {
    auto [it, fresh] = seen.emplace(m, static_cast<int>(w.elements.size()));
    if (fresh) {
      if (w.elements.size() >= cap)
        throw std::runtime_error("generate: closure exceeds cap");
      w.elements.push_back(m);
      w.hyperplane_perms.push_back(perm_of(m));
      queue.push_back(it->second);
    }
    return it->second;
  };

  insert(Mat::identity(p.ambient_dim));
  for (const auto& g : gens) w.generator_indices.push_back(insert(g));
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    Mat m = w.elements[i];
    for (const auto& g : gens) insert(g * m);
  }
  return w;
}

namespace detail {

// a'(j) = pi_dst(a(pi_src(j))): the assignment induced by composing the
// embedding with Weyl elements on both sides.
inline Assignment act(const Assignment& a, const std::vector<int>& pi_src,
                      const std::vector<int>& pi_dst) {
  Assignment out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = pi_dst[a[pi_src[j]]];
  return out;
}

}  // namespace detail

// Lexicographically least assignment in the orbit of a under the two-sided
// Weyl actions, computed by BFS closure over the generator moves.
inline Assignment orbit_canonical(const Assignment& a, const WeylGroup& w_src,
                                  const WeylGroup& w_dst,
                                  std::size_t cap = 5000000) {
  std::set<Assignment> orbit;
  std::deque<Assignment> queue;
  orbit.insert(a);
  queue.push_back(a);
  std::vector<int> id_src(w_src.pattern.size()), id_dst(w_dst.pattern.size());
  for (std::size_t i = 0; i < id_src.size(); ++i) id_src[i] = static_cast<int>(i);
  for (std::size_t i = 0; i < id_dst.size(); ++i) id_dst[i] = static_cast<int>(i);
  while (!queue.empty()) {
    Assignment cur = queue.front();
    queue.pop_front();
    auto push = [&](Assignment next) {
      if (orbit.insert(next).second) {
        if (orbit.size() > cap)
          throw std::runtime_error("orbit_canonical: orbit exceeds cap");
        queue.push_back(std::move(next));
      }
    };
    for (int g : w_src.generator_indices)
      push(detail::act(cur, w_src.hyperplane_perms[g], id_dst));
    for (int g : w_dst.generator_indices)
      push(detail::act(cur, id_src, w_dst.hyperplane_perms[g]));
  }
  return *orbit.begin();
}

}  // namespace weylpat
