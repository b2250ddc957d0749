#pragma once

// AN-maps: linear maps of the flat carrying positive roots to positive roots
// such that two roots sum to a root exactly when their images do.
//
// Roots are linear functionals on the flat, so a map T of the flat acts on
// them contravariantly: the image of lambda is lambda o T^{-1}. In the
// intrinsic coordinates used throughout, a root lambda is represented by its
// covector B^t lambda and the induced action is T^{-t} -- the same way
// pattern hyperplane normals transform, so an AN-map's underlying T is
// automatically a candidate pattern embedding.
//
// The search assigns an image to each simple root of the domain among all
// positive roots of the range (AN-maps need not send simple roots to simple
// roots), extends additively -- every root's image is forced by its
// simple-root expansion -- and checks the three conditions: every image is
// a positive root, the map is invertible, and the sum-is-root criterion
// holds for every pair.

#include "weylpat/matrix.hpp"
#include "weylpat/rational.hpp"
#include "weylpat/rootsystem.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace weylpat {

struct ANMap {
  Mat T;                                          // flat map, intrinsic r x r
  std::vector<std::pair<int, int>> correspondence;  // src root idx -> dst root idx
};

struct ANVerdict {
  bool roots_to_roots = false;
  bool invertible = false;
  bool sum_iff = false;
  // violating root pairs (src indices) with a short reason
  std::vector<std::tuple<int, int, std::string>> violations;

  bool ok() const { return roots_to_roots && invertible && sum_iff; }
};

// Covector of a root: the coordinate vector of <root, .> restricted to the
// span, in the stored basis.
inline Vec root_covector(const RootSystem& rs, const Vec& root) {
  return rs.basis.transpose() * root;
}

namespace detail {

inline std::vector<Vec> root_covectors(const RootSystem& rs) {
  std::vector<Vec> out;
  for (const auto& r : rs.positive_roots) out.push_back(root_covector(rs, r));
  return out;
}

inline int find_vec(const std::vector<Vec>& vs, const Vec& v) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (vs[i] == v) return static_cast<int>(i);
  return -1;
}

}  // namespace detail

// Full verdict for an arbitrary square T (a map of the flat) in intrinsic
// coordinates. A singular T fails everything except trivially.
inline ANVerdict verify_an_map(const Mat& t, const RootSystem& src,
                               const RootSystem& dst) {
  if (t.rows() != t.cols() || static_cast<int>(t.rows()) != src.rank)
    throw std::invalid_argument("verify_an_map: wrong shape");
  if (src.rank != dst.rank)
    throw std::invalid_argument("verify_an_map: rank mismatch");
  ANVerdict v;
  auto inv = t.inverse();
  v.invertible = inv.has_value();
  if (!inv) return v;
  Mat u = inv->transpose();  // action on root covectors
  auto sc = detail::root_covectors(src);
  auto dc = detail::root_covectors(dst);
  v.roots_to_roots = true;
  for (std::size_t i = 0; i < sc.size(); ++i) {
    if (detail::find_vec(dc, u * sc[i]) < 0) {
      v.roots_to_roots = false;
      v.violations.emplace_back(static_cast<int>(i), -1,
                                "image is not a positive root");
    }
  }
  v.sum_iff = true;
  for (std::size_t i = 0; i < sc.size(); ++i)
    for (std::size_t j = i; j < sc.size(); ++j) {
      bool dom = src.contains(add(src.positive_roots[i], src.positive_roots[j]));
      bool ran = detail::find_vec(dc, u * add(sc[i], sc[j])) >= 0;
      if (dom != ran) {
        v.sum_iff = false;
        v.violations.emplace_back(
            static_cast<int>(i), static_cast<int>(j),
            dom ? "sum is a root in the domain but not in the range"
                : "sum is a root in the range but not in the domain");
      }
    }
  return v;
}

// Complete raw list (no orbit reduction): one map per choice of simple-root
// images that extends to a valid AN-map, sorted by matrix entries.
inline std::vector<ANMap> find_an_maps(const RootSystem& src,
                                       const RootSystem& dst) {
  if (src.rank != dst.rank)
    throw std::invalid_argument("find_an_maps: rank mismatch");
  const int r = src.rank;
  std::vector<Vec> s_simple;
  for (const auto& a : src.simple_roots)
    s_simple.push_back(root_covector(src, a));
  auto sc = detail::root_covectors(src);
  auto dc = detail::root_covectors(dst);
  Mat simple_inv = *Mat::from_cols(s_simple).inverse();

  std::vector<ANMap> out;
  std::vector<int> choice(r, -1);

  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == r) {
      std::vector<Vec> img_cols;
      for (int k = 0; k < r; ++k) img_cols.push_back(dc[choice[k]]);
      Mat u = Mat::from_cols(img_cols) * simple_inv;  // covector action
      auto uinv = u.inverse();
      if (!uinv) return;
      Mat t = uinv->transpose();  // the flat map with dual action u
      ANVerdict v = verify_an_map(t, src, dst);
      if (!v.ok()) return;
      ANMap m;
      m.T = std::move(t);
      for (std::size_t i = 0; i < sc.size(); ++i)
        m.correspondence.emplace_back(static_cast<int>(i),
                                      detail::find_vec(dc, u * sc[i]));
      out.push_back(std::move(m));
      return;
    }
    for (int j = 0; j < static_cast<int>(dc.size()); ++j) {
      // partial prunes: independence and pairwise simple-sum consistency
      std::vector<Vec> chosen;
      for (int k = 0; k < depth; ++k) chosen.push_back(dc[choice[k]]);
      chosen.push_back(dc[j]);
      if (span_rank(chosen) != static_cast<std::size_t>(depth) + 1) continue;
      bool ok = true;
      for (int k = 0; k < depth && ok; ++k) {
        bool dom = src.contains(
            add(src.simple_roots[k], src.simple_roots[depth]));
        bool ran = detail::find_vec(dc, add(dc[choice[k]], dc[j])) >= 0;
        if (dom != ran) ok = false;
      }
      if (!ok) continue;
      choice[depth] = j;
      self(self, depth + 1);
      choice[depth] = -1;
    }
  };
  rec(rec, 0);

  std::sort(out.begin(), out.end(),
            [](const ANMap& a, const ANMap& b) { return a.T < b.T; });
  return out;
}

// The explicit A_n -> C_n map
//   T(x_0,...,x_n) = 1/2 (2x_1 - (x_0+x_n), ..., 2x_{n-1} - (x_0+x_n), x_n - x_0)
// from the sum-zero subspace, with its verified root correspondence
// (x_i - x_j -> y_i - y_j, x_i - x_0 -> y_i + y_n, x_n - x_0 -> 2 y_n).
inline ANMap explicit_an_map(int n) {
  if (n < 2) throw std::invalid_argument("explicit_an_map: n >= 2 required");
  RootSystem src = build_root_system(Family::A, n);
  RootSystem dst = build_root_system(Family::C, n);
  Mat ambient(n, n + 1);
  for (int i = 1; i < n; ++i) {
    ambient(i - 1, i) = 1;                 // 1/2 * 2x_i
    ambient(i - 1, 0) = Rat(-1, 2);
    ambient(i - 1, n) = Rat(-1, 2);
  }
  ambient(n - 1, 0) = Rat(-1, 2);
  ambient(n - 1, n) = Rat(1, 2);
  Mat t = ambient * src.basis;
  ANVerdict v = verify_an_map(t, src, dst);
  if (!v.ok()) throw std::logic_error("explicit_an_map: verification failed");
  Mat u = t.inverse()->transpose();
  auto sc = detail::root_covectors(src);
  auto dc = detail::root_covectors(dst);
  ANMap m;
  m.T = std::move(t);
  for (std::size_t i = 0; i < sc.size(); ++i)
    m.correspondence.emplace_back(static_cast<int>(i),
                                  detail::find_vec(dc, u * sc[i]));
  return m;
}

}  // namespace weylpat
