#pragma once

// Conformality and quasiconformal distortion of exact linear maps.
//
// Distortion K is the ratio of extreme singular values. We never compute
// singular values numerically: K^2 is the ratio of the extreme roots of
// det(M - x G) where M = T^t G_dst T and G = G_src are the Gram matrices of
// the domain/range inner products (G = I for maps between full coordinate
// spaces). Roots are bracketed by Sturm counts and exact bisection.

#include "weylpat/matrix.hpp"
#include "weylpat/poly.hpp"
#include "weylpat/rational.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

namespace weylpat {

struct DistortionBound {
  Rat lower, upper;                // bracket K in [lower, upper]
  std::optional<Rat> conformal;    // scalar c with M = c G, when it exists
};

// c with M = c * G, if any. Both matrices must be same-size square; G is
// expected positive definite (a Gram matrix), so G(0,0) > 0.
inline std::optional<Rat> conformal_scalar_pencil(const Mat& m, const Mat& g) {
  if (m.rows() != g.rows() || m.cols() != g.cols() || m.rows() != m.cols())
    throw std::invalid_argument("conformal_scalar_pencil: shape mismatch");
  if (g(0, 0) == 0)
    throw std::invalid_argument("conformal_scalar_pencil: degenerate Gram");
  Rat c = m(0, 0) / g(0, 0);
  if (m == g * c && c > 0) return c;
  return std::nullopt;
}

// c with T^t T = c I, if any. Singular T is rejected.
inline std::optional<Rat> is_conformal(const Mat& t) {
  if (t.rows() != t.cols()) throw std::invalid_argument("is_conformal: not square");
  if (!t.invertible()) throw std::invalid_argument("is_conformal: singular matrix");
  return conformal_scalar_pencil(t.transpose() * t, Mat::identity(t.rows()));
}

// lo^2 <= x <= hi^2 with hi - lo <= eps.
inline std::pair<Rat, Rat> sqrt_bracket(const Rat& x, const Rat& eps) {
  if (x < 0) throw std::invalid_argument("sqrt_bracket: negative");
  Rat lo = 0, hi = x < 1 ? Rat(1) : x;
  while (hi - lo > eps) {
    Rat mid = (lo + hi) / 2;
    if (mid * mid > x) hi = mid; else lo = mid;
  }
  return {lo, hi};
}

namespace detail {

// Bracket the smallest (or largest) root of q in (lo, hi] down to width
// <= delta. q must have at least one root in the interval.
inline std::pair<Rat, Rat> bracket_extreme_root(const SturmChain& sturm, Rat lo,
                                                Rat hi, bool smallest,
                                                const Rat& delta) {
  while (hi - lo > delta) {
    Rat mid = (lo + hi) / 2;
    if (smallest) {
      if (sturm.count_roots(lo, mid) >= 1) hi = mid; else lo = mid;
    } else {
      if (sturm.count_roots(mid, hi) >= 1) lo = mid; else hi = mid;
    }
  }
  return {lo, hi};
}

}  // namespace detail

// Distortion of the pencil (M, G): K = sqrt(x_max / x_min) over the roots of
// det(M - x G), bracketed to width < eps. M must be positive definite (the
// caller's map must be invertible); a zero root is rejected as singular.
inline DistortionBound distortion_pencil(const Mat& m, const Mat& g,
                                         const Rat& eps) {
  if (eps <= 0) throw std::invalid_argument("distortion_pencil: eps <= 0");
  if (auto c = conformal_scalar_pencil(m, g))
    return DistortionBound{Rat(1), Rat(1), c};

  auto ginv = g.inverse();
  if (!ginv) throw std::invalid_argument("distortion_pencil: singular Gram");
  Poly p = charpoly(*ginv * m);
  if (p.eval(Rat(0)) == 0)
    throw std::invalid_argument("distortion_pencil: singular map");
  Poly q = p.squarefree();
  SturmChain sturm(q);

  // Cauchy bound: all roots lie in (0, B].
  Rat bound = 0;
  for (const auto& c : q.coeffs()) {
    Rat a = c / q.lead();
    if (a < 0) a = -a;
    if (a > bound) bound = a;
  }
  bound += 1;

  Rat delta = bound / 2;
  while (true) {
    auto [min_lo, min_hi] =
        detail::bracket_extreme_root(sturm, Rat(0), bound, true, delta);
    auto [max_lo, max_hi] =
        detail::bracket_extreme_root(sturm, Rat(0), bound, false, delta);
    if (min_lo > 0) {
      Rat ksq_lo = max_lo / min_hi;
      Rat ksq_hi = max_hi / min_lo;
      if (ksq_lo < 0) ksq_lo = 0;
      Rat lo = sqrt_bracket(ksq_lo, eps / 4).first;
      Rat hi = sqrt_bracket(ksq_hi, eps / 4).second;
      if (hi - lo < eps) return DistortionBound{lo, hi, std::nullopt};
    }
    delta /= 4;
  }
}

// Distortion of a square invertible matrix under the standard inner product.
inline DistortionBound distortion(const Mat& t, const Rat& eps) {
  if (t.rows() != t.cols()) throw std::invalid_argument("distortion: not square");
  if (!t.invertible()) throw std::invalid_argument("distortion: singular matrix");
  return distortion_pencil(t.transpose() * t, Mat::identity(t.rows()), eps);
}

}  // namespace weylpat
