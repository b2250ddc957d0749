#pragma once

// Univariate polynomials over Q with Sturm-sequence root counting.
// Used to bracket the extreme generalized eigenvalues of the pencil
// (T^t G T, G) without ever leaving exact arithmetic.

#include "weylpat/matrix.hpp"
#include "weylpat/rational.hpp"

#include <utility>
#include <vector>

namespace weylpat {

// Coefficients low degree first; normalized so the leading coefficient is
// nonzero (the zero polynomial is the empty vector).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> c) : c_(std::move(c)) { trim(); }
  static Poly constant(const Rat& r) { return Poly({r}); }

  bool zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat lead() const { return c_.back(); }

  Rat eval(const Rat& x) const {
    Rat v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat(i);
    return Poly(std::move(d));
  }

  Poly operator*(const Poly& o) const {
    if (zero() || o.zero()) return Poly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(r));
  }

  Poly operator-() const {
    std::vector<Rat> r = c_;
    for (auto& x : r) x = -x;
    return Poly(std::move(r));
  }

  Poly operator-(const Poly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return Poly(std::move(r));
  }

  // Remainder of *this divided by d.
  Poly rem(const Poly& d) const {
    if (d.zero()) throw std::invalid_argument("Poly::rem: division by zero");
    std::vector<Rat> r = c_;
    while (static_cast<int>(r.size()) - 1 >= d.degree()) {
      if (r.back() == 0) { r.pop_back(); continue; }
      Rat f = r.back() / d.lead();
      std::size_t shift = r.size() - d.c_.size();
      for (std::size_t i = 0; i < d.c_.size(); ++i) r[shift + i] -= f * d.c_[i];
      while (!r.empty() && r.back() == 0) r.pop_back();
    }
    return Poly(std::move(r));
  }

  static Poly gcd(Poly a, Poly b) {
    while (!b.zero()) {
      Poly r = a.rem(b);
      a = std::move(b);
      b = std::move(r);
    }
    if (!a.zero()) {
      Rat inv = Rat(1) / a.lead();
      for (auto& x : a.c_) x *= inv;
    }
    return a;
  }

  // Quotient by the gcd with the derivative: same roots, all simple.
  Poly squarefree() const {
    if (zero() || degree() == 0) return *this;
    Poly g = gcd(*this, derivative());
    if (g.degree() == 0) return *this;
    // exact division
    std::vector<Rat> r = c_;
    std::vector<Rat> q(c_.size() - g.c_.size() + 1, Rat(0));
    while (static_cast<int>(r.size()) - 1 >= g.degree() && !r.empty()) {
      if (r.back() == 0) { r.pop_back(); continue; }
      Rat f = r.back() / g.lead();
      std::size_t shift = r.size() - g.c_.size();
      q[shift] = f;
      for (std::size_t i = 0; i < g.c_.size(); ++i) r[shift + i] -= f * g.c_[i];
      while (!r.empty() && r.back() == 0) r.pop_back();
    }
    return Poly(std::move(q));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

class SturmChain {
 public:
  explicit SturmChain(const Poly& p) {
    chain_.push_back(p);
    Poly d = p.derivative();
    if (!d.zero()) chain_.push_back(d);
    while (chain_.size() >= 2 && !chain_.back().zero()) {
      Poly r = chain_[chain_.size() - 2].rem(chain_.back());
      if (r.zero()) break;
      chain_.push_back(-r);
    }
  }

  // Number of distinct real roots in (a, b]; requires p squarefree-ish
  // (Sturm handles multiplicities by counting distinct roots).
  int count_roots(const Rat& a, const Rat& b) const {
    return variations(a) - variations(b);
  }

 private:
  int variations(const Rat& x) const {
    int v = 0, prev = 0;
    for (const auto& p : chain_) {
      Rat val = p.eval(x);
      int s = val == 0 ? 0 : (val > 0 ? 1 : -1);
      if (s != 0) {
        if (prev != 0 && s != prev) ++v;
        prev = s;
      }
    }
    return v;
  }

  std::vector<Poly> chain_;
};

// Characteristic polynomial of a square rational matrix, via expansion of
// det(A - x I) with the Faddeev-LeVerrier recurrence.
inline Poly charpoly(const Mat& a) {
  std::size_t n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("charpoly: not square");
  // c(x) = x^n - tr(A) x^{n-1} + ...  via M_{k+1} = A(M_k + c_{n-k} I)
  std::vector<Rat> c(n + 1, Rat(0));
  c[n] = 1;
  Mat m = Mat::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    Mat am = a * m;
    Rat tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    Rat ck = -tr / Rat(k);
    c[n - k] = ck;
    m = am;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += ck;
  }
  return Poly(std::move(c));
}

}  // namespace weylpat
