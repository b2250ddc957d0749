#pragma once

// Exact rational scalars and small vector helpers.
//
// All arithmetic in this library is exact: scalars are rationals with
// arbitrary-precision integer numerator/denominator (boost cpp_rational,
// always kept in canonical reduced form with positive denominator).
// No floating point appears anywhere in the computational core.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace weylpat {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Vec = std::vector<Rat>;

inline std::string rat_str(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

// Parses "num", "num/den", or "-num/den". Throws on malformed input.
inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational: '" + s + "'");
  }
}

inline Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dot: dimension mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("add: dimension mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("sub: dimension mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec scale(const Rat& c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

// Scales v so that entries are coprime integers and the first nonzero entry
// is positive. The zero vector is rejected.
inline Vec primitive_normal(const Vec& v) {
  if (is_zero(v)) throw std::invalid_argument("primitive_normal: zero vector");
  Int l = 1;
  for (const auto& x : v) l = lcm(l, denominator(x));
  std::vector<Int> ints(v.size());
  Int g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    ints[i] = numerator(v[i]) * (l / denominator(v[i]));
    g = gcd(g, ints[i]);
  }
  int sign = 0;
  for (const auto& x : ints) {
    if (x != 0) { sign = x > 0 ? 1 : -1; break; }
  }
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(ints[i] * sign / g);
  return out;
}

inline bool proportional(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  // cross products must all vanish
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

}  // namespace weylpat
