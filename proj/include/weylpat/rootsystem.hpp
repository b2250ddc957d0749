#pragma once

// Classical root systems A_n, B_n, C_n, BC_n, D_n and G_2, with exact
// rational coordinates.
//
// Coordinate conventions follow the usual realizations:
//   A_n  lives in the sum-zero subspace of R^{n+1}, positive roots
//        e_i - e_j for i > j;
//   B_n  in R^n: e_i and e_i +- e_j (i > j);
//   C_n  in R^n: 2e_i and e_i +- e_j (i > j);
//   BC_n in R^n: e_i, 2e_i and e_i +- e_j (i > j)  (non-reduced);
//   D_n  in R^n: e_i +- e_j (i > j);
//   G_2  in the sum-zero subspace of R^3 (short roots e_i - e_j, long roots
//        +-(2e_i - e_j - e_k)), which keeps all coordinates rational.
//
// Systems spanning a proper subspace (A, G2) carry an explicit rational
// basis of that subspace together with its Gram matrix, so downstream
// modules can do inner-product computations intrinsically.

#include "weylpat/matrix.hpp"
#include "weylpat/rational.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylpat {

enum class Family { A, B, C, BC, D, G2 };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::BC: return "BC";
    case Family::D: return "D";
    case Family::G2: return "G2";
  }
  return "?";
}

struct RootSystem {
  Family family;
  int rank = 0;
  int ambient_dim = 0;
  std::vector<Vec> positive_roots;  // lexicographically sorted, ambient coords
  std::vector<Vec> simple_roots;    // in diagram order; each is a positive root
  Mat basis;                        // ambient_dim x rank basis of the span
  Mat gram;                         // basis^t * basis
  std::string remark;               // set for degenerate cases (D_2, D_3)

  bool contains(const Vec& v) const {
    return std::binary_search(positive_roots.begin(), positive_roots.end(), v);
  }

  int root_index(const Vec& v) const {
    auto it = std::lower_bound(positive_roots.begin(), positive_roots.end(), v);
    if (it == positive_roots.end() || *it != v) return -1;
    return static_cast<int>(it - positive_roots.begin());
  }

  // Coordinates of an ambient vector in the stored basis. Throws if the
  // vector is outside the span.
  Vec intrinsic(const Vec& ambient) const {
    auto x = basis.solve(ambient);
    if (!x) throw std::invalid_argument("intrinsic: vector outside root span");
    return *x;
  }
};

namespace detail {

inline Vec unit(int dim, int i, const Rat& v = Rat(1)) {
  Vec e(dim, Rat(0));
  e[i] = v;
  return e;
}

}  // namespace detail

inline RootSystem build_root_system(Family family, int rank) {
  RootSystem rs;
  rs.family = family;
  rs.rank = rank;

  auto reject = [&](const std::string& what) {
    throw std::invalid_argument("build_root_system(" + family_name(family) +
                                std::to_string(rank) + "): " + what);
  };

  switch (family) {
    case Family::A: {
      if (rank < 2) reject("A requires rank >= 2");
      int d = rank + 1;
      rs.ambient_dim = d;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < i; ++j) {
          Vec r(d, Rat(0));
          r[i] = 1;
          r[j] = -1;
          rs.positive_roots.push_back(std::move(r));
        }
      for (int i = 1; i <= rank; ++i) {
        Vec r(d, Rat(0));
        r[i] = 1;
        r[i - 1] = -1;
        rs.simple_roots.push_back(std::move(r));
      }
      // basis e_i - e_0, i = 1..rank
      std::vector<Vec> cols;
      for (int i = 1; i <= rank; ++i) {
        Vec b(d, Rat(0));
        b[i] = 1;
        b[0] = -1;
        cols.push_back(std::move(b));
      }
      rs.basis = Mat::from_cols(cols);
      break;
    }
    case Family::B:
    case Family::C:
    case Family::BC: {
      if (rank < 2) reject("B/C/BC require rank >= 2");
      int d = rank;
      rs.ambient_dim = d;
      bool shorts = family != Family::C;   // e_i
      bool longs = family != Family::B;    // 2 e_i
      for (int i = 0; i < d; ++i) {
        if (shorts) rs.positive_roots.push_back(detail::unit(d, i));
        if (longs) rs.positive_roots.push_back(detail::unit(d, i, Rat(2)));
        for (int j = 0; j < i; ++j) {
          Vec p(d, Rat(0)), m(d, Rat(0));
          p[i] = 1; p[j] = 1;
          m[i] = 1; m[j] = -1;
          rs.positive_roots.push_back(std::move(p));
          rs.positive_roots.push_back(std::move(m));
        }
      }
      // simple roots: e_1 (B, BC) or 2e_1 (C), then e_i - e_{i-1}
      rs.simple_roots.push_back(family == Family::C ? detail::unit(d, 0, Rat(2))
                                                    : detail::unit(d, 0));
      for (int i = 1; i < d; ++i) {
        Vec r(d, Rat(0));
        r[i] = 1;
        r[i - 1] = -1;
        rs.simple_roots.push_back(std::move(r));
      }
      rs.basis = Mat::identity(d);
      break;
    }
    case Family::D: {
      if (rank < 2) reject("D requires rank >= 2");
      if (rank == 2) rs.remark = "D_2 is reducible (A_1 x A_1)";
      if (rank == 3) rs.remark = "D_3 coincides with A_3";
      int d = rank;
      rs.ambient_dim = d;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < i; ++j) {
          Vec p(d, Rat(0)), m(d, Rat(0));
          p[i] = 1; p[j] = 1;
          m[i] = 1; m[j] = -1;
          rs.positive_roots.push_back(std::move(p));
          rs.positive_roots.push_back(std::move(m));
        }
      // simple roots: e_1 + e_0, e_1 - e_0, e_i - e_{i-1}
      {
        Vec p(d, Rat(0)), m(d, Rat(0));
        p[0] = 1; p[1] = 1;
        m[0] = -1; m[1] = 1;
        rs.simple_roots.push_back(std::move(p));
        rs.simple_roots.push_back(std::move(m));
      }
      for (int i = 2; i < d; ++i) {
        Vec r(d, Rat(0));
        r[i] = 1;
        r[i - 1] = -1;
        rs.simple_roots.push_back(std::move(r));
      }
      rs.basis = Mat::identity(d);
      break;
    }
    case Family::G2: {
      if (rank != 2) reject("G2 exists only at rank 2");
      rs.ambient_dim = 3;
      Vec alpha = {Rat(1), Rat(-1), Rat(0)};   // short
      Vec beta = {Rat(-2), Rat(1), Rat(1)};    // long
      rs.simple_roots = {alpha, beta};
      auto comb = [&](int ca, int cb) {
        Vec r(3, Rat(0));
        for (int k = 0; k < 3; ++k) r[k] = Rat(ca) * alpha[k] + Rat(cb) * beta[k];
        return r;
      };
      rs.positive_roots = {comb(1, 0), comb(0, 1), comb(1, 1),
                           comb(2, 1), comb(3, 1), comb(3, 2)};
      std::vector<Vec> cols = {alpha, beta};
      rs.basis = Mat::from_cols(cols);
      break;
    }
  }

  std::sort(rs.positive_roots.begin(), rs.positive_roots.end());
  rs.gram = rs.basis.transpose() * rs.basis;
  return rs;
}

// True iff a + b is again a positive root. Both inputs must be positive
// roots of rs.
inline bool is_root_sum(const RootSystem& rs, const Vec& a, const Vec& b) {
  if (!rs.contains(a) || !rs.contains(b))
    throw std::invalid_argument("is_root_sum: argument is not a positive root");
  return rs.contains(add(a, b));
}

// Expansion of a positive root in the simple roots; the coefficients are
// nonnegative integers for every root of a validly built system.
inline Vec simple_root_expansion(const RootSystem& rs, const Vec& root) {
  Mat s = Mat::from_cols(rs.simple_roots);
  auto x = s.solve(root);
  if (!x) throw std::invalid_argument("simple_root_expansion: not in root span");
  return *x;
}

// Parses "A3", "bc4", "G2" (case-insensitive). Throws on anything else.
inline std::pair<Family, int> parse_system_spec(const std::string& spec) {
  std::string up;
  for (char c : spec) up += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  auto bad = [&]() {
    throw std::invalid_argument(
        "unknown root system '" + spec +
        "' (expected e.g. A3, B4, C2, BC3, D4, G2)");
  };
  if (up == "G2") return {Family::G2, 2};
  std::size_t i = 0;
  while (i < up.size() && std::isalpha(static_cast<unsigned char>(up[i]))) ++i;
  if (i == 0 || i == up.size()) bad();
  std::string fam = up.substr(0, i);
  int rank = 0;
  try {
    std::size_t pos = 0;
    rank = std::stoi(up.substr(i), &pos);
    if (pos != up.size() - i) bad();
  } catch (const std::exception&) {
    bad();
  }
  static const std::map<std::string, Family> names = {
      {"A", Family::A}, {"B", Family::B}, {"C", Family::C},
      {"BC", Family::BC}, {"D", Family::D}};
  auto it = names.find(fam);
  if (it == names.end()) bad();
  return {it->second, rank};
}

}  // namespace weylpat
