#include "weylpat/rootsystem.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace weylpat;

namespace {

std::size_t expected_positive_roots(Family f, int n) {
  switch (f) {
    case Family::A: return static_cast<std::size_t>(n) * (n + 1) / 2;
    case Family::B:
    case Family::C: return static_cast<std::size_t>(n) * n;
    case Family::BC: return static_cast<std::size_t>(n) * (n + 1);
    case Family::D: return static_cast<std::size_t>(n) * (n - 1);
    case Family::G2: return 6;
  }
  return 0;
}

}  // namespace

TEST_CASE("positive root counts at ranks 2 through 8") {
  for (int n = 2; n <= 8; ++n)
    for (Family f : {Family::A, Family::B, Family::C, Family::BC, Family::D}) {
      RootSystem rs = build_root_system(f, n);
      INFO(family_name(f) << n);
      CHECK(rs.positive_roots.size() == expected_positive_roots(f, n));
      CHECK(rs.simple_roots.size() == static_cast<std::size_t>(n));
    }
  CHECK(build_root_system(Family::G2, 2).positive_roots.size() == 6);
}

TEST_CASE("root lists are sorted, unique, and self-consistent") {
  for (Family f : {Family::A, Family::B, Family::C, Family::BC, Family::D}) {
    RootSystem rs = build_root_system(f, 4);
    CHECK(std::is_sorted(rs.positive_roots.begin(), rs.positive_roots.end()));
    CHECK(std::adjacent_find(rs.positive_roots.begin(),
                             rs.positive_roots.end()) ==
          rs.positive_roots.end());
    for (const auto& s : rs.simple_roots) CHECK(rs.contains(s));
    for (std::size_t i = 0; i < rs.positive_roots.size(); ++i)
      CHECK(rs.root_index(rs.positive_roots[i]) == static_cast<int>(i));
  }
}

TEST_CASE("building the same system twice is deterministic") {
  RootSystem a = build_root_system(Family::BC, 5);
  RootSystem b = build_root_system(Family::BC, 5);
  CHECK(a.positive_roots == b.positive_roots);
  CHECK(a.simple_roots == b.simple_roots);
  CHECK(a.basis == b.basis);
}

TEST_CASE("every positive root is a nonnegative integer combination of simples") {
  for (Family f : {Family::A, Family::B, Family::C, Family::BC, Family::D}) {
    RootSystem rs = build_root_system(f, 4);
    for (const auto& r : rs.positive_roots) {
      Vec x = simple_root_expansion(rs, r);
      for (const auto& c : x) {
        CHECK(c >= 0);
        CHECK(denominator(c) == 1);
      }
    }
  }
  RootSystem g2 = build_root_system(Family::G2, 2);
  for (const auto& r : g2.positive_roots) {
    Vec x = simple_root_expansion(g2, r);
    for (const auto& c : x) {
      CHECK(c >= 0);
      CHECK(denominator(c) == 1);
    }
  }
}

TEST_CASE("G2 realization: rational coordinates with correct length ratio") {
  RootSystem g2 = build_root_system(Family::G2, 2);
  CHECK(g2.ambient_dim == 3);
  for (const auto& r : g2.positive_roots) {
    Rat s = r[0] + r[1] + r[2];
    CHECK(s == 0);
    Rat len = dot(r, r);
    CHECK((len == 2 || len == 6));  // short and long roots, ratio 3
  }
}

TEST_CASE("is_root_sum matches direct membership") {
  RootSystem bc2 = build_root_system(Family::BC, 2);
  Vec e1 = {Rat(1), Rat(0)};
  Vec e2 = {Rat(0), Rat(1)};
  Vec diff = {Rat(-1), Rat(1)};  // e_2 - e_1
  Vec two_e1 = {Rat(2), Rat(0)};
  CHECK(is_root_sum(bc2, e1, e1));           // e_1 + e_1 = 2e_1, non-reduced
  CHECK(is_root_sum(bc2, e1, diff));         // e_1 + (e_2 - e_1) = e_2
  CHECK(is_root_sum(bc2, e1, e2));
  CHECK_FALSE(is_root_sum(bc2, e1, two_e1));  // 3e_1
  RootSystem c2 = build_root_system(Family::C, 2);
  Vec two_e2 = {Rat(0), Rat(2)};
  CHECK_FALSE(is_root_sum(c2, two_e1, two_e2));  // 2e_1 + 2e_2
  CHECK_THROWS_AS(is_root_sum(c2, e1, e2), std::invalid_argument);
}

TEST_CASE("intrinsic coordinates invert the basis on the span") {
  RootSystem a3 = build_root_system(Family::A, 3);
  for (const auto& r : a3.positive_roots)
    CHECK(a3.basis * a3.intrinsic(r) == r);
  CHECK_THROWS_AS(a3.intrinsic(Vec{Rat(1), Rat(0), Rat(0), Rat(0)}),
                  std::invalid_argument);
}

TEST_CASE("degenerate D systems carry a remark") {
  CHECK_FALSE(build_root_system(Family::D, 2).remark.empty());
  CHECK_FALSE(build_root_system(Family::D, 3).remark.empty());
  CHECK(build_root_system(Family::D, 4).remark.empty());
}

TEST_CASE("invalid constructions are rejected") {
  CHECK_THROWS_AS(build_root_system(Family::A, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system(Family::B, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system(Family::G2, 3), std::invalid_argument);
}

TEST_CASE("system spec parsing") {
  CHECK(parse_system_spec("A3") == std::pair{Family::A, 3});
  CHECK(parse_system_spec("bc4") == std::pair{Family::BC, 4});
  CHECK(parse_system_spec("g2") == std::pair{Family::G2, 2});
  CHECK(parse_system_spec("D5") == std::pair{Family::D, 5});
  CHECK_THROWS_AS(parse_system_spec("E8"), std::invalid_argument);
  CHECK_THROWS_AS(parse_system_spec("A"), std::invalid_argument);
  CHECK_THROWS_AS(parse_system_spec("3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_system_spec("A3x"), std::invalid_argument);
}
