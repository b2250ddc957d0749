#include "weylpat/embedsearch.hpp"
#include "weylpat/pattern.hpp"
#include "weylpat/rootsystem.hpp"
#include "weylpat/weylgroup.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace weylpat;

namespace {

Pattern pat(Family f, int n) { return pattern_of(build_root_system(f, n)); }

// Independent rank-2 completeness oracle: enumerate every injective
// assignment with no pruning, stack the single parallelism equation
//   u0 (S v)[1] - u1 (S v)[0] = 0
// per hyperplane, and scan the kernel for an invertible combination by
// brute force over a small integer grid (det is quadratic in each grid
// variable, so {-3..3} is more than exhaustive).
std::set<Assignment> rank2_assignments(const Pattern& src, const Pattern& dst) {
  REQUIRE(src.rank == 2);
  REQUIRE(dst.rank == 2);
  int ns = static_cast<int>(src.size());
  int nd = static_cast<int>(dst.size());
  std::set<Assignment> out;
  Assignment a(ns, -1);
  std::vector<bool> used(nd, false);

  auto realizable = [&]() {
    std::vector<Vec> rows;
    for (int i = 0; i < ns; ++i) {
      const Vec& u = src.intrinsic_normals[i];
      const Vec& v = dst.intrinsic_normals[a[i]];
      // row over (s00, s01, s10, s11)
      rows.push_back({-u[1] * v[0], -u[1] * v[1], u[0] * v[0], u[0] * v[1]});
    }
    auto ker = Mat::from_rows(rows).kernel();
    if (ker.empty()) return false;
    std::vector<int> t(ker.size(), -3);
    while (true) {
      Vec s(4, Rat(0));
      for (std::size_t k = 0; k < ker.size(); ++k)
        for (int m = 0; m < 4; ++m) s[m] += Rat(t[k]) * ker[k][m];
      if (s[0] * s[3] - s[1] * s[2] != 0) return true;
      std::size_t pos = 0;
      while (pos < ker.size() && t[pos] == 3) t[pos++] = -3;
      if (pos == ker.size()) return false;
      ++t[pos];
    }
  };

  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == ns) {
      if (realizable()) out.insert(a);
      return;
    }
    for (int j = 0; j < nd; ++j) {
      if (used[j]) continue;
      a[depth] = j;
      used[j] = true;
      self(self, depth + 1);
      used[j] = false;
      a[depth] = -1;
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

TEST_CASE("every found embedding verifies with its own assignment") {
  for (auto [fs, fd, n] : std::vector<std::tuple<Family, Family, int>>{
           {Family::A, Family::BC, 2}, {Family::A, Family::BC, 3},
           {Family::BC, Family::G2, 2}, {Family::A, Family::A, 3}}) {
    Pattern src = pat(fs, n), dst = pat(fd, n);
    auto embs = find_embeddings(src, dst);
    for (const auto& e : embs) {
      auto a = verify_embedding(e.T, src, dst);
      REQUIRE(a);
      CHECK(*a == e.assignment);
    }
    // assignments are distinct and sorted
    for (std::size_t i = 1; i < embs.size(); ++i)
      CHECK(embs[i - 1].assignment < embs[i].assignment);
  }
}

TEST_CASE("rank-2 searches match the unpruned oracle") {
  for (auto [fs, fd] : std::vector<std::pair<Family, Family>>{
           {Family::A, Family::BC}, {Family::BC, Family::G2},
           {Family::A, Family::G2}, {Family::A, Family::A}}) {
    Pattern src = pat(fs, 2), dst = pat(fd, 2);
    std::set<Assignment> expected = rank2_assignments(src, dst);
    std::set<Assignment> got;
    for (const auto& e : find_embeddings(src, dst)) got.insert(e.assignment);
    INFO(family_name(fs) << "2 -> " << family_name(fd) << "2");
    CHECK(got == expected);
  }
}

TEST_CASE("A_2 -> BC_2 realizes every 3-subset of the four hyperplanes") {
  Pattern src = pat(Family::A, 2), dst = pat(Family::BC, 2);
  std::set<std::set<int>> images;
  for (const auto& e : find_embeddings(src, dst))
    images.insert({e.assignment.begin(), e.assignment.end()});
  CHECK(images.size() == 4);  // all of C(4,3)
}

TEST_CASE("BC_2 -> G_2 embeds but misses some 4-subsets") {
  Pattern src = pat(Family::BC, 2), dst = pat(Family::G2, 2);
  auto embs = find_embeddings(src, dst);
  CHECK_FALSE(embs.empty());
  std::set<std::set<int>> images;
  for (const auto& e : embs)
    images.insert({e.assignment.begin(), e.assignment.end()});
  CHECK(images.size() < 15);  // C(6,4) = 15
}

TEST_CASE("rank mismatch and rank cap are rejected") {
  CHECK_THROWS_AS(find_embeddings(pat(Family::A, 2), pat(Family::A, 3)),
                  std::invalid_argument);
  SearchOptions tight;
  tight.rank_cap = 2;
  CHECK_THROWS_AS(find_embeddings(pat(Family::A, 3), pat(Family::BC, 3), tight),
                  std::invalid_argument);
}

TEST_CASE("explicit form maps at rank 2 hit the expected hyperplanes") {
  Pattern src = pat(Family::A, 2), dst = pat(Family::BC, 2);
  // x_0 = x_1 under the first form lands on y_1 = 0
  {
    PatternEmbedding e = first_form(2);
    int i = src.index_of(Vec{Rat(1), Rat(-1), Rat(0)});
    REQUIRE(i >= 0);
    CHECK(dst.hyperplanes[e.assignment[i]].normal == Vec{Rat(1), Rat(0)});
  }
  // x_0 = x_2 under the second form lands on y_2 = 0
  {
    PatternEmbedding e = second_form(2);
    int i = src.index_of(Vec{Rat(1), Rat(0), Rat(-1)});
    REQUIRE(i >= 0);
    CHECK(dst.hyperplanes[e.assignment[i]].normal == Vec{Rat(0), Rat(1)});
  }
}

TEST_CASE("second form at rank 4 sends the x_0 family into a single family") {
  Pattern src = pat(Family::A, 4), dst = pat(Family::BC, 4);
  PatternEmbedding e = second_form(4);
  std::vector<int> images;
  for (int j = 1; j <= 4; ++j) {
    Vec n(5, Rat(0));
    n[0] = 1;
    n[j] = -1;
    int i = src.index_of(n);
    REQUIRE(i >= 0);
    images.push_back(e.assignment[i]);
  }
  for (std::size_t a = 0; a < images.size(); ++a)
    for (std::size_t b = a + 1; b < images.size(); ++b)
      CHECK(related(dst, images[a], images[b]));
}

TEST_CASE("classification of A_3 -> BC_3") {
  Pattern src = pat(Family::A, 3), dst = pat(Family::BC, 3);
  auto embs = find_embeddings(src, dst);
  WeylGroup ws = generate(src), wd = generate(dst);
  auto classes = classify(embs, ws, wd, src, dst);
  REQUIRE(classes.size() == 3);
  int conformal = 0;
  std::size_t covered = 0;
  std::set<int> seen;
  for (const auto& c : classes) {
    if (c.conformal) ++conformal;
    covered += c.members.size();
    for (int m : c.members) CHECK(seen.insert(m).second);
    // class_id really is the canonical orbit form of the representative
    CHECK(c.rep.class_id == orbit_canonical(c.rep.assignment, ws, wd));
    // all members share it
    for (int m : c.members)
      CHECK(orbit_canonical(embs[m].assignment, ws, wd) == c.rep.class_id);
    // distortion bracket is coherent
    if (c.conformal) {
      CHECK(c.distortion.lower == 1);
      CHECK(c.distortion.upper == 1);
    } else {
      CHECK(c.distortion.lower > 1);
    }
  }
  CHECK(conformal == 1);
  CHECK(covered == embs.size());
}

TEST_CASE("classify rejects incomplete input") {
  Pattern src = pat(Family::A, 2), dst = pat(Family::BC, 2);
  auto embs = find_embeddings(src, dst);
  REQUIRE(embs.size() > 1);
  embs.pop_back();
  WeylGroup ws = generate(src), wd = generate(dst);
  CHECK_THROWS_AS(classify(embs, ws, wd, src, dst), std::logic_error);
}

TEST_CASE("D_4 -> BC_4 splits into three conformal classes") {
  Pattern src = pat(Family::D, 4), dst = pat(Family::BC, 4);
  auto embs = find_embeddings(src, dst);
  WeylGroup ws = generate(src), wd = generate(dst);
  auto classes = classify(embs, ws, wd, src, dst);
  CHECK(classes.size() == 3);
  for (const auto& c : classes) CHECK(c.conformal.has_value());
}
