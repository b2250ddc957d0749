#include "weylpat/chamber.hpp"
#include "weylpat/embedsearch.hpp"
#include "weylpat/feasible.hpp"
#include "weylpat/rootsystem.hpp"
#include "weylpat/weylgroup.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace weylpat;

namespace {

Pattern pat(Family f, int n) { return pattern_of(build_root_system(f, n)); }

}  // namespace

TEST_CASE("strict feasibility with witnesses") {
  // x > 0, y > 0, x + y > 0 in the plane
  auto w = strict_feasible({{Rat(1), Rat(0)}, {Rat(0), Rat(1)},
                            {Rat(1), Rat(1)}}, 2);
  REQUIRE(w);
  CHECK((*w)[0] > 0);
  CHECK((*w)[1] > 0);
  // x > 0 and -x > 0 is infeasible
  CHECK_FALSE(strict_feasible({{Rat(1), Rat(0)}, {Rat(-1), Rat(0)}}, 2));
  // empty constraint set is feasible
  CHECK(strict_feasible({}, 3));
}

TEST_CASE("chamber counts equal the Weyl group order") {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{
           {Family::A, 2}, {Family::A, 3}, {Family::BC, 2},
           {Family::BC, 3}, {Family::G2, 2}}) {
    Pattern p = pat(f, n);
    auto cs = chambers(p);
    CHECK(cs.size() == generate(p).order());
  }
}

TEST_CASE("chambers form a partition with valid witnesses") {
  Pattern p = pat(Family::BC, 3);
  auto cs = chambers(p);
  std::set<std::vector<int>> seen;
  for (const auto& c : cs) {
    CHECK(seen.insert(c.signs).second);  // no duplicate sign vector
    REQUIRE(c.signs.size() == p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      Rat s = dot(p.intrinsic_normals[i], c.witness);
      CHECK(s != 0);
      CHECK((s > 0) == (c.signs[i] > 0));
    }
  }
}

TEST_CASE("type A chambers carry the coordinate ordering") {
  Pattern p = pat(Family::A, 2);
  auto cs = chambers(p);
  std::set<std::vector<int>> orders;
  for (const auto& c : cs) {
    REQUIRE(c.ordering);
    orders.insert(*c.ordering);
    // the ordering is consistent with the witness in ambient coordinates
    Vec amb = p.basis * c.witness;
    for (std::size_t k = 1; k < c.ordering->size(); ++k)
      CHECK(amb[(*c.ordering)[k - 1]] < amb[(*c.ordering)[k]]);
  }
  CHECK(orders.size() == 6);  // all of S_3
  CHECK_FALSE(chambers(pat(Family::BC, 2))[0].ordering);
}

TEST_CASE("rank cap on chamber enumeration") {
  CHECK_THROWS_AS(chambers(pat(Family::A, 4), 3), std::invalid_argument);
}

TEST_CASE("subdivision counts: identity map gives one chamber each") {
  Pattern p = pat(Family::BC, 2);
  auto cs = chambers(p);
  Mat id = Mat::identity(2);
  for (const auto& c : cs) CHECK(subdivision_count(id, c, p, p) == 1);
  auto rep = subdivision_report(id, p, p);
  CHECK(rep.total == 8);
  CHECK(rep.average == 1);
}

TEST_CASE("subdivision is invariant under positive scaling of the map") {
  Pattern pa = pat(Family::A, 2);
  Pattern pc = pat(Family::BC, 2);
  Mat t = second_form(2).T;
  auto r1 = subdivision_report(t, pa, pc);
  auto r2 = subdivision_report(t * Rat(7, 2), pa, pc);
  CHECK(r1.counts == r2.counts);
}

TEST_CASE("subdivision report is thread-count independent") {
  Pattern pa = pat(Family::A, 3);
  Pattern pc = pat(Family::BC, 3);
  Mat t = second_form(3).T;
  auto r1 = subdivision_report(t, pa, pc, 5, 1);
  auto r4 = subdivision_report(t, pa, pc, 5, 4);
  CHECK(r1.counts == r4.counts);
  CHECK(r1.total == r4.total);
}

TEST_CASE("singular maps are rejected") {
  Pattern p = pat(Family::A, 2);
  auto cs = chambers(p);
  CHECK_THROWS_AS(subdivision_count(Mat(2, 2), cs[0], p, p),
                  std::invalid_argument);
}

TEST_CASE("rank-2 flat profile totals") {
  CHECK(sl3_flat_profile(FlatType::through_C0) == 8);
  CHECK(sl3_flat_profile(FlatType::type2) == 8);
  CHECK(sl3_flat_profile(FlatType::type3) == 10);
  CHECK(sl3_flat_profile(FlatType::generic) == 12);
}
