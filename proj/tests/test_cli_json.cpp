#include "weylpat/json_io.hpp"
#include "weylpat/util.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

using namespace weylpat;

TEST_CASE("vector and matrix JSON round-trips") {
  Vec v = {Rat(1, 2), Rat(-3), Rat(0), Rat(7, 5)};
  CHECK(vec_from_json(json::parse(vec_to_json(v).dump())) == v);

  Mat m(2, 3, {Rat(1), Rat(1, 3), Rat(0), Rat(-2), Rat(5), Rat(9, 4)});
  CHECK(mat_from_json(json::parse(mat_to_json(m).dump())) == m);
}

TEST_CASE("rationals serialize as num/den strings") {
  json j = vec_to_json(Vec{Rat(1, 2), Rat(-3)});
  CHECK(j[0] == "1/2");
  CHECK(j[1] == "-3");
}

TEST_CASE("distortion bound round-trip, with and without conformal scalar") {
  DistortionBound d{Rat(1), Rat(1), Rat(4, 9)};
  auto d2 = distortion_from_json(json::parse(distortion_to_json(d).dump()));
  CHECK(d2.lower == d.lower);
  CHECK(d2.upper == d.upper);
  REQUIRE(d2.conformal);
  CHECK(*d2.conformal == Rat(4, 9));

  DistortionBound n{Rat(173, 100), Rat(174, 100), std::nullopt};
  auto n2 = distortion_from_json(json::parse(distortion_to_json(n).dump()));
  CHECK(n2.lower == n.lower);
  CHECK(n2.upper == n.upper);
  CHECK_FALSE(n2.conformal);
}

TEST_CASE("root system JSON carries family, rank and roots") {
  RootSystem rs = build_root_system(Family::BC, 2);
  json j = rootsystem_to_json(rs);
  CHECK(j["family"] == "BC");
  CHECK(j["rank"] == 2);
  CHECK(j["positive_roots"].size() == rs.positive_roots.size());
  RootSystem back = rootsystem_from_json(j);
  CHECK(back.positive_roots == rs.positive_roots);
}

TEST_CASE("subdivision report serialization") {
  SubdivisionReport r;
  r.counts = {2, 2, 1, 1, 1, 1};
  r.total = 8;
  r.average = Rat(4, 3);
  json j = subdivision_to_json(r);
  CHECK(j["total"] == 8);
  CHECK(j["average"] == "4/3");
  CHECK(j["counts"].size() == 6);
}

TEST_CASE("config parsing") {
  std::string path = "test_cli_json_config.tmp";
  {
    std::ofstream out(path);
    out << "# comment line\n"
        << "rank_cap = 4\n"
        << "threads=8   # trailing comment\n"
        << "chamber_rank_cap = 3\n"
        << "\n";
  }
  Config cfg = load_config(path);
  CHECK(cfg.rank_cap == 4);
  CHECK(cfg.threads == 8);
  CHECK(cfg.chamber_rank_cap == 3);
  CHECK(cfg.weyl_cap == 1000000);  // untouched default
  std::remove(path.c_str());
}

TEST_CASE("config errors") {
  std::string path = "test_cli_json_bad.tmp";
  {
    std::ofstream out(path);
    out << "rank_cap = not_a_number\n";
  }
  CHECK_THROWS_AS(load_config(path), std::runtime_error);
  std::remove(path.c_str());
  {
    std::ofstream out(path);
    out << "no equals sign here\n";
  }
  CHECK_THROWS_AS(load_config(path), std::runtime_error);
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_config("does_not_exist.cfg"), std::runtime_error);
}

TEST_CASE("parallel_map is order-preserving and thread-independent") {
  auto sq = [](std::size_t i) { return static_cast<long>(i * i); };
  auto a = parallel_map<long>(37, 1, sq);
  auto b = parallel_map<long>(37, 8, sq);
  CHECK(a == b);
  for (std::size_t i = 0; i < a.size(); ++i)
    CHECK(a[i] == static_cast<long>(i * i));
}
