#include "weylpat/pattern.hpp"
#include "weylpat/rootsystem.hpp"
#include "weylpat/weylgroup.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace weylpat;

namespace {

Pattern pat(Family f, int n) { return pattern_of(build_root_system(f, n)); }

std::size_t factorial(int n) {
  std::size_t r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

TEST_CASE("reflections are involutive isometries") {
  Vec n = {Rat(1), Rat(-2), Rat(3)};
  Mat r = reflection(n);
  CHECK(r * r == Mat::identity(3));
  CHECK(r * n == scale(Rat(-1), n));
  CHECK(r.transpose() * r == Mat::identity(3));
}

TEST_CASE("Weyl group orders at ranks 2 through 5") {
  for (int n = 2; n <= 5; ++n) {
    CHECK(generate(pat(Family::A, n)).order() == factorial(n + 1));
    CHECK(generate(pat(Family::BC, n)).order() ==
          (std::size_t(1) << n) * factorial(n));
  }
  for (int n = 4; n <= 5; ++n)
    CHECK(generate(pat(Family::D, n)).order() ==
          (std::size_t(1) << (n - 1)) * factorial(n));
  CHECK(generate(pat(Family::G2, 2)).order() == 12);
}

TEST_CASE("every element induces a permutation of the hyperplanes") {
  WeylGroup w = generate(pat(Family::BC, 3));
  std::size_t n = w.pattern.size();
  for (std::size_t e = 0; e < w.order(); ++e) {
    const auto& perm = w.hyperplane_perms[e];
    std::set<int> image(perm.begin(), perm.end());
    CHECK(image.size() == n);
    // the permutation really is the hyperplane action of the matrix
    for (std::size_t i = 0; i < n; ++i)
      CHECK(w.pattern.index_of(w.elements[e] * w.pattern.hyperplanes[i].normal) ==
            perm[i]);
  }
}

TEST_CASE("identity is first and generators are recorded reflections") {
  WeylGroup w = generate(pat(Family::A, 3));
  CHECK(w.elements[0] == Mat::identity(4));
  CHECK(w.generator_indices.size() == w.pattern.size());
  for (std::size_t i = 0; i < w.generator_indices.size(); ++i)
    CHECK(w.elements[w.generator_indices[i]] ==
          reflection(w.pattern.hyperplanes[i].normal));
}

TEST_CASE("generation cap is enforced") {
  CHECK_THROWS_AS(generate(pat(Family::BC, 4), 100), std::runtime_error);
}

TEST_CASE("orbit_canonical is idempotent and constant on orbits") {
  WeylGroup ws = generate(pat(Family::A, 2));
  WeylGroup wd = generate(pat(Family::BC, 2));
  Assignment a = {0, 2, 3};
  Assignment ca = orbit_canonical(a, ws, wd);
  CHECK(orbit_canonical(ca, ws, wd) == ca);
  // acting by any pair of generators stays in the orbit
  std::vector<int> id_dst(wd.pattern.size());
  for (std::size_t i = 0; i < id_dst.size(); ++i) id_dst[i] = static_cast<int>(i);
  std::vector<int> id_src(ws.pattern.size());
  for (std::size_t i = 0; i < id_src.size(); ++i) id_src[i] = static_cast<int>(i);
  for (int g : ws.generator_indices) {
    Assignment moved = detail::act(a, ws.hyperplane_perms[g], id_dst);
    CHECK(orbit_canonical(moved, ws, wd) == ca);
  }
  for (int g : wd.generator_indices) {
    Assignment moved = detail::act(a, id_src, wd.hyperplane_perms[g]);
    CHECK(orbit_canonical(moved, ws, wd) == ca);
  }
  // the canonical form is minimal in its own orbit closure
  CHECK(ca <= a);
}

TEST_CASE("two-sided action composes correctly") {
  // act(a, pi_src, pi_dst)(j) = pi_dst(a(pi_src(j)))
  Assignment a = {2, 0, 1};
  std::vector<int> ps = {1, 2, 0}, pd = {0, 2, 1};
  Assignment r = detail::act(a, ps, pd);
  CHECK(r == Assignment{pd[a[ps[0]]], pd[a[ps[1]]], pd[a[ps[2]]]});
}
