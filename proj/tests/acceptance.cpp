// Acceptance suite: replays the full verification registry and prints one
// pass/fail line per criterion. Exit status is nonzero if anything fails.

#include "weylpat/verify.hpp"

#include <chrono>
#include <cstdio>

int main() {
  using clock = std::chrono::steady_clock;
  auto t0 = clock::now();
  auto outcomes = weylpat::run_verification(5);
  bool all_ok = true;
  for (const auto& o : outcomes) {
    std::printf("[%s] criterion %2d: %s%s%s\n",
                o.status == "pass" ? "PASS" : (o.status == "skipped" ? "SKIP" : "FAIL"),
                o.id, o.claim.c_str(), o.details.empty() ? "" : " -- ",
                o.details.c_str());
    if (o.status == "fail") all_ok = false;
  }
  auto secs =
      std::chrono::duration_cast<std::chrono::seconds>(clock::now() - t0).count();
  std::printf("%s (%lld s)\n", all_ok ? "all criteria passed" : "FAILURES present",
              static_cast<long long>(secs));
  return all_ok ? 0 : 1;
}
