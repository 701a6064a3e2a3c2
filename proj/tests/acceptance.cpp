// Acceptance suite: runs every verification check at the default
// configuration and prints one line per criterion. The process exits
// nonzero when any criterion fails, and the per-assertion diagnostics
// name the exact quantity that differs.

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "plk/checks.hpp"

int main() {
  plk::CheckConfig config;  // defaults: max arity 6, quotient arity 5, order 8

  struct Criterion {
    int number;
    const char* check_id;
    const char* title;
  };
  const std::vector<Criterion> criteria = {
      {1, "quotient-dims", "quotient dimensions equal the rooted-tree counts"},
      {2, "orbit-rank", "relator orbit ranks (2, 1, 3)"},
      {3, "symmetrized-relation", "symmetrized relator combination identity"},
      {4, "filtration", "weight filtration facts"},
      {5, "y-vs-cl", "symmetrized-product spans match cyclic Lie elements"},
      {6, "suboperad-free", "suboperad closure matches the free-operad count"},
      {7, "module-closure", "Lie closure exhausts every component"},
      {8, "egf", "series identity recovers n^(n-1) up to order 8"},
      {9, "factorization", "factorization round trips"},
      {10, "coherence", "model coherence on random instances"},
  };

  std::vector<plk::CheckResult> results = plk::run_checks({"all"}, config, 3);

  std::map<std::string, std::pair<int, int>> tally;  // id -> (passed, total)
  for (const auto& r : results) {
    auto& t = tally[r.check_id];
    t.first += r.passed ? 1 : 0;
    t.second += 1;
  }

  int failed = 0;
  for (const auto& c : criteria) {
    auto t = tally[c.check_id];
    bool ok = t.second > 0 && t.first == t.second;
    if (!ok) ++failed;
    std::printf("criterion %2d [%s] %s: %s (%d/%d assertions)\n", c.number,
                ok ? "PASS" : "FAIL", c.check_id, c.title, t.first, t.second);
  }
  std::printf("\n");

  if (failed) {
    std::printf("failing assertions:\n");
    for (const auto& r : results) {
      if (r.passed) continue;
      std::string loc = r.arity ? " (n=" + std::to_string(*r.arity) + ")" : std::string();
      std::printf("  %s%s: expected %s; got %s\n", r.check_id.c_str(), loc.c_str(),
                  r.expected.c_str(), r.actual.c_str());
    }
    std::printf("\n%d of %zu criteria failed\n", failed, criteria.size());
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
