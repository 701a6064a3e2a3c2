#ifndef PLK_CHECKS_HPP
#define PLK_CHECKS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace plk {

struct CheckConfig {
  int max_arity = 6;           // closures, characters, module claims (7 opt-in)
  int quotient_max_arity = 5;  // ideal towers (6 opt-in, large components)
  int egf_order = 8;
  std::uint64_t seed = 0x1f2e3d4c5b6a798ULL;  // drives the randomized coherence checks
};

struct CheckResult {
  std::string check_id;
  std::optional<int> arity;    // empty for global facts
  std::string expected;
  std::string actual;
  bool passed = false;
  std::int64_t runtime_ms = 0;
};

struct CheckInfo {
  std::string id;
  std::string description;
};

// The registered verification checks, in report order.
const std::vector<CheckInfo>& all_checks();

bool known_check(const std::string& id);

// Runs the selected checks (all of them for ids == {"all"}); unknown ids
// throw std::invalid_argument. `parallel` > 1 distributes whole checks over
// worker threads; results keep the registry order regardless.
std::vector<CheckResult> run_checks(const std::vector<std::string>& ids,
                                    const CheckConfig& config, int parallel = 1);

std::string report_text(const CheckConfig& config, const std::vector<CheckResult>& results);
std::string report_json(const CheckConfig& config, const std::vector<CheckResult>& results);

}  // namespace plk

#endif
