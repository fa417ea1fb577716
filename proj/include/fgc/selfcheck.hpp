#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace fgc {

struct SelfcheckItem {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// Runs the library invariants on reduced ranges. Each item catches its own
/// exceptions and reports them as failures.
std::vector<SelfcheckItem> run_selfcheck();

nlohmann::json to_json(const std::vector<SelfcheckItem>& items);

}  // namespace fgc
