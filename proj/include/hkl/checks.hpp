// End-to-end consistency checks over every module, shared by the CLI
// (`hkl check --all`) and the acceptance runner.  Each check recomputes a
// published table or identity from scratch and compares exactly.
#pragma once

#include <string>
#include <vector>

namespace hkl {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// runs the full suite in a fixed order; never throws (a throwing check is
// reported as failed with the exception text in `detail`)
std::vector<CheckResult> run_all_checks();

}  // namespace hkl
