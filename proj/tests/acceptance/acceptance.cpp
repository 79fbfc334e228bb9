// Acceptance runner. With no arguments every criterion runs and prints one
// line; otherwise each argument names a criterion number or a check id.
// Exit status is 0 iff every requested check passed.

#include "checks.hpp"

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

using namespace multischur;

int main(int argc, char** argv) {
  std::vector<std::string> ids;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (!a.empty() && a.find_first_not_of("0123456789") == std::string::npos) a = "criterion-" + a;
    ids.push_back(a);
  }
  if (ids.empty())
    for (int k = 1; k <= checks::kCriterionCount; ++k) ids.push_back("criterion-" + std::to_string(k));

  bool all = true;
  for (const std::string& id : ids) {
    checks::CheckResult r;
    try {
      r = checks::run_check(id);
    } catch (const std::exception& e) {
      r.id = id;
      r.passed = false;
      r.summary = std::string("error: ") + e.what();
    }
    std::printf("%s %-24s %s (%.1fs)\n", r.passed ? "PASS" : "FAIL", r.id.c_str(), r.summary.c_str(),
                r.seconds);
    std::fflush(stdout);
    all = all && r.passed;
  }
  return all ? 0 : 1;
}
