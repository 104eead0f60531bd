// Acceptance checklist: runs every criterion at its stated sample count
// and prints one pass/fail line per criterion.  Exits nonzero if any fails.

#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "lagcorr/verify.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 0;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::strcmp(argv[i], "--seed") == 0) seed = std::strtoull(argv[i + 1], nullptr, 10);

  std::vector<lag::CriterionResult> results = lag::run_acceptance(seed);
  bool all_pass = true;
  for (const lag::CriterionResult& c : results) {
    std::printf("%s  criterion-%02d  %s%s%s\n", c.pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                c.detail.empty() ? "" : "  -- ", c.detail.c_str());
    all_pass = all_pass && c.pass;
  }
  std::printf("%s  (%zu criteria)\n", all_pass ? "ALL PASS" : "FAILURES PRESENT", results.size());
  return all_pass ? 0 : 1;
}
