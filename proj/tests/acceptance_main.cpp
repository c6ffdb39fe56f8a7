// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <cstdlib>
#include <cstring>
#include <iostream>

#include "frobcoh_cli/acceptance.hpp"

int main(int argc, char** argv) {
  frobcoh::cli::AcceptanceOptions options;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--deep") == 0) {
      options.deep = true;
    } else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      options.seed = std::strtoull(argv[++i], nullptr, 10);
    } else {
      std::cerr << "usage: frobcoh_acceptance [--deep] [--seed N]\n";
      return 2;
    }
  }
  bool all = true;
  frobcoh::cli::run_acceptance(options, [&](const frobcoh::cli::CriterionResult& r) {
    std::cout << frobcoh::cli::format_criterion(r) << std::flush;
    all = all && r.passed;
  });
  return all ? 0 : 1;
}
