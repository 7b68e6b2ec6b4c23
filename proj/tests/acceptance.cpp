// One line per acceptance criterion; exit status 0 iff all pass.

#include <filesystem>
#include <iostream>
#include <string>

#include <unistd.h>

#include "repdim/corpus.hpp"

int main(int argc, char** argv) {
  const std::string filter = argc > 1 ? argv[1] : "";
  const auto scratch =
      std::filesystem::temp_directory_path() / ("repdim-acceptance-" + std::to_string(::getpid()));
  int failed = 0;
  for (const auto& c : repdim::acceptance_criteria(scratch)) {
    if (!repdim::matches_filter(c, filter)) continue;
    const auto outcome = c.run();
    std::cout << (outcome.passed ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << '\n';
    for (const auto& d : outcome.details) std::cout << "    " << d << '\n';
    failed += !outcome.passed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
