#ifndef REPDIM_CORPUS_HPP
#define REPDIM_CORPUS_HPP

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace repdim {

struct CriterionOutcome {
  bool passed = true;
  std::vector<std::string> details;  // one line per sub-check, failures marked
};

struct Criterion {
  unsigned id;
  std::string title;
  std::vector<std::string> tags;
  std::function<CriterionOutcome()> run;
};

/// The acceptance corpus. `scratch` is a directory the property criterion
/// may use for cache experiments.
std::vector<Criterion> acceptance_criteria(const std::filesystem::path& scratch);

/// True when `filter` is empty or is a substring of the title, a tag, or
/// the decimal id.
bool matches_filter(const Criterion& c, const std::string& filter);

/// Every spec the corpus touches.
const std::vector<std::string>& corpus_specs();

}  // namespace repdim

#endif  // REPDIM_CORPUS_HPP
