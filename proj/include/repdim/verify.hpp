#ifndef REPDIM_VERIFY_HPP
#define REPDIM_VERIFY_HPP

#include <string>
#include <vector>

#include "repdim/character_table.hpp"
#include "repdim/faithful.hpp"
#include "repdim/formulas.hpp"
#include "repdim/group.hpp"
#include "repdim/group_spec.hpp"

namespace repdim {

/// Family descriptors that apply to `group`, built from its spec and from
/// structural facts. Empty when no closed form is known.
std::vector<FamilyDescriptor> describe(const Group& group, const GroupSpec& spec,
                                       const BuildOptions& options = {});

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::string spec;
  DeltaResult delta;
  std::optional<unsigned> delta_irr;
  std::vector<Prediction> predictions;
  std::vector<Check> checks;

  bool passed() const;
};

constexpr std::size_t kOracleClassLimit = 12;

/// Orthogonality, minimal-normal cross-check between the group and the
/// table, kernel normality, naive-versus-cover agreement (at most 12
/// classes), delta <= delta_irr, witness checks, and every applicable
/// closed-form prediction.
VerifyReport verify_group(const Group& group, const GroupSpec& spec, const CharacterTable& table,
                          const BuildOptions& options = {});
VerifyReport verify_group(const Group& group, const GroupSpec& spec, const BuildOptions& options = {});

std::string format_report(const VerifyReport& report);

}  // namespace repdim

#endif  // REPDIM_VERIFY_HPP
