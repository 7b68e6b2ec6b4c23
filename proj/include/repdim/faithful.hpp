#ifndef REPDIM_FAITHFUL_HPP
#define REPDIM_FAITHFUL_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "repdim/character_table.hpp"
#include "repdim/group.hpp"
#include "repdim/structure.hpp"

namespace repdim {

/// Set of class indices; bit j set iff class j lies in the subgroup.
using KernelMask = boost::dynamic_bitset<>;

KernelMask kernel_classes(const CharacterTable& table, std::size_t row);
std::vector<KernelMask> kernel_classes(const CharacterTable& table);

/// Row index of a faithful irreducible of least degree (smallest index on ties).
std::optional<std::size_t> faithful_irreducible_row(const CharacterTable& table);
std::optional<unsigned> delta_irr(const CharacterTable& table);

std::set<unsigned> cd_set(const CharacterTable& table);
bool has_faithful_irr(const CharacterTable& table);

/// Targets are minimal normal subgroups; item r covers the targets that are
/// not contained in ker(row r). Multiplicities never help: the kernel of
/// sum n_i chi_i is the intersection of the ker(chi_i) with n_i > 0.
struct CoverInstance {
  std::size_t target_count = 0;
  std::vector<std::uint64_t> covers;  // per row, bit t = covers target t
  std::vector<unsigned> weights;      // per row, the degree
};

constexpr std::size_t kMaxCoverTargets = 64;

CoverInstance build_cover(const CharacterTable& table, const std::vector<KernelMask>& minimal_normals);
CoverInstance build_cover(const CharacterTable& table, const ClassPartition& classes,
                          const std::vector<NormalSubgroup>& minimal_normals);

struct DeltaResult {
  unsigned value = 0;
  std::vector<std::size_t> witness;  // ascending row indices
  std::optional<std::size_t> irreducible_witness;
};

/// Exact minimum-weight cover by branch and bound. Returns value 0 and an
/// empty witness when there are no targets.
DeltaResult solve_cover(const CoverInstance& instance);

/// Minimal normal subgroups as class masks, read off the table alone: for a
/// nontrivial class j, the intersection of all kernels containing j is the
/// normal closure of j; the inclusion-minimal ones are the answer.
std::vector<KernelMask> minimal_normal_masks(const CharacterTable& table);

/// delta from a table alone.
DeltaResult delta(const CharacterTable& table);
/// delta with minimal normal subgroups taken from the group itself.
DeltaResult delta(const Group& group);

constexpr std::size_t kNaiveClassLimit = 16;

/// Exhaustive subset search kept as an oracle for the cover solver: start
/// from the regular character's degree and try all r-subsets of rows while
/// r does not exceed the best degree found. Throws DomainError above
/// kNaiveClassLimit classes.
unsigned delta_naive(const CharacterTable& table);

}  // namespace repdim

#endif  // REPDIM_FAITHFUL_HPP
