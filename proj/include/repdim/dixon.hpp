#ifndef REPDIM_DIXON_HPP
#define REPDIM_DIXON_HPP

#include <functional>
#include <memory>
#include <vector>

#include "repdim/character_table.hpp"
#include "repdim/group.hpp"
#include "repdim/modular.hpp"
#include "repdim/structure.hpp"

namespace repdim {

/// Class multiplication coefficients for a fixed class i:
/// entries[j][l] = #{(x, y) in C_i x C_j : x y = z_l} for a fixed z_l in C_l.
/// The vector of central-character values is a right eigenvector of
/// `entries` with eigenvalue omega(C_i).
struct ClassMatrix {
  std::size_t i = 0;
  std::vector<std::vector<std::uint64_t>> entries;
};

ClassMatrix class_matrix(const Group& group, const ClassPartition& classes, std::size_t i);

ModMatrix reduce_mod(const ClassMatrix& m, const PrimeContext& ctx);

/// Splits F_p^k into common eigenspaces of the class matrices until every
/// space is one-dimensional. `matrix(i)` is asked for class matrices lazily,
/// in increasing i, only while some space still has dimension > 1. Each
/// returned vector has identity-class coordinate 1. Throws
/// VerificationError if the splitting stalls.
std::vector<ModVector> common_eigenvectors(std::size_t k,
                                           const std::function<const ModMatrix&(std::size_t)>& matrix,
                                           const PrimeContext& ctx);
std::vector<ModVector> common_eigenvectors(std::span<const ModMatrix> matrices, const PrimeContext& ctx);

/// Recovers degrees and exact cyclotomic values from central-character
/// vectors mod p, then sorts and verifies the table.
CharacterTable degrees_and_lift(std::span<const ModVector> eigenvectors, const PrimeContext& ctx,
                                std::size_t order, std::vector<ClassInfo> classes, std::string spec);

std::vector<ClassInfo> class_info(const ClassPartition& classes, const PowerMaps& powers);

/// Tables are k x k exact values and the splitting is cubic in k, so groups
/// with more classes than this are refused with BoundError.
inline constexpr std::size_t kMaxTableClasses = 1024;

/// Full pipeline without memoisation.
CharacterTable compute_character_table(const Group& group);

/// Memoised by the group's canonical spec string; thread-safe.
std::shared_ptr<const CharacterTable> character_table(const Group& group);

}  // namespace repdim

#endif  // REPDIM_DIXON_HPP
