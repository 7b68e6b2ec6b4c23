#ifndef REPDIM_NAMED_GROUPS_HPP
#define REPDIM_NAMED_GROUPS_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include "repdim/group.hpp"
#include "repdim/group_spec.hpp"

namespace repdim {

// Family constructors. Dihedral and dicyclic groups are named by their
// order. Every constructor checks the order bound before building.

Group cyclic_group(std::uint64_t n, const BuildOptions& options = {});
Group abelian_group(const std::vector<std::uint64_t>& moduli, const BuildOptions& options = {});
Group dihedral_group(std::uint64_t order, const BuildOptions& options = {});
Group dicyclic_group(std::uint64_t order, const BuildOptions& options = {});
Group symmetric_group(unsigned n, const BuildOptions& options = {});
Group alternating_group(unsigned n, const BuildOptions& options = {});

enum class ExtraspecialType { Plus, Minus, ExponentP, ExponentP2 };

/// Extraspecial group of order p^(2r+1) as a central product of r
/// nonabelian groups of order p^3.
Group extraspecial_group(std::uint32_t p, std::uint64_t order, ExtraspecialType type,
                         const BuildOptions& options = {});

/// F_q ⋊ H with H the index-d subgroup of F_q^x, acting by x -> a x + b.
Group frobenius_affine_group(std::uint32_t q, std::uint32_t d, const BuildOptions& options = {});

/// F_3^2 ⋊ Q_8, Q_8 acting fixed-point-freely on the 9 points.
Group frobenius72_group(const BuildOptions& options = {});

/// GL(2,q) / SL(2,q) acting on the nonzero vectors of F_q^2.
Group general_linear_group(unsigned n, std::uint32_t q, const BuildOptions& options = {});
Group special_linear_group(unsigned n, std::uint32_t q, const BuildOptions& options = {});

/// Builds any group in the spec grammar. Throws ParseError for unknown
/// families or wrong argument shapes, DomainError for unsupported
/// parameters and BoundError when the order bound is exceeded.
Group build_group(const GroupSpec& spec, const BuildOptions& options = {});
Group named_group(std::string_view text, const BuildOptions& options = {});

}  // namespace repdim

#endif  // REPDIM_NAMED_GROUPS_HPP
