#ifndef REPDIM_STRUCTURE_HPP
#define REPDIM_STRUCTURE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "repdim/group.hpp"

namespace repdim {

struct ConjugacyClass {
  Element representative;        // smallest member index
  std::vector<Element> members;  // ascending
  std::size_t size;
  std::size_t inverse_class;
  unsigned rep_order;
};

/// Conjugacy classes ordered identity first, then ascending
/// (rep_order, size), ties broken by smallest member index.
struct ClassPartition {
  std::vector<ConjugacyClass> classes;
  std::vector<std::uint32_t> class_of;  // element -> class index

  std::size_t size() const { return classes.size(); }
  const ConjugacyClass& operator[](std::size_t i) const { return classes[i]; }
};

ClassPartition conjugacy_classes(const Group& group);

/// table[k][j] = class of (representative of class j)^k for 0 <= k < exponent.
struct PowerMaps {
  std::vector<std::vector<std::uint32_t>> table;

  std::size_t exponent() const { return table.size(); }
  std::uint32_t operator()(std::size_t k, std::size_t j) const { return table[k % table.size()][j]; }
};

PowerMaps power_maps(const Group& group, const ClassPartition& classes);

/// Subgroup given by its sorted element indices.
struct NormalSubgroup {
  std::vector<Element> members;

  std::size_t order() const { return members.size(); }
  friend bool operator==(const NormalSubgroup&, const NormalSubgroup&) = default;
};

/// Subgroup generated by `gens`, as a membership vector.
std::vector<bool> subgroup_closure(const Group& group, std::span<const Element> gens);

/// Smallest normal subgroup containing `gens`.
std::vector<bool> normal_closure(const Group& group, std::span<const Element> gens);

NormalSubgroup center(const Group& group);
NormalSubgroup derived_subgroup(const Group& group);
unsigned exponent(const Group& group);
bool is_abelian(const Group& group);
bool is_cyclic(const Group& group, std::span<const Element> members);
bool is_cyclic(const Group& group);

/// Number of invariant factors of an abelian group (0 for the trivial
/// group). Throws DomainError on nonabelian input.
unsigned abelian_rank(const Group& group);

/// Inclusion-minimal normal closures of nontrivial conjugacy classes.
/// Throws DomainError on the trivial group.
std::vector<NormalSubgroup> minimal_normal_subgroups(const Group& group,
                                                     const ClassPartition& classes);
std::vector<NormalSubgroup> minimal_normal_subgroups(const Group& group);

/// True when `members` is closed under conjugation by the generators.
bool is_normal(const Group& group, std::span<const Element> members);

std::vector<Element> to_members(const std::vector<bool>& mask);

/// If |G| = p^n returns p, else 0 (also 0 for the trivial group).
std::uint64_t prime_of_p_group(std::size_t order);

}  // namespace repdim

#endif  // REPDIM_STRUCTURE_HPP
