#ifndef REPDIM_CHARACTER_TABLE_HPP
#define REPDIM_CHARACTER_TABLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "repdim/cyclotomic.hpp"

namespace repdim {

struct ClassInfo {
  std::size_t size = 1;
  unsigned rep_order = 1;
  std::size_t inverse = 0;
  std::vector<std::uint32_t> powers;  // powers[k] = class of g^k, 0 <= k < conductor
};

struct Character {
  unsigned degree = 1;
  std::vector<Cyclo> values;  // one per class, all of the table's conductor
};

/// Irreducible characters on conjugacy classes; row 0 is the trivial
/// character, the remaining rows are sorted by (degree, values).
struct CharacterTable {
  std::string spec;
  std::size_t order = 1;
  unsigned conductor = 1;
  std::vector<ClassInfo> classes;
  std::vector<Character> characters;

  std::size_t class_count() const { return classes.size(); }
  std::size_t centralizer_order(std::size_t j) const { return order / classes[j].size; }
  const Cyclo& value(std::size_t row, std::size_t cls) const { return characters[row].values[cls]; }
};

/// Canonical row order: trivial character first, then ascending degree,
/// then lexicographic coefficient vectors class by class.
void sort_characters(CharacterTable& table);

/// Exact checks: row and column orthogonality in Z[zeta_e], sum of squared
/// degrees, first column equals degree, row 0 trivial, class sizes sum to
/// the order. Throws VerificationError describing the first failure.
void verify_table(const CharacterTable& table);

/// Sum_j |C_j| chi(j) conj(psi(j)).
Cyclo inner_product_times_order(const CharacterTable& table, std::size_t chi, std::size_t psi);

}  // namespace repdim

#endif  // REPDIM_CHARACTER_TABLE_HPP
