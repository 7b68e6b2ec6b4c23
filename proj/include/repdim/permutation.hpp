#ifndef REPDIM_PERMUTATION_HPP
#define REPDIM_PERMUTATION_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace repdim {

/// Permutation of {0, ..., degree-1} stored as an image array.
///
/// Products compose left to right: (a * b)(i) = b(a(i)), so `a * b` means
/// "apply a, then b". Cycle strings use 1-based points.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  explicit Permutation(std::vector<std::uint32_t> images);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator[](std::size_t i) const { return images_[i]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation extended(std::size_t degree) const;

  /// Canonical disjoint-cycle string: each cycle starts at its smallest
  /// point, cycles ordered by that point, fixed points omitted, "()" for
  /// the identity.
  std::string cycle_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

/// Parses whitespace-free cycle notation such as "(1,2,3)(4,5)" or "()".
/// Throws ParseError on repeated points, points outside [1, degree], or
/// malformed syntax.
Permutation parse_cycles(std::string_view text, std::size_t degree);

}  // namespace repdim

#endif  // REPDIM_PERMUTATION_HPP
