#include "repdim/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "repdim/error.hpp"

namespace repdim {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0u);
}

Permutation::Permutation(std::vector<std::uint32_t> images)
    : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x])
      throw DomainError("permutation images are not a bijection");
    seen[x] = true;
  }
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[images_[i]] = static_cast<std::uint32_t>(i);
  Permutation result;
  result.images_ = std::move(inv);
  return result;
}

Permutation Permutation::extended(std::size_t degree) const {
  if (degree < images_.size())
    throw DomainError("cannot shrink a permutation");
  Permutation result(degree);
  std::copy(images_.begin(), images_.end(), result.images_.begin());
  return result;
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start) continue;
    out += '(';
    std::size_t x = start;
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      if (!first) out += ',';
      out += std::to_string(x + 1);
      first = false;
      x = images_[x];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  const std::size_t n = std::max(a.degree(), b.degree());
  std::vector<std::uint32_t> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t ai = i < a.degree() ? a[i] : static_cast<std::uint32_t>(i);
    out[i] = ai < b.degree() ? b[ai] : ai;
  }
  Permutation result;
  result.images_ = std::move(out);
  return result;
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  Permutation identity(degree);
  std::vector<std::uint32_t> images = identity.images();
  std::vector<bool> used(degree, false);

  auto fail = [&](const std::string& why) -> void {
    throw ParseError("bad cycle string \"" + std::string(text) + "\": " + why);
  };

  std::size_t pos = 0;
  if (text.empty()) fail("empty");
  if (text == "()") return identity;

  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '(' at offset " + std::to_string(pos));
    ++pos;
    std::vector<std::uint32_t> cycle;
    while (true) {
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        fail("expected a point at offset " + std::to_string(pos));
      std::size_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (value > degree) fail("point exceeds degree " + std::to_string(degree));
        ++pos;
      }
      if (value == 0) fail("points are 1-based");
      const auto point = static_cast<std::uint32_t>(value - 1);
      if (used[point]) fail("point " + std::to_string(value) + " repeated");
      used[point] = true;
      cycle.push_back(point);
      if (pos >= text.size()) fail("unterminated cycle");
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      fail(std::string("unexpected character '") + text[pos] + "'");
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  return Permutation(std::move(images));
}

}  // namespace repdim
