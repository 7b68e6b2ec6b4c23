#include "repdim/character_table.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "repdim/error.hpp"

namespace repdim {

namespace {

bool is_trivial(const Character& c) {
  if (c.degree != 1) return false;
  for (const auto& v : c.values)
    if (v.integer_value() != 1) return false;
  return true;
}

}  // namespace

void sort_characters(CharacterTable& table) {
  std::stable_sort(table.characters.begin(), table.characters.end(),
                   [](const Character& a, const Character& b) {
                     const bool ta = is_trivial(a), tb = is_trivial(b);
                     if (ta != tb) return ta;
                     if (a.degree != b.degree) return a.degree < b.degree;
                     for (std::size_t j = 0; j < a.values.size(); ++j) {
                       const auto& x = a.values[j].coeffs();
                       const auto& y = b.values[j].coeffs();
                       if (x != y) return x < y;
                     }
                     return false;
                   });
}

Cyclo inner_product_times_order(const CharacterTable& table, std::size_t chi, std::size_t psi) {
  Cyclo sum(table.conductor, 0);
  for (std::size_t j = 0; j < table.class_count(); ++j)
    sum += (table.value(chi, j) * table.value(psi, j).conj()).scaled(static_cast<std::int64_t>(table.classes[j].size));
  return sum;
}

void verify_table(const CharacterTable& table) {
  const std::size_t k = table.class_count();
  auto fail = [&](const std::string& why) {
    throw VerificationError("character table " + table.spec + ": " + why);
  };
  if (table.characters.size() != k) fail("row count differs from class count");
  std::size_t total = 0;
  for (const auto& c : table.classes) {
    if (c.size == 0 || table.order % c.size != 0) fail("class size does not divide the order");
    if (c.inverse >= k) fail("inverse class out of range");
    total += c.size;
  }
  if (total != table.order) fail("class sizes do not sum to the order");
  for (std::size_t j = 0; j < k; ++j)
    if (table.classes[table.classes[j].inverse].inverse != j) fail("inverse classes are not an involution");

  std::uint64_t squares = 0;
  for (const auto& row : table.characters) {
    if (row.values.size() != k) fail("row has the wrong number of values");
    for (const auto& v : row.values)
      if (v.conductor() != table.conductor) fail("value with foreign conductor");
    if (row.values[0].integer_value() != static_cast<std::int64_t>(row.degree))
      fail("identity-class value differs from the degree");
    squares += std::uint64_t{row.degree} * row.degree;
  }
  if (squares != table.order) fail("squared degrees sum to " + std::to_string(squares));
  if (!is_trivial(table.characters[0])) fail("row 0 is not the trivial character");

  // Orthogonality runs k^3 products, so values are flattened into one
  // coefficient array and products accumulate unreduced in the power basis
  // (exponents folded mod e); each sum is reduced once at the end.
  const unsigned e = table.conductor;
  const unsigned phi = euler_phi(e);
  std::vector<std::int64_t> val(k * k * phi), cj(k * k * phi);
  std::int64_t bound = 0;
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t j = 0; j < k; ++j) {
      const auto& a = table.value(r, j).coeffs();
      const auto b = table.value(r, j).conj();
      for (unsigned t = 0; t < phi; ++t) {
        val[(r * k + j) * phi + t] = a[t];
        cj[(r * k + j) * phi + t] = b.coeffs()[t];
        bound = std::max({bound, a[t] < 0 ? -a[t] : a[t], b.coeffs()[t] < 0 ? -b.coeffs()[t] : b.coeffs()[t]});
      }
    }
  }
  const long double worst = static_cast<long double>(bound) * bound * phi * k * table.order;
  if (worst > 1e36L) throw OverflowError("orthogonality sums for " + table.spec + " exceed 128 bits");

  std::vector<__int128> acc(e);
  std::vector<std::int64_t> folded(e);
  auto settle = [&](std::int64_t expected) {
    for (unsigned t = 0; t < e; ++t) {
      if (acc[t] > INT64_MAX || acc[t] < INT64_MIN) throw OverflowError("orthogonality sum exceeds 64 bits");
      folded[t] = static_cast<std::int64_t>(acc[t]);
    }
    return Cyclo::from_root_multiplicities(e, folded) == Cyclo(e, expected);
  };
  auto accumulate = [&](const std::int64_t* x, const std::int64_t* y, std::int64_t w) {
    for (unsigned s = 0; s < phi; ++s) {
      if (x[s] == 0) continue;
      const __int128 xs = static_cast<__int128>(x[s]) * w;
      for (unsigned t = 0; t < phi; ++t) {
        if (y[t] == 0) continue;
        unsigned slot = s + t;
        if (slot >= e) slot -= e;
        acc[slot] += xs * y[t];
      }
    }
  };

  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a; b < k; ++b) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t j = 0; j < k; ++j)
        accumulate(&val[(a * k + j) * phi], &cj[(b * k + j) * phi],
                   static_cast<std::int64_t>(table.classes[j].size));
      if (!settle(a == b ? static_cast<std::int64_t>(table.order) : 0))
        fail("row orthogonality fails for rows " + std::to_string(a) + "," + std::to_string(b));
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t r = 0; r < k; ++r) accumulate(&val[(r * k + i) * phi], &cj[(r * k + j) * phi], 1);
      if (!settle(i == j ? static_cast<std::int64_t>(table.centralizer_order(i)) : 0))
        fail("column orthogonality fails for classes " + std::to_string(i) + "," + std::to_string(j));
    }
  }
}

}  // namespace repdim
