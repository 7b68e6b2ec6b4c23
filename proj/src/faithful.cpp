#include "repdim/faithful.hpp"

#include <algorithm>
#include <numeric>

#include "repdim/dixon.hpp"
#include "repdim/error.hpp"

namespace repdim {

KernelMask kernel_classes(const CharacterTable& table, std::size_t row) {
  const auto& chi = table.characters.at(row);
  const Cyclo degree(table.conductor, chi.degree);
  KernelMask mask(table.class_count());
  for (std::size_t j = 0; j < table.class_count(); ++j)
    if (chi.values[j] == degree) mask.set(j);
  return mask;
}

std::vector<KernelMask> kernel_classes(const CharacterTable& table) {
  std::vector<KernelMask> out;
  for (std::size_t r = 0; r < table.characters.size(); ++r) out.push_back(kernel_classes(table, r));
  return out;
}

std::optional<std::size_t> faithful_irreducible_row(const CharacterTable& table) {
  std::optional<std::size_t> best;
  for (std::size_t r = 0; r < table.characters.size(); ++r) {
    const auto mask = kernel_classes(table, r);
    if (mask.count() != 1) continue;
    if (!best || table.characters[r].degree < table.characters[*best].degree) best = r;
  }
  return best;
}

std::optional<unsigned> delta_irr(const CharacterTable& table) {
  const auto row = faithful_irreducible_row(table);
  if (!row) return std::nullopt;
  return table.characters[*row].degree;
}

std::set<unsigned> cd_set(const CharacterTable& table) {
  std::set<unsigned> out;
  for (const auto& chi : table.characters) out.insert(chi.degree);
  return out;
}

bool has_faithful_irr(const CharacterTable& table) { return faithful_irreducible_row(table).has_value(); }

CoverInstance build_cover(const CharacterTable& table, const std::vector<KernelMask>& minimal_normals) {
  if (minimal_normals.size() > kMaxCoverTargets)
    throw DomainError("more than 64 minimal normal subgroups");
  CoverInstance inst;
  inst.target_count = minimal_normals.size();
  for (std::size_t r = 0; r < table.characters.size(); ++r) {
    const auto kernel = kernel_classes(table, r);
    std::uint64_t bits = 0;
    for (std::size_t t = 0; t < minimal_normals.size(); ++t)
      if (!minimal_normals[t].is_subset_of(kernel)) bits |= std::uint64_t{1} << t;
    inst.covers.push_back(bits);
    inst.weights.push_back(table.characters[r].degree);
  }
  return inst;
}

CoverInstance build_cover(const CharacterTable& table, const ClassPartition& classes,
                          const std::vector<NormalSubgroup>& minimal_normals) {
  std::vector<KernelMask> masks;
  for (const auto& n : minimal_normals) {
    KernelMask mask(table.class_count());
    for (Element x : n.members) mask.set(classes.class_of[x]);
    masks.push_back(std::move(mask));
  }
  return build_cover(table, masks);
}

namespace {

struct Search {
  const CoverInstance& inst;
  std::vector<std::size_t> target_order;
  std::vector<std::vector<std::size_t>> items_for;  // per target, sorted by (weight, row)
  std::uint64_t all = 0;
  unsigned best = 0;
  std::vector<std::size_t> best_set;
  std::vector<std::size_t> current;

  void run(std::uint64_t covered, unsigned weight) {
    if (covered == all) {
      if (weight < best) {
        best = weight;
        best_set = current;
      }
      return;
    }
    std::size_t target = 0;
    for (std::size_t t : target_order)
      if (!(covered >> t & 1)) {
        target = t;
        break;
      }
    for (std::size_t r : items_for[target]) {
      const unsigned w = weight + inst.weights[r];
      if (w >= best) break;  // items are sorted by weight
      current.push_back(r);
      run(covered | inst.covers[r], w);
      current.pop_back();
    }
  }
};

}  // namespace

DeltaResult solve_cover(const CoverInstance& inst) {
  DeltaResult result;
  if (inst.target_count == 0) return result;
  if (inst.target_count > kMaxCoverTargets) throw DomainError("more than 64 cover targets");
  Search s{inst, {}, std::vector<std::vector<std::size_t>>(inst.target_count), 0, 0, {}, {}};
  s.all = inst.target_count == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << inst.target_count) - 1;
  std::uint64_t total_cover = 0;
  unsigned total_weight = 0;
  for (std::size_t r = 0; r < inst.covers.size(); ++r) {
    total_cover |= inst.covers[r];
    if (inst.covers[r] != 0) total_weight += inst.weights[r];
    for (std::size_t t = 0; t < inst.target_count; ++t)
      if (inst.covers[r] >> t & 1) s.items_for[t].push_back(r);
  }
  if (total_cover != s.all) throw VerificationError("cover instance has an uncoverable target");
  for (auto& items : s.items_for)
    std::stable_sort(items.begin(), items.end(),
                     [&](std::size_t a, std::size_t b) { return inst.weights[a] < inst.weights[b]; });
  s.target_order.resize(inst.target_count);
  std::iota(s.target_order.begin(), s.target_order.end(), 0);
  std::stable_sort(s.target_order.begin(), s.target_order.end(), [&](std::size_t a, std::size_t b) {
    return s.items_for[a].size() < s.items_for[b].size();
  });
  s.best = total_weight + 1;
  s.run(0, 0);

  // With positive weights an optimal cover has no redundant member; check anyway.
  for (std::size_t drop = 0; drop < s.best_set.size(); ++drop) {
    std::uint64_t rest = 0;
    for (std::size_t m = 0; m < s.best_set.size(); ++m)
      if (m != drop) rest |= inst.covers[s.best_set[m]];
    if (rest == s.all) throw VerificationError("cover witness has a redundant member");
  }
  std::sort(s.best_set.begin(), s.best_set.end());
  result.value = s.best;
  result.witness = std::move(s.best_set);
  return result;
}

std::vector<KernelMask> minimal_normal_masks(const CharacterTable& table) {
  const std::size_t k = table.class_count();
  const auto kernels = kernel_classes(table);
  std::vector<KernelMask> closures;
  for (std::size_t j = 1; j < k; ++j) {
    KernelMask n(k);
    n.set();
    for (const auto& ker : kernels)
      if (ker.test(j)) n &= ker;
    if (std::find(closures.begin(), closures.end(), n) == closures.end()) closures.push_back(std::move(n));
  }
  std::vector<KernelMask> minimal;
  for (const auto& n : closures) {
    bool is_min = true;
    for (const auto& m : closures)
      if (m != n && m.is_subset_of(n)) {
        is_min = false;
        break;
      }
    if (is_min) minimal.push_back(n);
  }
  std::sort(minimal.begin(), minimal.end(), [](const KernelMask& a, const KernelMask& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.find_first() != b.find_first() ? a.find_first() < b.find_first() : a < b;
  });
  return minimal;
}

namespace {

DeltaResult finish(const CharacterTable& table, const CoverInstance& inst) {
  DeltaResult result;
  if (inst.target_count == 0) {
    // Trivial group: the trivial character is faithful.
    result.value = table.characters.at(0).degree;
    result.witness = {0};
  } else {
    result = solve_cover(inst);
  }
  result.irreducible_witness = faithful_irreducible_row(table);
  return result;
}

}  // namespace

DeltaResult delta(const CharacterTable& table) { return finish(table, build_cover(table, minimal_normal_masks(table))); }

DeltaResult delta(const Group& group) {
  const auto table = character_table(group);
  if (group.order() == 1) return finish(*table, CoverInstance{});
  const auto classes = conjugacy_classes(group);
  return finish(*table, build_cover(*table, classes, minimal_normal_subgroups(group, classes)));
}

unsigned delta_naive(const CharacterTable& table) {
  const std::size_t s = table.class_count();
  if (s > kNaiveClassLimit) throw DomainError("naive search is limited to 16 classes");
  const auto kernels = kernel_classes(table);
  unsigned min_deg = 0;
  for (const auto& chi : table.characters) min_deg += chi.degree;

  std::vector<std::size_t> combo;
  for (std::size_t r = 1; r <= min_deg && r <= s; ++r) {
    combo.resize(r);
    std::iota(combo.begin(), combo.end(), 0);
    while (true) {
      unsigned deg_sum = 0;
      for (std::size_t i : combo) deg_sum += table.characters[i].degree;
      if (deg_sum < min_deg && r < min_deg) {
        KernelMask meet(s);
        meet.set();
        for (std::size_t i : combo) meet &= kernels[i];
        if (meet.count() == 1) min_deg = deg_sum;
      }
      // next r-combination of {0..s-1} in lexicographic order
      std::size_t pos = r;
      while (pos > 0 && combo[pos - 1] == s - r + pos - 1) --pos;
      if (pos == 0) break;
      ++combo[pos - 1];
      for (std::size_t q = pos; q < r; ++q) combo[q] = combo[q - 1] + 1;
    }
  }
  return min_deg;
}

}  // namespace repdim
