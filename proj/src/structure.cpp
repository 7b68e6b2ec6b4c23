#include "repdim/structure.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "repdim/error.hpp"

namespace repdim {

ClassPartition conjugacy_classes(const Group& group) {
  const std::size_t n = group.order();
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> raw_class(n, kUnset);
  std::vector<std::vector<Element>> raw;

  // Orbits under conjugation by the generators.
  for (Element start = 0; start < n; ++start) {
    if (raw_class[start] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(raw.size());
    std::vector<Element> orbit{start};
    raw_class[start] = id;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (Element g : group.generators()) {
        Element y = group.conjugate(orbit[i], g);
        if (raw_class[y] == kUnset) {
          raw_class[y] = id;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    raw.push_back(std::move(orbit));
  }

  std::vector<unsigned> orders(raw.size());
  for (std::size_t c = 0; c < raw.size(); ++c) orders[c] = group.element_order(raw[c].front());

  std::vector<std::size_t> perm(raw.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return std::make_tuple(orders[a], raw[a].size(), raw[a].front()) <
           std::make_tuple(orders[b], raw[b].size(), raw[b].front());
  });

  ClassPartition result;
  result.class_of.assign(n, 0);
  result.classes.reserve(raw.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    auto& members = raw[perm[i]];
    for (Element x : members) result.class_of[x] = static_cast<std::uint32_t>(i);
    ConjugacyClass cls;
    cls.representative = members.front();
    cls.size = members.size();
    cls.rep_order = orders[perm[i]];
    cls.inverse_class = 0;
    cls.members = std::move(members);
    result.classes.push_back(std::move(cls));
  }
  for (auto& cls : result.classes)
    cls.inverse_class = result.class_of[group.inverse(cls.representative)];
  return result;
}

PowerMaps power_maps(const Group& group, const ClassPartition& classes) {
  const unsigned e = exponent(group);
  PowerMaps maps;
  maps.table.assign(e, std::vector<std::uint32_t>(classes.size()));
  for (std::size_t j = 0; j < classes.size(); ++j) {
    const Element g = classes[j].representative;
    Element x = group.identity();
    for (unsigned k = 0; k < e; ++k) {
      maps.table[k][j] = classes.class_of[x];
      x = group.multiply(x, g);
    }
  }
  return maps;
}

std::vector<Element> to_members(const std::vector<bool>& mask) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i]) out.push_back(static_cast<Element>(i));
  return out;
}

namespace {

// Extends `in` (already a subgroup, listed in `list`) by new generators.
void close_under(const Group& group, std::vector<bool>& in, std::vector<Element>& list,
                 std::vector<Element>& gens, Element extra) {
  gens.push_back(extra);
  // Every element of the new subgroup is a word in the generators; a
  // breadth-first search from the already-closed part reaches all of them.
  std::vector<Element> frontier = list;
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    for (Element g : gens) {
      Element y = group.multiply(frontier[i], g);
      if (!in[y]) {
        in[y] = true;
        list.push_back(y);
        frontier.push_back(y);
      }
    }
  }
}

}  // namespace

std::vector<bool> subgroup_closure(const Group& group, std::span<const Element> gens) {
  std::vector<bool> in(group.order(), false);
  in[0] = true;
  std::vector<Element> list{0};
  std::vector<Element> used;
  for (Element g : gens)
    if (!in[g]) close_under(group, in, list, used, g);
  return in;
}

std::vector<bool> normal_closure(const Group& group, std::span<const Element> gens) {
  std::vector<bool> in(group.order(), false);
  in[0] = true;
  std::vector<Element> list{0};
  std::vector<Element> used;
  std::vector<Element> pending(gens.begin(), gens.end());
  while (!pending.empty()) {
    Element g = pending.back();
    pending.pop_back();
    if (in[g]) continue;
    const std::size_t before = used.size();
    close_under(group, in, list, used, g);
    for (std::size_t i = before; i < used.size(); ++i)
      for (Element h : group.generators()) pending.push_back(group.conjugate(used[i], h));
  }
  // Conjugates of every generator used are members, so the subgroup is normal.
  return in;
}

NormalSubgroup center(const Group& group) {
  NormalSubgroup z;
  for (Element x = 0; x < group.order(); ++x) {
    bool central = true;
    for (Element g : group.generators()) {
      if (group.multiply(x, g) != group.multiply(g, x)) {
        central = false;
        break;
      }
    }
    if (central) z.members.push_back(x);
  }
  return z;
}

NormalSubgroup derived_subgroup(const Group& group) {
  std::vector<Element> comms;
  auto gens = group.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) comms.push_back(group.commutator(gens[i], gens[j]));
  return {to_members(normal_closure(group, comms))};
}

unsigned exponent(const Group& group) {
  std::uint64_t e = 1;
  for (Element x = 0; x < group.order(); ++x) e = std::lcm(e, std::uint64_t{group.element_order(x)});
  return static_cast<unsigned>(e);
}

bool is_abelian(const Group& group) {
  auto gens = group.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (group.multiply(gens[i], gens[j]) != group.multiply(gens[j], gens[i])) return false;
  return true;
}

bool is_cyclic(const Group& group, std::span<const Element> members) {
  const std::size_t n = members.size();
  for (Element x : members) {
    // Order within G equals order within the subgroup.
    if (group.element_order(x) == n) return true;
  }
  return n <= 1;
}

bool is_cyclic(const Group& group) {
  for (Element x = 0; x < group.order(); ++x)
    if (group.element_order(x) == group.order()) return true;
  return group.order() == 1;
}

unsigned abelian_rank(const Group& group) {
  if (!is_abelian(group)) throw DomainError("abelian_rank requires an abelian group");
  unsigned rank = 0;
  for (auto q : prime_factors(group.order())) {
    std::size_t count = 0;
    for (Element x = 0; x < group.order(); ++x)
      if (group.power(x, q) == group.identity()) ++count;
    unsigned r = 0;
    while (count > 1) {
      count /= q;
      ++r;
    }
    rank = std::max(rank, r);
  }
  return rank;
}

std::vector<NormalSubgroup> minimal_normal_subgroups(const Group& group,
                                                     const ClassPartition& classes) {
  if (group.order() <= 1) throw DomainError("the trivial group has no minimal normal subgroups");
  std::vector<std::vector<bool>> closures;
  for (std::size_t c = 1; c < classes.size(); ++c) {
    // A conjugacy class generates a normal subgroup.
    auto mask = subgroup_closure(group, classes[c].members);
    if (std::find(closures.begin(), closures.end(), mask) == closures.end())
      closures.push_back(std::move(mask));
  }
  auto contains = [](const std::vector<bool>& big, const std::vector<bool>& small) {
    for (std::size_t i = 0; i < small.size(); ++i)
      if (small[i] && !big[i]) return false;
    return true;
  };
  std::vector<NormalSubgroup> result;
  for (std::size_t i = 0; i < closures.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < closures.size() && minimal; ++j)
      if (j != i && contains(closures[i], closures[j])) minimal = false;
    if (minimal) result.push_back({to_members(closures[i])});
  }
  std::sort(result.begin(), result.end(), [](const NormalSubgroup& a, const NormalSubgroup& b) {
    return std::make_pair(a.order(), a.members) < std::make_pair(b.order(), b.members);
  });
  return result;
}

std::vector<NormalSubgroup> minimal_normal_subgroups(const Group& group) {
  return minimal_normal_subgroups(group, conjugacy_classes(group));
}

bool is_normal(const Group& group, std::span<const Element> members) {
  std::vector<bool> in(group.order(), false);
  for (Element x : members) in[x] = true;
  for (Element x : members)
    for (Element g : group.generators())
      if (!in[group.conjugate(x, g)]) return false;
  return true;
}

std::uint64_t prime_of_p_group(std::size_t order) {
  auto primes = prime_factors(order);
  return primes.size() == 1 ? primes.front() : 0;
}

}  // namespace repdim
