#include "repdim/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "repdim/dixon.hpp"
#include "repdim/error.hpp"
#include "repdim/finite_field.hpp"
#include "repdim/named_groups.hpp"
#include "repdim/structure.hpp"

namespace repdim {

namespace {

unsigned log_base(std::uint64_t n, std::uint64_t p) {
  unsigned k = 0;
  while (n > 1) {
    n /= p;
    ++k;
  }
  return k;
}

bool is_extraspecial(const Group& g, const NormalSubgroup& z, const NormalSubgroup& derived, std::uint64_t p) {
  if (z.order() != p || derived.members != z.members) return false;
  std::vector<bool> in_center(g.order(), false);
  for (Element x : z.members) in_center[x] = true;
  for (Element x = 0; x < g.order(); ++x)
    if (!in_center[g.power(x, p)]) return false;
  return true;
}

struct FactorFacts {
  std::vector<FamilyDescriptor> descriptors;
  std::size_t order = 0;
  bool abelian = false;
  bool simple = false;
  bool monolithic = false;
  bool p_group_cyclic_center = false;
  bool unique_nonlinear = false;
};

FactorFacts factor_facts(const GroupSpec& spec, const BuildOptions& options) {
  FactorFacts f;
  const Group g = build_group(spec, options);
  f.order = g.order();
  f.abelian = is_abelian(g);
  f.descriptors = describe(g, spec, options);
  if (g.order() > 1) {
    const auto minimal = minimal_normal_subgroups(g);
    f.monolithic = minimal.size() == 1;
    f.simple = f.monolithic && minimal[0].order() == g.order() && !f.abelian;
    f.p_group_cyclic_center = prime_of_p_group(g.order()) != 0 && is_cyclic(g, center(g).members);
    const auto table = character_table(g);
    std::size_t nonlinear = 0;
    for (const auto& chi : table->characters) nonlinear += chi.degree > 1;
    f.unique_nonlinear = nonlinear == 1;
  }
  return f;
}

}  // namespace

std::vector<FamilyDescriptor> describe(const Group& group, const GroupSpec& spec, const BuildOptions& options) {
  std::vector<FamilyDescriptor> out;
  if (is_abelian(group)) {
    out.push_back(family::Abelian{abelian_rank(group), is_cyclic(group)});
    return out;
  }
  const std::string& f = spec.family;
  if (f == "symmetric") out.push_back(family::Symmetric{static_cast<unsigned>(spec.integer(0))});
  if (f == "alternating") out.push_back(family::Alternating{static_cast<unsigned>(spec.integer(0))});
  if (f == "frobenius72") out.push_back(family::Frobenius72{});
  if (f == "frobenius_affine") {
    const auto q = static_cast<unsigned>(spec.integer(0));
    const auto [p, n] = prime_power(q);
    out.push_back(family::AffineFrobenius{q, static_cast<unsigned>(spec.integer(1)), n == 1,
                                          static_cast<unsigned>(n)});
  }
  if (const std::uint64_t p = prime_of_p_group(group.order()); p != 0) {
    const auto z = center(group);
    const auto derived = derived_subgroup(group);
    const unsigned n = log_base(group.order(), p);
    if (is_extraspecial(group, z, derived, p))
      out.push_back(family::Extraspecial{static_cast<unsigned>(p), (n - 1) / 2});
    out.push_back(family::PGroup{static_cast<unsigned>(p), n, is_cyclic(group, z.members), z.order(),
                                 derived.order()});
  }
  if (f == "product") {
    const auto a = factor_facts(spec.nested(0), options);
    const auto b = factor_facts(spec.nested(1), options);
    if (!a.descriptors.empty() && !b.descriptors.empty()) {
      family::Product prod;
      prod.first = std::make_shared<const FamilyDescriptor>(a.descriptors.front());
      prod.second = std::make_shared<const FamilyDescriptor>(b.descriptors.front());
      prod.coprime_orders = std::gcd(a.order, b.order) == 1;
      prod.both_nonabelian = !a.abelian && !b.abelian;
      prod.both_simple = a.simple && b.simple;
      prod.both_p_groups_cyclic_center = a.p_group_cyclic_center && b.p_group_cyclic_center;
      prod.both_monolithic = a.monolithic && b.monolithic;
      prod.both_unique_nonlinear = a.unique_nonlinear && b.unique_nonlinear;
      out.push_back(std::move(prod));
    }
  }
  return out;
}

bool VerifyReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

namespace {

std::string irr_text(const std::optional<unsigned>& v) { return v ? std::to_string(*v) : "does not exist"; }

}  // namespace

VerifyReport verify_group(const Group& group, const GroupSpec& spec, const CharacterTable& table,
                          const BuildOptions& options) {
  VerifyReport report;
  report.spec = group.spec();
  auto check = [&](std::string name, bool ok, std::string detail = {}) {
    report.checks.push_back(Check{std::move(name), ok, std::move(detail)});
  };

  try {
    verify_table(table);
    check("orthogonality", true);
  } catch (const VerificationError& err) {
    check("orthogonality", false, err.what());
  }

  std::size_t linear = 0;
  for (const auto& chi : table.characters) linear += chi.degree == 1;
  const std::size_t index = group.order() / derived_subgroup(group).order();
  check("linear characters = [G:G']", linear == index,
        std::to_string(linear) + " linear, index " + std::to_string(index));

  const auto classes = conjugacy_classes(group);
  const auto kernels = kernel_classes(table);
  bool kernels_normal = true;
  KernelMask meet(table.class_count());
  meet.set();
  for (const auto& ker : kernels) {
    meet &= ker;
    std::vector<Element> members;
    for (std::size_t j = ker.find_first(); j != KernelMask::npos; j = ker.find_next(j))
      members.insert(members.end(), classes[j].members.begin(), classes[j].members.end());
    if (to_members(subgroup_closure(group, members)).size() != members.size()) kernels_normal = false;
  }
  check("kernels are normal subgroups", kernels_normal);
  check("kernels intersect trivially", meet.count() == 1);

  if (group.order() > 1) {
    std::vector<KernelMask> from_group;
    for (const auto& n : minimal_normal_subgroups(group, classes)) {
      KernelMask mask(table.class_count());
      for (Element x : n.members) mask.set(classes.class_of[x]);
      from_group.push_back(std::move(mask));
    }
    auto from_table = minimal_normal_masks(table);
    auto sorted = [](std::vector<KernelMask> v) {
      std::sort(v.begin(), v.end());
      return v;
    };
    check("minimal normal subgroups: group = table", sorted(from_group) == sorted(from_table),
          std::to_string(from_group.size()) + " vs " + std::to_string(from_table.size()));
  }

  report.delta = delta(group);
  report.delta_irr = delta_irr(table);
  {
    unsigned sum = 0;
    for (auto r : report.delta.witness) sum += table.characters[r].degree;
    KernelMask w(table.class_count());
    w.set();
    for (auto r : report.delta.witness) w &= kernels[r];
    check("witness is faithful with degree delta", sum == report.delta.value && w.count() == 1);
    bool minimal = true;
    if (report.delta.witness.size() > 1)
      for (std::size_t drop = 0; drop < report.delta.witness.size(); ++drop) {
        KernelMask rest(table.class_count());
        rest.set();
        for (std::size_t m = 0; m < report.delta.witness.size(); ++m)
          if (m != drop) rest &= kernels[report.delta.witness[m]];
        if (rest.count() == 1) minimal = false;
      }
    check("witness is irredundant", minimal);
  }
  if (table.class_count() <= kOracleClassLimit) {
    const unsigned naive = delta_naive(table);
    check("naive search = cover solver", naive == report.delta.value,
          std::to_string(naive) + " vs " + std::to_string(report.delta.value));
  }
  if (report.delta_irr)
    check("delta <= delta_irr", report.delta.value <= *report.delta_irr,
          std::to_string(report.delta.value) + " vs " + std::to_string(*report.delta_irr));
  check("delta = 1 iff cyclic", (report.delta.value == 1) == is_cyclic(group));

  for (const auto& d : describe(group, spec, options))
    for (auto& p : predict_all(d)) {
      const bool ok = p.delta == report.delta.value && p.delta_irr == report.delta_irr;
      std::string detail = "predicted " + std::to_string(p.delta) + " / " + irr_text(p.delta_irr) + ", computed " +
                           std::to_string(report.delta.value) + " / " + irr_text(report.delta_irr);
      check("prediction: " + p.source, ok, std::move(detail));
      report.predictions.push_back(std::move(p));
    }
  return report;
}

VerifyReport verify_group(const Group& group, const GroupSpec& spec, const BuildOptions& options) {
  return verify_group(group, spec, *character_table(group), options);
}

std::string format_report(const VerifyReport& report) {
  std::ostringstream out;
  out << report.spec << ": delta = " << report.delta.value << ", delta_irr = " << irr_text(report.delta_irr)
      << '\n';
  for (const auto& c : report.checks) {
    out << (c.passed ? "  ok    " : "  FAIL  ") << c.name;
    if (!c.detail.empty()) out << " (" << c.detail << ')';
    out << '\n';
  }
  return out.str();
}

}  // namespace repdim
