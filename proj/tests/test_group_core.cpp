#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "repdim/error.hpp"
#include "repdim/group_spec.hpp"
#include "repdim/named_groups.hpp"
#include "repdim/permutation.hpp"
#include "repdim/structure.hpp"

using namespace repdim;

namespace {

// Independent oracle: conjugacy classes by brute-force conjugation over
// every element, not just the generators.
std::vector<std::set<Element>> brute_classes(const Group& g) {
  std::vector<bool> seen(g.order(), false);
  std::vector<std::set<Element>> out;
  for (Element x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::set<Element> c;
    for (Element y = 0; y < g.order(); ++y) c.insert(g.conjugate(x, y));
    for (Element m : c) seen[m] = true;
    out.push_back(std::move(c));
  }
  return out;
}

std::size_t brute_center_order(const Group& g) {
  std::size_t n = 0;
  for (Element x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Element y = 0; y < g.order() && central; ++y) central = g.multiply(x, y) == g.multiply(y, x);
    n += central;
  }
  return n;
}

const char* kSample[] = {"cyclic(7)",
                         "abelian(2,4)",
                         "dihedral(10)",
                         "dicyclic(12)",
                         "symmetric(4)",
                         "alternating(5)",
                         "extraspecial(3,27,exp3)",
                         "extraspecial(3,27,exp9)",
                         "extraspecial(2,32,plus)",
                         "extraspecial(2,32,minus)",
                         "extraspecial(2,8,plus)",
                         "extraspecial(2,8,minus)",
                         "frobenius_affine(5,1)",
                         "frobenius_affine(7,2)",
                         "frobenius_affine(9,1)",
                         "frobenius72()",
                         "gl(2,3)",
                         "sl(2,5)",
                         "gl(2,4)",
                         "sl(2,3)",
                         "product(alternating(4),dihedral(10))",
                         "perm(4:\"(1,2,3,4)\",\"(1,3)\")"};

}  // namespace

TEST_SUITE("group-core") {
  TEST_CASE("parse_cycles") {
    CHECK(parse_cycles("(1,2,3)", 3).images() == std::vector<std::uint32_t>{1, 2, 0});
    CHECK(parse_cycles("()", 4).is_identity());
    CHECK(parse_cycles("()", 4).degree() == 4);
    CHECK(parse_cycles("(1,2)(3,4)", 5).cycle_string() == "(1,2)(3,4)");
    CHECK_THROWS_AS(parse_cycles("(1,2)(2,3)", 3), ParseError);
    CHECK_THROWS_AS(parse_cycles("(1,4)", 3), ParseError);
    CHECK_THROWS_AS(parse_cycles("(1,2", 3), ParseError);
    CHECK_THROWS_AS(parse_cycles("(1,,2)", 3), ParseError);
    CHECK_THROWS_AS(parse_cycles("(0,1)", 3), ParseError);
  }

  TEST_CASE("permutation product applies the left factor first") {
    const auto a = parse_cycles("(1,2)", 3);
    const auto b = parse_cycles("(2,3)", 3);
    // 1 -a-> 2 -b-> 3
    CHECK((a * b)[0] == 2);
    CHECK((a * a.inverse()).is_identity());
    CHECK(parse_cycles("(3,1,2)", 3).cycle_string() == "(1,2,3)");
  }

  TEST_CASE("group_from_generators") {
    std::vector<Permutation> s3{parse_cycles("(1,2)", 3), parse_cycles("(1,2,3)", 3)};
    CHECK(group_from_generators(s3).order() == 6);

    // Oracle for the dihedral case: closure by repeated multiplication of
    // explicit permutations, independent of the backend.
    std::vector<Permutation> d8{parse_cycles("(1,2,3,4)", 4), parse_cycles("(1,3)", 4)};
    std::set<Permutation> closure{Permutation(4)};
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& x : std::vector<Permutation>(closure.begin(), closure.end()))
        for (const auto& g : d8) grew |= closure.insert(x * g).second;
    }
    CHECK(closure.size() == 8);
    CHECK(group_from_generators(d8).order() == 8);

    std::vector<Permutation> c15{parse_cycles("(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15)", 15)};
    CHECK_THROWS_AS(group_from_generators(c15, BuildOptions{10}), BoundError);
    CHECK(group_from_generators(std::vector<Permutation>{}).order() == 1);
  }

  TEST_CASE("named group orders") {
    const std::map<std::string, std::size_t> orders{
        {"cyclic(1)", 1},          {"cyclic(12)", 12},
        {"abelian(2,4,8)", 64},    {"dihedral(10)", 10},
        {"dihedral(20)", 20},      {"dicyclic(8)", 8},
        {"quaternion(8)", 8},      {"symmetric(6)", 720},
        {"alternating(7)", 2520},  {"extraspecial(3,27,exp3)", 27},
        {"extraspecial(5,125,exp5)", 125}, {"extraspecial(2,128,minus)", 128},
        {"frobenius_affine(5,1)", 20},     {"frobenius_affine(7,2)", 21},
        {"frobenius_affine(9,1)", 72},     {"frobenius_affine(27,2)", 351},
        {"frobenius72()", 72},     {"gl(2,2)", 6},
        {"gl(2,3)", 48},           {"gl(2,4)", 180},
        {"gl(2,5)", 480},          {"sl(2,4)", 60},
        {"sl(2,5)", 120},          {"product(dihedral(8),cyclic(2))", 16}};
    for (const auto& [spec, n] : orders) {
      CAPTURE(spec);
      CHECK(named_group(spec).order() == n);
    }
    CHECK(named_group("quaternion(8)").spec() == "dicyclic(8)");
    CHECK_THROWS_AS(named_group("extraspecial(4,64,plus)"), DomainError);
    CHECK_THROWS_AS(named_group("frobenius_affine(6,1)"), DomainError);
    CHECK_THROWS_AS(named_group("dihedral(7)"), DomainError);
    CHECK_THROWS_AS(named_group("nonsense(3)"), ParseError);
    CHECK_THROWS_AS(named_group("cyclic(3"), ParseError);
    CHECK_THROWS_AS(named_group("symmetric(9)"), BoundError);
  }

  TEST_CASE("spec examples for named groups") {
    const auto f = named_group("frobenius72()");
    CHECK(center(f).order() == 1);
    // Nine point stabilisers, each quaternion (one involution, six elements
    // of order 4); a dihedral or cyclic complement would change both counts.
    std::map<unsigned, std::size_t> by_order;
    for (Element x = 0; x < f.order(); ++x) ++by_order[f.element_order(x)];
    CHECK(by_order == std::map<unsigned, std::size_t>{{1, 1}, {2, 9}, {3, 8}, {4, 54}});
    const auto es = named_group("extraspecial(3,27,exp3)");
    CHECK(center(es).order() == 3);
    CHECK(exponent(es) == 3);
    CHECK(exponent(named_group("extraspecial(3,27,exp9)")) == 9);
    CHECK(exponent(named_group("dicyclic(8)")) == 4);
  }

  TEST_CASE("group axioms") {
    std::mt19937 rng(20240611);
    for (const char* spec : kSample) {
      CAPTURE(spec);
      const Group g = named_group(spec);
      const auto n = static_cast<Element>(g.order());
      for (Element x = 0; x < n; ++x) {
        REQUIRE(g.multiply(x, 0) == x);
        REQUIRE(g.multiply(0, x) == x);
        REQUIRE(g.multiply(x, g.inverse(x)) == 0);
      }
      std::uniform_int_distribution<Element> pick(0, n - 1);
      for (int t = 0; t < 10000; ++t) {
        const Element a = pick(rng), b = pick(rng), c = pick(rng);
        REQUIRE(g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c)));
      }
      CHECK(to_members(subgroup_closure(g, g.generators())).size() == g.order());
    }
  }

  TEST_CASE("conjugacy classes") {
    auto sizes = [](const ClassPartition& p) {
      std::vector<std::size_t> s;
      for (const auto& c : p.classes) s.push_back(c.size);
      return s;
    };
    CHECK(sizes(conjugacy_classes(named_group("symmetric(3)"))) == std::vector<std::size_t>{1, 3, 2});
    CHECK(sizes(conjugacy_classes(named_group("cyclic(4)"))) == std::vector<std::size_t>{1, 1, 1, 1});
    CHECK(sizes(conjugacy_classes(named_group("dicyclic(8)"))) == std::vector<std::size_t>{1, 1, 2, 2, 2});

    for (const char* spec : kSample) {
      CAPTURE(spec);
      const Group g = named_group(spec);
      const auto cls = conjugacy_classes(g);
      auto oracle = brute_classes(g);
      std::set<std::set<Element>> want(oracle.begin(), oracle.end());
      std::set<std::set<Element>> got;
      std::size_t total = 0;
      for (std::size_t j = 0; j < cls.size(); ++j) {
        const auto& c = cls[j];
        got.insert(std::set<Element>(c.members.begin(), c.members.end()));
        total += c.size;
        CHECK(g.order() % c.size == 0);
        CHECK(c.representative == c.members.front());
        CHECK(cls[c.inverse_class].inverse_class == j);
        CHECK(cls.class_of[g.inverse(c.representative)] == c.inverse_class);
        CHECK(g.element_order(c.representative) == c.rep_order);
        if (j >= 2) {
          const auto& p = cls[j - 1];
          const bool ordered = std::tuple(p.rep_order, p.size, p.representative) <
                               std::tuple(c.rep_order, c.size, c.representative);
          CHECK(ordered);
        }
      }
      CHECK(cls[0].members == std::vector<Element>{0});
      CHECK(total == g.order());
      CHECK(got == want);
    }
  }

  TEST_CASE("power maps") {
    for (const char* spec : kSample) {
      CAPTURE(spec);
      const Group g = named_group(spec);
      const auto cls = conjugacy_classes(g);
      const auto pm = power_maps(g, cls);
      CHECK(pm.exponent() == exponent(g));
      for (std::size_t j = 0; j < cls.size(); ++j) {
        CHECK(pm(0, j) == 0);
        CHECK(pm(1, j) == j);
        // Independent of the representative.
        for (std::size_t k = 0; k < pm.exponent(); ++k)
          for (Element m : cls[j].members) REQUIRE(cls.class_of[g.power(m, k)] == pm(k, j));
      }
    }
    const Group s3 = named_group("symmetric(3)");
    const auto cls = conjugacy_classes(s3);
    CHECK(power_maps(s3, cls)(2, 1) == 0);
  }

  TEST_CASE("center, derived subgroup, rank") {
    CHECK(center(named_group("dicyclic(8)")).order() == 2);
    CHECK(abelian_rank(named_group("abelian(2,4,8)")) == 3);
    CHECK(abelian_rank(named_group("abelian(6,10)")) == 2);
    CHECK(abelian_rank(named_group("cyclic(12)")) == 1);
    CHECK(abelian_rank(named_group("cyclic(1)")) == 0);
    CHECK_THROWS_AS(abelian_rank(named_group("symmetric(3)")), DomainError);
    CHECK(derived_subgroup(named_group("symmetric(4)")).order() == 12);
    CHECK(derived_subgroup(named_group("alternating(5)")).order() == 60);
    CHECK(is_cyclic(named_group("abelian(3,4)")));
    CHECK_FALSE(is_cyclic(named_group("abelian(2,2)")));

    for (const char* spec : kSample) {
      CAPTURE(spec);
      const Group g = named_group(spec);
      const auto cls = conjugacy_classes(g);
      const auto z = center(g);
      CHECK(z.order() == brute_center_order(g));
      const auto d = derived_subgroup(g);
      for (const auto& sub : {z, d}) {
        std::set<Element> m(sub.members.begin(), sub.members.end());
        for (Element x : sub.members)
          for (Element y : cls[cls.class_of[x]].members) REQUIRE(m.count(y) == 1);
      }
      CHECK(is_normal(g, d.members));
      // Oracle: closure of all commutators.
      std::vector<Element> comms;
      for (Element a = 0; a < g.order(); a += 1 + g.order() / 64)
        for (Element b = 0; b < g.order(); ++b) comms.push_back(g.commutator(a, b));
      const auto partial = to_members(subgroup_closure(g, comms));
      CHECK(std::includes(d.members.begin(), d.members.end(), partial.begin(), partial.end()));
    }
  }

  TEST_CASE("product structure") {
    const Group a = named_group("alternating(4)");
    const Group b = named_group("dicyclic(8)");
    const Group p = named_group("product(alternating(4),dicyclic(8))");
    CHECK(p.order() == a.order() * b.order());
    const auto zp = center(p);
    const auto za = center(a), zb = center(b);
    std::vector<Element> want;
    for (Element x : za.members)
      for (Element y : zb.members) want.push_back(static_cast<Element>(x * b.order() + y));
    std::sort(want.begin(), want.end());
    CHECK(zp.members == want);
  }

  TEST_CASE("frobenius_affine has trivial center") {
    for (const char* spec : {"frobenius_affine(5,1)", "frobenius_affine(7,2)", "frobenius_affine(7,3)",
                             "frobenius_affine(9,1)", "frobenius_affine(8,1)", "frobenius_affine(13,4)"}) {
      CAPTURE(spec);
      CHECK(center(named_group(spec)).order() == 1);
    }
    CHECK(named_group("frobenius_affine(13,4)").order() == 39);
  }

  TEST_CASE("minimal normal subgroups") {
    auto orders = [](const std::vector<NormalSubgroup>& v) {
      std::vector<std::size_t> o;
      for (const auto& n : v) o.push_back(n.order());
      return o;
    };
    CHECK(orders(minimal_normal_subgroups(named_group("abelian(2,2)"))) == std::vector<std::size_t>{2, 2, 2});
    CHECK(orders(minimal_normal_subgroups(named_group("dicyclic(8)"))) == std::vector<std::size_t>{2});
    CHECK(orders(minimal_normal_subgroups(named_group("alternating(5)"))) == std::vector<std::size_t>{60});
    CHECK(orders(minimal_normal_subgroups(named_group("cyclic(6)"))) == std::vector<std::size_t>{2, 3});
    CHECK_THROWS_AS(minimal_normal_subgroups(named_group("cyclic(1)")), DomainError);

    // Exhaustive oracle for |G| <= 200: a normal closure N is minimal iff no
    // nontrivial element of N has a strictly smaller normal closure.
    for (const char* spec : kSample) {
      const Group g = named_group(spec);
      if (g.order() > 200) continue;
      CAPTURE(spec);
      const auto mins = minimal_normal_subgroups(g);
      for (const auto& n : mins) {
        CHECK(is_normal(g, n.members));
        CHECK(to_members(subgroup_closure(g, n.members)) == n.members);
        for (Element x : n.members) {
          if (x == 0) continue;
          const Element one[] = {x};
          CHECK(to_members(normal_closure(g, one)) == n.members);
        }
      }
      // Every nontrivial normal closure contains one of them.
      for (Element x = 1; x < g.order(); ++x) {
        const Element one[] = {x};
        const auto n = to_members(normal_closure(g, one));
        bool contains = false;
        for (const auto& m : mins)
          contains |= std::includes(n.begin(), n.end(), m.members.begin(), m.members.end());
        CHECK(contains);
      }
    }
  }

  TEST_CASE("group spec grammar") {
    CHECK(canonical_spec("  product( alternating(4) , dihedral(10) ) ") == "product(alternating(4),dihedral(10))");
    CHECK(canonical_spec("quaternion(8)") == "dicyclic(8)");
    CHECK(canonical_spec("perm(3:\"(2,1)\")") == "perm(3:\"(1,2)\")");
    const auto s = parse_group_spec("extraspecial(2,32,plus)");
    CHECK(s.family == "extraspecial");
    CHECK(s.integer(1) == 32);
    CHECK(s.word(2) == "plus");
    CHECK_THROWS_AS(parse_group_spec("cyclic(3))"), ParseError);
    CHECK_THROWS_AS(parse_group_spec("(3)"), ParseError);
  }
}
