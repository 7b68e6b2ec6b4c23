#include <doctest.h>

#include <random>

#include "repdim/corpus.hpp"
#include "repdim/dixon.hpp"
#include "repdim/error.hpp"
#include "repdim/faithful.hpp"
#include "repdim/named_groups.hpp"
#include "repdim/structure.hpp"

using namespace repdim;

namespace {

std::shared_ptr<const CharacterTable> table_of(const char* spec) { return character_table(named_group(spec)); }

// Oracle for small cover instances: every subset of rows.
unsigned brute_cover(const CoverInstance& inst) {
  const std::uint64_t all = (std::uint64_t{1} << inst.target_count) - 1;
  unsigned best = ~0u;
  const std::size_t n = inst.covers.size();
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    std::uint64_t cov = 0;
    unsigned w = 0;
    for (std::size_t r = 0; r < n; ++r)
      if (s >> r & 1) {
        cov |= inst.covers[r];
        w += inst.weights[r];
      }
    if (cov == all) best = std::min(best, w);
  }
  return best;
}

// Kernel of a sum of rows as a set of group elements, from the values on
// each element (not from class masks).
std::size_t element_kernel_size(const Group& g, const CharacterTable& t, const std::vector<std::size_t>& rows) {
  const auto cls = conjugacy_classes(g);
  std::size_t n = 0;
  for (Element x = 0; x < g.order(); ++x) {
    bool in = true;
    for (auto r : rows) in = in && t.characters[r].values[cls.class_of[x]] == Cyclo(t.conductor, t.characters[r].degree);
    n += in;
  }
  return n;
}

}  // namespace

TEST_SUITE("faithful") {
  TEST_CASE("kernel_classes") {
    const auto q8 = table_of("dicyclic(8)");
    CHECK(kernel_classes(*q8, 0).count() == q8->class_count());
    CHECK(kernel_classes(*q8, 4).count() == 1);
    CHECK(kernel_classes(*q8, 4).test(0));
    const auto v4 = table_of("abelian(2,2)");
    for (std::size_t r = 1; r < 4; ++r) {
      const auto k = kernel_classes(*v4, r);
      CHECK(k.count() == 2);
      CHECK(k.test(0));
    }
  }

  TEST_CASE("delta_irr and cd") {
    CHECK(delta_irr(*table_of("product(alternating(4),dihedral(10))")) == 6u);
    CHECK_FALSE(delta_irr(*table_of("abelian(2,2)")).has_value());
    CHECK(delta_irr(*table_of("dicyclic(8)")) == 2u);
    CHECK(cd_set(*table_of("extraspecial(3,27,exp3)")) == std::set<unsigned>{1, 3});
    CHECK(cd_set(*table_of("symmetric(4)")) == std::set<unsigned>{1, 2, 3});
    CHECK_FALSE(has_faithful_irr(*table_of("abelian(2,2)")));
    CHECK(has_faithful_irr(*table_of("alternating(5)")));
  }

  TEST_CASE("build_cover") {
    {
      const Group g = named_group("abelian(2,2)");
      const auto t = character_table(g);
      const auto cls = conjugacy_classes(g);
      const auto inst = build_cover(*t, cls, minimal_normal_subgroups(g, cls));
      CHECK(inst.target_count == 3);
      CHECK(inst.covers[0] == 0);
      for (std::size_t r = 1; r < 4; ++r) CHECK(std::popcount(inst.covers[r]) == 2);
    }
    {
      const Group g = named_group("alternating(5)");
      const auto t = character_table(g);
      const auto inst = build_cover(*t, minimal_normal_masks(*t));
      CHECK(inst.target_count == 1);
      for (std::size_t r = 1; r < t->class_count(); ++r) CHECK(inst.covers[r] == 1);
    }
    {
      const Group g = named_group("cyclic(6)");
      const auto t = character_table(g);
      const auto cls = conjugacy_classes(g);
      const auto inst = build_cover(*t, cls, minimal_normal_subgroups(g, cls));
      CHECK(inst.target_count == 2);
      bool faithful_linear_covers_both = false;
      for (std::size_t r = 0; r < t->class_count(); ++r)
        if (kernel_classes(*t, r).count() == 1) faithful_linear_covers_both |= inst.covers[r] == 3;
      CHECK(faithful_linear_covers_both);
    }
  }

  TEST_CASE("solve_cover examples") {
    const auto v4 = table_of("abelian(2,2)");
    CHECK(solve_cover(build_cover(*v4, minimal_normal_masks(*v4))).value == 2);
    const auto a4s3 = table_of("product(alternating(4),symmetric(3))");
    CHECK(solve_cover(build_cover(*a4s3, minimal_normal_masks(*a4s3))).value == 5);
    CoverInstance single{1, {0, 1, 1, 1}, {1, 5, 3, 4}};
    const auto r = solve_cover(single);
    CHECK(r.value == 3);
    CHECK(r.witness == std::vector<std::size_t>{2});
    CHECK(solve_cover(CoverInstance{}).value == 0);
    CHECK_THROWS_AS(solve_cover(CoverInstance{2, {1, 1}, {1, 1}}), VerificationError);
  }

  TEST_CASE("solve_cover against brute force on random instances") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 400; ++trial) {
      CoverInstance inst;
      inst.target_count = 1 + rng() % 6;
      const std::size_t items = 1 + rng() % 10;
      for (std::size_t r = 0; r < items; ++r) {
        inst.covers.push_back(rng() & ((1u << inst.target_count) - 1));
        inst.weights.push_back(1 + rng() % 9);
      }
      inst.covers.push_back((1u << inst.target_count) - 1);
      inst.weights.push_back(50);
      const auto got = solve_cover(inst);
      REQUIRE(got.value == brute_cover(inst));
      unsigned w = 0;
      std::uint64_t cov = 0;
      for (auto r : got.witness) {
        w += inst.weights[r];
        cov |= inst.covers[r];
      }
      CHECK(w == got.value);
      CHECK(cov == (std::uint64_t{1} << inst.target_count) - 1);
      // Deterministic witness.
      CHECK(solve_cover(inst).witness == got.witness);
    }
  }

  TEST_CASE("delta examples") {
    for (int n = 1; n <= 12; ++n) {
      const auto d = delta(named_group("cyclic(" + std::to_string(n) + ")"));
      CHECK(d.value == 1);
      REQUIRE(d.witness.size() == 1);
    }
    CHECK(delta(named_group("product(alternating(4),dihedral(10))")).value == 5);
    CHECK(delta(named_group("symmetric(5)")).value == 4);
    const auto d = delta(named_group("product(alternating(4),dihedral(10))"));
    CHECK(d.irreducible_witness.has_value());
  }

  TEST_CASE("delta_naive") {
    CHECK(delta_naive(*table_of("abelian(2,2)")) == 2);
    CHECK(delta_naive(*table_of("symmetric(3)")) == 2);
    CHECK(delta_naive(*table_of("cyclic(12)")) == 1);
    CHECK(delta_naive(*table_of("cyclic(1)")) == 1);
    CHECK_THROWS_AS(delta_naive(*table_of("cyclic(17)")), DomainError);
  }

  TEST_CASE("group route and table route agree") {
    for (const auto& spec : corpus_specs()) {
      CAPTURE(spec);
      const Group g = named_group(spec);
      const auto t = character_table(g);
      const auto a = delta(g);
      const auto b = delta(*t);
      CHECK(a.value == b.value);
      CHECK(a.witness == b.witness);
      CHECK(a.irreducible_witness == b.irreducible_witness);
      CHECK(element_kernel_size(g, *t, a.witness) == 1);
      CHECK((a.value == 1) == is_cyclic(g));
      if (t->class_count() <= 12) CHECK(delta_naive(*t) == a.value);
    }
  }

  TEST_CASE("coprime nonabelian products: delta is the sum, delta_irr the product") {
    // The block-diagonal sum of faithful irreducibles of the two factors is
    // faithful, so delta(A x B) <= delta(A) + delta(B) < delta_irr(A) delta_irr(B).
    for (const auto& [prod, a, b] : {std::tuple{"product(frobenius_affine(7,2),dicyclic(8))", "frobenius_affine(7,2)",
                                                "dicyclic(8)"},
                                     std::tuple{"product(extraspecial(3,27,exp3),dicyclic(8))",
                                                "extraspecial(3,27,exp3)", "dicyclic(8)"}}) {
      CAPTURE(prod);
      const Group g = named_group(prod);
      const auto t = character_table(g);
      const auto d = delta(g);
      const unsigned da = delta(named_group(a)).value, db = delta(named_group(b)).value;
      CHECK(d.value == da + db);
      CHECK(d.value == 5);
      CHECK(delta_irr(*t) == *delta_irr(*table_of(a)) * *delta_irr(*table_of(b)));
      CHECK(element_kernel_size(g, *t, d.witness) == 1);
      // Each witness row is irreducible: <chi, chi> = 1 by a direct sum over elements.
      const auto cls = conjugacy_classes(g);
      for (auto r : d.witness) {
        Cyclo s(t->conductor, 0);
        for (Element x = 0; x < g.order(); ++x) {
          const auto& v = t->characters[r].values[cls.class_of[x]];
          s += v * v.conj();
        }
        CHECK(s == Cyclo(t->conductor, static_cast<std::int64_t>(g.order())));
      }
    }
  }

  TEST_CASE("minimal normal subgroups from the table") {
    for (const auto& spec : corpus_specs()) {
      const Group g = named_group(spec);
      if (g.order() == 1) continue;
      CAPTURE(spec);
      const auto t = character_table(g);
      const auto cls = conjugacy_classes(g);
      std::vector<KernelMask> from_group;
      for (const auto& n : minimal_normal_subgroups(g, cls)) {
        KernelMask m(t->class_count());
        for (Element x : n.members) m.set(cls.class_of[x]);
        from_group.push_back(m);
      }
      auto from_table = minimal_normal_masks(*t);
      std::sort(from_group.begin(), from_group.end());
      std::sort(from_table.begin(), from_table.end());
      CHECK(from_group == from_table);
    }
  }
}
