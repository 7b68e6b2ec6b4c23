#include "repdim/corpus.hpp"

#include <fstream>
#include <optional>

#include "repdim/cache.hpp"
#include "repdim/dixon.hpp"
#include "repdim/faithful.hpp"
#include "repdim/group_spec.hpp"
#include "repdim/named_groups.hpp"
#include "repdim/structure.hpp"
#include "repdim/table_json.hpp"

namespace repdim {

namespace {

std::string irr_text(const std::optional<unsigned>& v) { return v ? std::to_string(*v) : "none"; }

struct Expect {
  std::string spec;
  std::optional<unsigned> delta;
  // Outer nullopt: not checked. Inner nullopt: must not exist.
  std::optional<std::optional<unsigned>> delta_irr;
};

void expect(CriterionOutcome& out, const Expect& e) {
  std::string line = e.spec + ":";
  bool ok = true;
  try {
    const Group g = named_group(e.spec);
    const auto table = character_table(g);
    const auto d = delta(g);
    const auto irr = delta_irr(*table);
    if (e.delta) {
      const bool hit = d.value == *e.delta;
      ok = ok && hit;
      line += " delta " + std::to_string(d.value) + (hit ? "" : " (expected " + std::to_string(*e.delta) + ")");
    }
    if (e.delta_irr) {
      const bool hit = irr == *e.delta_irr;
      ok = ok && hit;
      line += " delta_irr " + irr_text(irr) + (hit ? "" : " (expected " + irr_text(*e.delta_irr) + ")");
    }
  } catch (const std::exception& err) {
    ok = false;
    line += std::string(" error: ") + err.what();
  }
  out.passed = out.passed && ok;
  out.details.push_back((ok ? "ok   " : "FAIL ") + line);
}

CriterionOutcome expect_all(const std::vector<Expect>& list) {
  CriterionOutcome out;
  for (const auto& e : list) expect(out, e);
  return out;
}

void note(CriterionOutcome& out, bool ok, const std::string& text) {
  out.passed = out.passed && ok;
  out.details.push_back((ok ? "ok   " : "FAIL ") + text);
}

const std::vector<std::string> kProducts = {
    "product(dihedral(8),cyclic(2))",
    "product(alternating(4),dihedral(10))",
    "product(alternating(4),dihedral(20))",
    "product(alternating(4),symmetric(3))",
    "product(frobenius_affine(7,2),dicyclic(8))",
    "product(extraspecial(3,27,exp3),dicyclic(8))",
};

CriterionOutcome property_suite(const std::filesystem::path& scratch) {
  CriterionOutcome out;
  unsigned naive_checked = 0;
  bool naive_ok = true, orth_ok = true, squares_ok = true, bound_ok = true, witness_ok = true, json_ok = true;
  std::string first_failure;
  auto fail = [&](bool& flag, const std::string& what) {
    flag = false;
    if (first_failure.empty()) first_failure = what;
  };
  for (const auto& spec : corpus_specs()) {
    const Group g = named_group(spec);
    const auto table = character_table(g);
    try {
      verify_table(*table);
    } catch (const std::exception&) {
      fail(orth_ok, "orthogonality " + spec);
    }
    std::uint64_t squares = 0;
    for (const auto& chi : table->characters) squares += std::uint64_t{chi.degree} * chi.degree;
    if (squares != g.order()) fail(squares_ok, "sum of squares " + spec);

    const auto d = delta(g);
    const auto irr = delta_irr(*table);
    if (irr && d.value > *irr) fail(bound_ok, "delta <= delta_irr " + spec);
    if (table->class_count() <= 12) {
      ++naive_checked;
      if (delta_naive(*table) != d.value) fail(naive_ok, "naive = cover " + spec);
    }

    const auto kernels = kernel_classes(*table);
    auto faithful = [&](const std::vector<std::size_t>& rows) {
      KernelMask m(table->class_count());
      m.set();
      for (auto r : rows) m &= kernels[r];
      return m.count() == 1;
    };
    unsigned sum = 0;
    for (auto r : d.witness) sum += table->characters[r].degree;
    if (sum != d.value || !faithful(d.witness)) fail(witness_ok, "witness " + spec);
    if (d.witness.size() > 1)
      for (std::size_t drop = 0; drop < d.witness.size(); ++drop) {
        auto rest = d.witness;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(drop));
        if (faithful(rest)) fail(witness_ok, "witness minimality " + spec);
      }

    const std::string text = export_table(*table);
    try {
      const auto back = import_table(text);
      if (export_table(back) != text || delta(back).value != d.value || delta_irr(back) != irr)
        fail(json_ok, "JSON round trip " + spec);
    } catch (const std::exception& err) {
      fail(json_ok, "JSON import " + spec + ": " + err.what());
    }
  }
  note(out, naive_ok, "naive search = cover solver on " + std::to_string(naive_checked) + " groups with <= 12 classes");
  note(out, orth_ok, "exact row and column orthogonality on every table");
  note(out, squares_ok, "sum of squared degrees = |G|");
  note(out, bound_ok, "delta <= delta_irr whenever delta_irr exists");
  note(out, witness_ok, "witnesses faithful, of weight delta, irredundant");
  note(out, json_ok, "JSON export/import round trip is the identity");

  bool product_ok = true;
  for (const auto& spec : kProducts) {
    const auto gs = parse_group_spec(spec);
    const Group g = build_group(gs);
    const unsigned sum = delta(build_group(gs.nested(0))).value + delta(build_group(gs.nested(1))).value;
    if (delta(g).value > sum) fail(product_ok, "subadditivity " + spec);
  }
  note(out, product_ok, "delta(A x B) <= delta(A) + delta(B) over corpus products");

  // Two cold runs into fresh directories must write identical bytes.
  bool cache_ok = true;
  const std::string probe = "product(alternating(4),symmetric(3))";
  std::error_code ec;
  std::filesystem::remove_all(scratch, ec);
  std::string bytes[2];
  for (int run = 0; run < 2; ++run) {
    const auto dir = scratch / ("cold" + std::to_string(run));
    TableCache cache(dir, CacheMode::ReadWrite);
    const Group g = named_group(probe);
    auto fresh = compute_character_table(g);
    cache.store(g.spec(), export_table(fresh));
    std::ifstream in(cache.entry_path(g.spec()), std::ios::binary);
    bytes[run].assign(std::istreambuf_iterator<char>(in), {});
  }
  if (bytes[0].empty() || bytes[0] != bytes[1]) fail(cache_ok, "cache determinism");
  {
    TableCache cache(scratch / "cold0", CacheMode::ReadWrite);
    const Group g = named_group(probe);
    CacheStatus status{};
    const auto hit = cache.load(g.spec(), &status);
    if (status != CacheStatus::Hit || !hit || *hit != export_table(*character_table(g)))
      fail(cache_ok, "cache hit differs from a fresh computation");
    // Poison the entry: the loader must report corruption.
    std::string poisoned = bytes[0];
    const auto pos = poisoned.find("\\\"degree\\\":1");
    if (pos != std::string::npos) poisoned.replace(pos, 12, "\\\"degree\\\":2");
    std::ofstream(cache.entry_path(g.spec()), std::ios::binary | std::ios::trunc) << poisoned;
    cache.load(g.spec(), &status);
    if (status != CacheStatus::Corrupt) fail(cache_ok, "poisoned cache entry not detected");
  }
  std::filesystem::remove_all(scratch, ec);
  note(out, cache_ok, "cache determinism and integrity");
  if (!first_failure.empty()) out.details.push_back("first failure: " + first_failure);
  return out;
}

}  // namespace

const std::vector<std::string>& corpus_specs() {
  static const std::vector<std::string> specs = [] {
    std::vector<std::string> s;
    for (int n = 1; n <= 12; ++n) s.push_back("cyclic(" + std::to_string(n) + ")");
    for (const char* x :
         {"abelian(2,2)", "abelian(2,4,8)", "abelian(6,10)", "dihedral(6)", "dihedral(8)", "dihedral(10)",
          "dihedral(12)", "dihedral(20)", "dicyclic(8)", "symmetric(3)", "symmetric(4)", "alternating(4)",
          "alternating(5)", "alternating(6)", "alternating(7)", "symmetric(5)", "symmetric(6)",
          "extraspecial(3,27,exp3)", "extraspecial(3,27,exp9)", "extraspecial(2,32,plus)",
          "extraspecial(2,32,minus)", "frobenius_affine(5,1)", "frobenius_affine(7,2)", "frobenius_affine(9,1)",
          "frobenius72()", "gl(2,3)", "sl(2,5)"})
      s.push_back(x);
    s.insert(s.end(), kProducts.begin(), kProducts.end());
    return s;
  }();
  return specs;
}

bool matches_filter(const Criterion& c, const std::string& filter) {
  if (filter.empty()) return true;
  if (std::to_string(c.id) == filter) return true;
  if (c.title.find(filter) != std::string::npos) return true;
  for (const auto& t : c.tags)
    if (t.find(filter) != std::string::npos) return true;
  return false;
}

std::vector<Criterion> acceptance_criteria(const std::filesystem::path& scratch) {
  using O = std::optional<unsigned>;
  const O none = std::nullopt;
  std::vector<Criterion> list;
  list.push_back({1, "cyclic groups have delta = delta_irr = 1", {"cyclic", "abelian"}, [] {
                    std::vector<Expect> v;
                    for (int n = 1; n <= 12; ++n) v.push_back({"cyclic(" + std::to_string(n) + ")", 1, O(1)});
                    return expect_all(v);
                  }});
  list.push_back({2, "Klein four group: delta 2, no faithful irreducible", {"abelian", "klein"}, [none] {
                    return expect_all({{"abelian(2,2)", 2, none}});
                  }});
  list.push_back({3, "abelian groups: delta is the rank", {"abelian", "rank"}, [] {
                    return expect_all({{"abelian(2,4,8)", 3, {}}, {"abelian(6,10)", 2, {}}});
                  }});
  list.push_back({4, "dihedral and quaternion groups have delta 2", {"dihedral", "dicyclic", "quaternion"}, [] {
                    return expect_all({{"dihedral(6)", 2, {}},
                                       {"dihedral(8)", 2, {}},
                                       {"dihedral(10)", 2, {}},
                                       {"dihedral(12)", 2, {}},
                                       {"dicyclic(8)", 2, {}}});
                  }});
  list.push_back({5, "alternating groups A4..A7", {"alternating", "simple"}, [] {
                    return expect_all({{"alternating(4)", 3, {}},
                                       {"alternating(5)", 3, {}},
                                       {"alternating(6)", 5, {}},
                                       {"alternating(7)", 6, {}}});
                  }});
  list.push_back({6, "symmetric groups S5, S6: n-1", {"symmetric"}, [] {
                    return expect_all({{"symmetric(5)", 4, {}}, {"symmetric(6)", 5, {}}});
                  }});
  list.push_back({7, "extraspecial groups of order 27 and 32", {"extraspecial", "p-group", "isoclinic"}, [] {
                    auto out = expect_all({{"extraspecial(3,27,exp3)", 3, O(3)},
                                           {"extraspecial(3,27,exp9)", 3, O(3)},
                                           {"extraspecial(2,32,plus)", 4, O(4)},
                                           {"extraspecial(2,32,minus)", 4, O(4)}});
                    const auto a = delta(named_group("extraspecial(3,27,exp3)")).value;
                    const auto b = delta(named_group("extraspecial(3,27,exp9)")).value;
                    note(out, a == b, "isoclinic order-27 pair has equal delta");
                    return out;
                  }});
  list.push_back({8, "D8 x C2: order 16, noncyclic center, delta p+1", {"p-group", "product", "dihedral"}, [] {
                    return expect_all({{"product(dihedral(8),cyclic(2))", 3, {}}});
                  }});
  list.push_back({9, "A4 x D10 and A4 x S3: delta 5, delta_irr 6", {"product", "alternating", "dihedral"}, [] {
                    return expect_all({{"product(alternating(4),dihedral(10))", 5, O(6)},
                                       {"product(alternating(4),dihedral(20))", 5, {}},
                                       {"product(alternating(4),symmetric(3))", 5, O(6)}});
                  }});
  list.push_back({10, "affine Frobenius groups", {"frobenius", "affine"}, [] {
                    return expect_all({{"frobenius_affine(5,1)", 4, O(4)},
                                       {"frobenius_affine(7,2)", 3, O(3)},
                                       {"frobenius_affine(9,1)", 8, O(8)}});
                  }});
  list.push_back({11, "Frobenius group of order 72 with quaternion complement", {"frobenius"}, [] {
                    return expect_all({{"frobenius72()", 8, O(8)}});
                  }});
  list.push_back({12, "GL(2,3) and SL(2,5) have delta 2", {"linear", "gl", "sl"}, [] {
                    return expect_all({{"gl(2,3)", 2, {}}, {"sl(2,5)", 2, {}}});
                  }});
  list.push_back({13, "coprime product F21 x Q8: delta = delta_irr = 6", {"product", "coprime"}, [] {
                    return expect_all({{"product(frobenius_affine(7,2),dicyclic(8))", 6, O(6)}});
                  }});
  list.push_back({14, "nilpotent with cyclic center 3^{1+2} x Q8: delta = delta_irr = 6",
                  {"product", "nilpotent", "extraspecial"}, [] {
                    return expect_all({{"product(extraspecial(3,27,exp3),dicyclic(8))", 6, O(6)}});
                  }});
  list.push_back({15, "property suite", {"property"}, [scratch] { return property_suite(scratch); }});
  return list;
}

}  // namespace repdim
