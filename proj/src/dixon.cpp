#include "repdim/dixon.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <optional>

#include "repdim/error.hpp"

namespace repdim {

ClassMatrix class_matrix(const Group& group, const ClassPartition& classes, std::size_t i) {
  const std::size_t k = classes.size();
  ClassMatrix m{i, std::vector<std::vector<std::uint64_t>>(k, std::vector<std::uint64_t>(k, 0))};
  for (std::size_t l = 0; l < k; ++l) {
    const Element z = classes[l].representative;
    for (Element x : classes[i].members) {
      const Element y = group.multiply(group.inverse(x), z);
      ++m.entries[classes.class_of[y]][l];
    }
  }
  return m;
}

ModMatrix reduce_mod(const ClassMatrix& m, const PrimeContext& ctx) {
  const std::size_t k = m.entries.size();
  ModMatrix out(k, k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t l = 0; l < k; ++l) out(j, l) = m.entries[j][l] % ctx.p;
  return out;
}

namespace {

struct Subspace {
  std::vector<ModVector> basis;  // reduced row echelon
  std::vector<std::size_t> pivots;
  std::size_t next_matrix;
};

Subspace make_subspace(std::vector<ModVector> vectors, const PrimeContext& ctx, std::size_t next) {
  Subspace s;
  s.basis = row_echelon(std::move(vectors), ctx, &s.pivots);
  s.next_matrix = next;
  return s;
}

}  // namespace

std::vector<ModVector> common_eigenvectors(std::size_t k,
                                           const std::function<const ModMatrix&(std::size_t)>& matrix,
                                           const PrimeContext& ctx) {
  std::vector<ModVector> result;
  std::deque<Subspace> work;
  {
    std::vector<ModVector> full(k, ModVector(k, 0));
    for (std::size_t i = 0; i < k; ++i) full[i][i] = 1;
    // The identity class matrix acts as the identity; start at class 1.
    work.push_back(make_subspace(std::move(full), ctx, 1));
  }

  while (!work.empty()) {
    Subspace space = std::move(work.front());
    work.pop_front();
    const std::size_t m = space.basis.size();
    if (m == 1) {
      ModVector v = space.basis[0];
      if (v[0] == 0) throw VerificationError("eigenvector vanishes on the identity class");
      const std::uint64_t scale = ctx.inv(v[0]);
      for (auto& x : v) x = ctx.mul(x, scale);
      result.push_back(std::move(v));
      continue;
    }
    bool split = false;
    for (std::size_t i = space.next_matrix; i < k && !split; ++i) {
      const ModMatrix& cm = matrix(i);
      // Restriction to the space: column r holds the coordinates of M b_r.
      ModMatrix restricted(m, m);
      for (std::size_t r = 0; r < m; ++r) {
        const auto& b = space.basis[r];
        for (std::size_t s = 0; s < m; ++s) {
          const std::size_t row = space.pivots[s];
          std::uint64_t acc = 0;
          for (std::size_t l = 0; l < k; ++l)
            if (b[l] != 0 && cm(row, l) != 0) acc = (acc + cm(row, l) * b[l]) % ctx.p;
          restricted(s, r) = acc;
        }
      }
      bool scalar = true;
      for (std::size_t a = 0; a < m && scalar; ++a)
        for (std::size_t b = 0; b < m && scalar; ++b)
          if (restricted(a, b) != (a == b ? restricted(0, 0) : 0)) scalar = false;
      if (scalar) continue;

      const auto roots = roots_by_scan(characteristic_polynomial(restricted, ctx), ctx);
      std::vector<Subspace> parts;
      std::size_t total = 0;
      for (auto lambda : roots) {
        ModMatrix shifted = restricted;
        for (std::size_t a = 0; a < m; ++a) shifted(a, a) = ctx.sub(shifted(a, a), lambda);
        auto kernel = nullspace(std::move(shifted), ctx);
        std::vector<ModVector> vectors;
        for (const auto& c : kernel) {
          ModVector v(k, 0);
          for (std::size_t r = 0; r < m; ++r)
            if (c[r] != 0)
              for (std::size_t l = 0; l < k; ++l) v[l] = (v[l] + c[r] * space.basis[r][l]) % ctx.p;
          vectors.push_back(std::move(v));
        }
        total += vectors.size();
        parts.push_back(make_subspace(std::move(vectors), ctx, i + 1));
      }
      if (total != m)
        throw VerificationError("class matrix " + std::to_string(i) + " is not diagonalizable over F_" +
                                std::to_string(ctx.p));
      for (auto& part : parts) work.push_back(std::move(part));
      split = true;
    }
    if (!split)
      throw VerificationError("eigenspace splitting stalled at dimension " + std::to_string(m));
  }
  return result;
}

std::vector<ModVector> common_eigenvectors(std::span<const ModMatrix> matrices, const PrimeContext& ctx) {
  const std::size_t k = matrices.size();
  return common_eigenvectors(k, [&](std::size_t i) -> const ModMatrix& { return matrices[i]; }, ctx);
}

std::vector<ClassInfo> class_info(const ClassPartition& classes, const PowerMaps& powers) {
  std::vector<ClassInfo> info(classes.size());
  for (std::size_t j = 0; j < classes.size(); ++j) {
    info[j].size = classes[j].size;
    info[j].rep_order = classes[j].rep_order;
    info[j].inverse = classes[j].inverse_class;
    info[j].powers.resize(powers.exponent());
    for (std::size_t s = 0; s < powers.exponent(); ++s) info[j].powers[s] = powers.table[s][j];
  }
  return info;
}

CharacterTable degrees_and_lift(std::span<const ModVector> eigenvectors, const PrimeContext& ctx,
                                std::size_t order, std::vector<ClassInfo> classes, std::string spec) {
  CharacterTable table;
  table.spec = std::move(spec);
  table.order = order;
  table.conductor = ctx.e;
  table.classes = std::move(classes);
  const std::size_t k = table.classes.size();
  const unsigned e = ctx.e;
  if (eigenvectors.size() != k) throw VerificationError("expected one eigenvector per class");

  std::vector<std::uint64_t> inv_size(k);
  for (std::size_t j = 0; j < k; ++j) inv_size[j] = ctx.inv(table.classes[j].size % ctx.p);

  for (const auto& omega : eigenvectors) {
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < k; ++j)
      s = ctx.add(s, ctx.mul(ctx.mul(omega[j], omega[table.classes[j].inverse]), inv_size[j]));
    const std::uint64_t target = ctx.mul(order % ctx.p, ctx.inv(s));
    std::optional<unsigned> degree;
    for (std::uint64_t d = 1; d * d <= order; ++d) {
      if (d * d % ctx.p == target) {
        if (degree) throw VerificationError("ambiguous degree recovery");
        degree = static_cast<unsigned>(d);
      }
    }
    if (!degree) throw VerificationError("no admissible degree for an eigenvector");

    Character chi;
    chi.degree = *degree;
    std::vector<std::uint64_t> value_mod(k);
    for (std::size_t j = 0; j < k; ++j) value_mod[j] = ctx.mul(ctx.mul(*degree, omega[j]), inv_size[j]);

    for (std::size_t j = 0; j < k; ++j) {
      const unsigned o = table.classes[j].rep_order;
      const unsigned step = e / o;
      const std::uint64_t w_inv = ctx.inv(ctx.pow(ctx.z, step));
      const std::uint64_t o_inv = ctx.inv(o % ctx.p);
      std::vector<std::int64_t> multiplicities(e, 0);
      std::int64_t total = 0;
      for (unsigned t = 0; t < o; ++t) {
        // m_t = o^-1 sum_s chi(g^s) w^(-t s), w = z^(e/o).
        const std::uint64_t base = ctx.pow(w_inv, t);
        std::uint64_t acc = 0, twist = 1;
        for (unsigned s2 = 0; s2 < o; ++s2) {
          acc = ctx.add(acc, ctx.mul(value_mod[table.classes[j].powers[s2]], twist));
          twist = ctx.mul(twist, base);
        }
        const auto mult = static_cast<std::int64_t>(ctx.mul(acc, o_inv));
        if (mult > static_cast<std::int64_t>(*degree))
          throw VerificationError("eigenvalue multiplicity exceeds the degree");
        multiplicities[t * step] = mult;
        total += mult;
      }
      if (total != static_cast<std::int64_t>(*degree))
        throw VerificationError("eigenvalue multiplicities do not sum to the degree");
      chi.values.push_back(Cyclo::from_root_multiplicities(e, multiplicities));
    }
    table.characters.push_back(std::move(chi));
  }
  sort_characters(table);
  verify_table(table);
  return table;
}

CharacterTable compute_character_table(const Group& group) {
  const auto classes = conjugacy_classes(group);
  if (classes.size() > kMaxTableClasses)
    throw BoundError(group.spec() + " has " + std::to_string(classes.size()) + " classes, above the table limit " +
                     std::to_string(kMaxTableClasses));
  const auto powers = power_maps(group, classes);
  const auto ctx = choose_prime(group.order(), static_cast<unsigned>(powers.exponent()));
  const std::size_t k = classes.size();
  std::map<std::size_t, ModMatrix> matrices;
  auto provider = [&](std::size_t i) -> const ModMatrix& {
    auto it = matrices.find(i);
    if (it == matrices.end()) it = matrices.emplace(i, reduce_mod(class_matrix(group, classes, i), ctx)).first;
    return it->second;
  };
  auto vectors = common_eigenvectors(k, provider, ctx);
  return degrees_and_lift(vectors, ctx, group.order(), class_info(classes, powers), group.spec());
}

std::shared_ptr<const CharacterTable> character_table(const Group& group) {
  static std::mutex m;
  static std::map<std::string, std::shared_ptr<const CharacterTable>> memo;
  {
    std::lock_guard lock(m);
    auto it = memo.find(group.spec());
    if (it != memo.end()) return it->second;
  }
  auto table = std::make_shared<const CharacterTable>(compute_character_table(group));
  std::lock_guard lock(m);
  return memo.emplace(group.spec(), std::move(table)).first->second;
}

}  // namespace repdim
