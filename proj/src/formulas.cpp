#include "repdim/formulas.hpp"

#include <cmath>

namespace repdim {

namespace {

unsigned ipow(unsigned base, unsigned exp) {
  unsigned r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

std::optional<unsigned> exact_sqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(n))));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  if (r * r != n) return std::nullopt;
  return static_cast<unsigned>(r);
}

void add(std::vector<Prediction>& out, unsigned delta, std::optional<unsigned> irr, const char* source) {
  out.push_back(Prediction{delta, irr, source});
}

struct Visitor {
  std::vector<Prediction>& out;

  void operator()(const family::Extraspecial& g) const {
    const unsigned v = ipow(g.p, g.r);
    add(out, v, v, "extraspecial p-group of order p^(2r+1): p^r");
  }

  void operator()(const family::PGroup& g) const {
    if (g.n == 3) add(out, g.p, g.p, "nonabelian group of order p^3: p");
    if (g.n == 4) {
      if (g.center_cyclic)
        add(out, g.p, g.p, "nonabelian group of order p^4, cyclic center: p");
      else
        add(out, g.p + 1, std::nullopt, "nonabelian group of order p^4, noncyclic center: p+1");
    }
    if (g.center_cyclic && g.derived_order == g.p) {
      std::uint64_t order = 1;
      for (unsigned i = 0; i < g.n; ++i) order *= g.p;
      if (auto root = exact_sqrt(order / g.center_order))
        add(out, *root, *root, "p-group with cyclic center and |G'| = p: sqrt[G:Z]");
    }
  }

  void operator()(const family::Abelian& g) const {
    const unsigned rank = g.rank == 0 ? 1 : g.rank;
    add(out, rank, g.cyclic ? std::optional<unsigned>(1) : std::nullopt, "abelian group: rank");
  }

  void operator()(const family::Symmetric& g) const {
    if (g.n >= 5) add(out, g.n - 1, g.n - 1, "symmetric group S_n, n >= 5: n-1");
  }

  void operator()(const family::Alternating& g) const {
    if (g.n >= 6) add(out, g.n - 1, g.n - 1, "alternating group A_n, n >= 6: n-1");
  }

  void operator()(const family::AffineFrobenius& g) const {
    if (g.q < 3 || g.d == 0 || (g.q - 1) % g.d != 0) return;
    const unsigned complement = (g.q - 1) / g.d;
    if (g.d == 1) {
      add(out, g.q - 1, g.q - 1, "Frobenius group q(q-1), abelian kernel, cyclic complement: q-1");
      return;
    }
    // Odd order q(q-1)/2 with exactly two nonlinear characters per degree.
    if (g.d == 2 && g.q % 2 == 1 && complement % 2 == 1 && complement > 1) {
      if (g.kernel_cyclic)
        add(out, complement, complement, "odd Frobenius group q(q-1)/2, cyclic kernel: (q-1)/2");
      else
        add(out, complement * g.kernel_rank, std::nullopt,
            "odd Frobenius group q(q-1)/2, noncyclic kernel: rank(K)(q-1)/2");
    }
  }

  void operator()(const family::Frobenius72&) const {
    add(out, 8, 8, "Frobenius group of order 72 with quaternion complement: 8");
  }

  void operator()(const family::Product& g) const {
    if (!g.first || !g.second || !g.coprime_orders || !g.both_nonabelian) return;
    if (!(g.both_simple || g.both_p_groups_cyclic_center || g.both_monolithic || g.both_unique_nonlinear)) return;
    const auto a = predict(*g.first);
    const auto b = predict(*g.second);
    if (!a || !b || !a->delta_irr || !b->delta_irr) return;
    const unsigned v = *a->delta_irr * *b->delta_irr;
    add(out, v, v, "direct product of coprime order: delta_irr(G1) delta_irr(G2)");
  }
};

}  // namespace

std::vector<Prediction> predict_all(const FamilyDescriptor& descriptor) {
  std::vector<Prediction> out;
  std::visit(Visitor{out}, descriptor);
  return out;
}

std::optional<Prediction> predict(const FamilyDescriptor& descriptor) {
  auto all = predict_all(descriptor);
  if (all.empty()) return std::nullopt;
  return all.front();
}

}  // namespace repdim
