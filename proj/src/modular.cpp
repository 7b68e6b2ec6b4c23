#include "repdim/modular.hpp"

#include "repdim/error.hpp"
#include "repdim/group.hpp"

namespace repdim {

std::uint64_t PrimeContext::inv(std::uint64_t a) const {
  a %= p;
  if (a == 0) throw VerificationError("division by zero in F_p");
  return inverses[a];
}

std::uint64_t PrimeContext::pow(std::uint64_t a, std::uint64_t k) const {
  std::uint64_t result = 1 % p;
  a %= p;
  while (k > 0) {
    if (k & 1u) result = result * a % p;
    a = a * a % p;
    k >>= 1u;
  }
  return result;
}

std::uint64_t PrimeContext::reduce(std::int64_t a) const {
  std::int64_t r = a % static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t p) {
  PrimeContext tmp;
  tmp.p = p;
  std::uint64_t ord = p - 1;
  for (auto q : prime_factors(p - 1))
    while (ord % q == 0 && tmp.pow(a, ord / q) == 1) ord /= q;
  return ord;
}

PrimeContext choose_prime(std::size_t order, unsigned e) {
  if (e < 1) throw DomainError("exponent must be positive");
  std::uint64_t p = e + 1;
  // p > 2 sqrt(order) <=> p^2 > 4 order, checked in integers.
  while (!(p * p > 4 * static_cast<std::uint64_t>(order) && is_prime(p))) p += e;

  PrimeContext ctx;
  ctx.p = p;
  ctx.e = e;
  ctx.inverses.assign(p, 0);
  if (p > 1) ctx.inverses[1] = 1;
  for (std::uint64_t a = 2; a < p; ++a)
    ctx.inverses[a] = static_cast<std::uint32_t>((p - (p / a) * ctx.inverses[p % a] % p) % p);

  for (std::uint64_t g = 2; g < p + 2; ++g) {
    std::uint64_t z = ctx.pow(g % p, (p - 1) / e);
    if (multiplicative_order(z, p) == e) {
      ctx.z = z;
      return ctx;
    }
  }
  throw VerificationError("no primitive root of unity of order " + std::to_string(e) + " mod " + std::to_string(p));
}

std::vector<ModVector> row_echelon(std::vector<ModVector> rows, const PrimeContext& ctx,
                                   std::vector<std::size_t>* pivots) {
  if (pivots) pivots->clear();
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const std::uint64_t scale = ctx.inv(rows[rank][c]);
    for (auto& x : rows[rank]) x = ctx.mul(x, scale);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const std::uint64_t f = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k)
        if (rows[rank][k] != 0) rows[r][k] = ctx.sub(rows[r][k], ctx.mul(f, rows[rank][k]));
    }
    if (pivots) pivots->push_back(c);
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

std::vector<ModVector> nullspace(ModMatrix a, const PrimeContext& ctx) {
  std::vector<ModVector> rows(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) rows[r].assign(a.row(r).begin(), a.row(r).end());
  std::vector<std::size_t> pivots;
  rows = row_echelon(std::move(rows), ctx, &pivots);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<ModVector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    ModVector v(a.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < rows.size(); ++r) v[pivots[r]] = (ctx.p - rows[r][free]) % ctx.p;
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::uint64_t> characteristic_polynomial(ModMatrix h, const PrimeContext& ctx) {
  const std::size_t n = h.rows();
  if (n != h.cols()) throw DomainError("characteristic polynomial of a non-square matrix");
  // Similarity transforms to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t pivot = j + 1;
    while (pivot < n && h(pivot, j) == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(pivot, c), h(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, pivot), h(r, j + 1));
    }
    const std::uint64_t inv = ctx.inv(h(j + 1, j));
    for (std::size_t k = j + 2; k < n; ++k) {
      if (h(k, j) == 0) continue;
      const std::uint64_t u = ctx.mul(h(k, j), inv);
      for (std::size_t c = 0; c < n; ++c) h(k, c) = ctx.sub(h(k, c), ctx.mul(u, h(j + 1, c)));
      for (std::size_t r = 0; r < n; ++r) h(r, j + 1) = ctx.add(h(r, j + 1), ctx.mul(u, h(r, k)));
    }
  }
  // p_m = (x - h[m-1][m-1]) p_{m-1} - sum_{i<m} h[i-1][m-1] (prod_{k=i}^{m-1} h[k][k-1]) p_{i-1}
  std::vector<std::vector<std::uint64_t>> polys(n + 1);
  polys[0] = {1 % ctx.p};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<std::uint64_t> next(m + 1, 0);
    const auto& prev = polys[m - 1];
    for (std::size_t i = 0; i < prev.size(); ++i) {
      next[i + 1] = ctx.add(next[i + 1], prev[i]);
      next[i] = ctx.sub(next[i], ctx.mul(h(m - 1, m - 1), prev[i]));
    }
    std::uint64_t chain = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      chain = ctx.mul(chain, h(i, i - 1));
      if (chain == 0) break;
      const std::uint64_t coef = ctx.mul(h(i - 1, m - 1), chain);
      if (coef != 0)
        for (std::size_t t = 0; t < polys[i - 1].size(); ++t)
          next[t] = ctx.sub(next[t], ctx.mul(coef, polys[i - 1][t]));
    }
    polys[m] = std::move(next);
  }
  return polys[n];
}

std::vector<std::uint64_t> roots_by_scan(std::span<const std::uint64_t> poly, const PrimeContext& ctx) {
  std::vector<std::uint64_t> roots;
  for (std::uint64_t x = 0; x < ctx.p; ++x) {
    std::uint64_t acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) acc = (acc * x + poly[i]) % ctx.p;
    if (acc == 0) {
      roots.push_back(x);
      if (roots.size() + 1 >= poly.size()) break;
    }
  }
  return roots;
}

}  // namespace repdim
