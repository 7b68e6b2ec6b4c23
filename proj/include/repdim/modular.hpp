#ifndef REPDIM_MODULAR_HPP
#define REPDIM_MODULAR_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace repdim {

/// Prime field F_p with a fixed primitive e-th root of unity z.
struct PrimeContext {
  std::uint64_t p = 0;
  std::uint64_t z = 0;
  unsigned e = 1;
  std::vector<std::uint32_t> inverses;  // inverses[a] = a^-1 mod p, a in [1, p)

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p; }
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t k) const;
  std::uint64_t reduce(std::int64_t a) const;
};

/// Smallest prime p with p = 1 (mod e) and p > 2*sqrt(order), together with
/// the first primitive e-th root of unity found as g^((p-1)/e), g = 2, 3, ...
PrimeContext choose_prime(std::size_t order, unsigned e);

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t p);

/// Dense row-major matrix over F_p.
class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<std::uint64_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const std::uint64_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint64_t> data_;
};

using ModVector = std::vector<std::uint64_t>;

/// Basis of {v : A v = 0}.
std::vector<ModVector> nullspace(ModMatrix a, const PrimeContext& ctx);

/// Rows of `vectors` brought to reduced row echelon form; zero rows dropped.
/// `pivots` receives the pivot column of each returned row.
std::vector<ModVector> row_echelon(std::vector<ModVector> vectors, const PrimeContext& ctx,
                                   std::vector<std::size_t>* pivots = nullptr);

/// det(x I - A), constant term first, via reduction to Hessenberg form.
std::vector<std::uint64_t> characteristic_polynomial(ModMatrix a, const PrimeContext& ctx);

/// Distinct roots in F_p by exhaustive evaluation, ascending.
std::vector<std::uint64_t> roots_by_scan(std::span<const std::uint64_t> poly, const PrimeContext& ctx);

}  // namespace repdim

#endif  // REPDIM_MODULAR_HPP
