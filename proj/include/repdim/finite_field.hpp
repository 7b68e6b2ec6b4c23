#ifndef REPDIM_FINITE_FIELD_HPP
#define REPDIM_FINITE_FIELD_HPP

#include <cstdint>
#include <vector>

namespace repdim {

/// GF(q) for a prime power q = p^n. Elements are integers in [0, q) read
/// as base-p digit vectors of a polynomial in a primitive root; addition
/// is digitwise, multiplication goes through exp/log tables.
class FiniteField {
 public:
  explicit FiniteField(std::uint32_t q);

  std::uint32_t size() const { return q_; }
  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return n_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;

  /// w^k for the fixed primitive element w.
  std::uint32_t primitive_power(std::uint64_t k) const { return exp_[k % (q_ - 1)]; }
  std::uint32_t log(std::uint32_t a) const { return log_[a]; }

 private:
  std::uint32_t q_;
  std::uint32_t p_;
  unsigned n_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

/// Returns (p, n) with q = p^n, or (0, 0) when q is not a prime power.
std::pair<std::uint32_t, unsigned> prime_power(std::uint32_t q);

}  // namespace repdim

#endif  // REPDIM_FINITE_FIELD_HPP
