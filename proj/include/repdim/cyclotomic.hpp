#ifndef REPDIM_CYCLOTOMIC_HPP
#define REPDIM_CYCLOTOMIC_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace repdim {

/// Coefficients of the e-th cyclotomic polynomial, constant term first.
std::vector<std::int64_t> cyclotomic_polynomial(unsigned e);

unsigned euler_phi(unsigned e);

/// Reduction data for Z[x]/(Phi_e), shared by every value of conductor e.
/// Instances live for the whole process; obtain them with `get`.
class CyclotomicField {
 public:
  static const CyclotomicField& get(unsigned e);

  unsigned conductor() const { return e_; }
  unsigned degree() const { return phi_; }
  const std::vector<std::int64_t>& polynomial() const { return poly_; }
  /// x^j mod Phi_e for 0 <= j < e.
  const std::vector<std::int64_t>& residue_of_power(unsigned j) const { return residues_[j]; }

  explicit CyclotomicField(unsigned e);

 private:
  unsigned e_;
  unsigned phi_;
  std::vector<std::int64_t> poly_;
  std::vector<std::vector<std::int64_t>> residues_;
};

/// Element of Z[zeta_e] in the basis 1, zeta, ..., zeta^(phi(e)-1).
/// Equality is exact: same conductor and same coefficient vector.
/// Arithmetic throws OverflowError instead of wrapping, and DomainError
/// when conductors differ.
class Cyclo {
 public:
  Cyclo() : Cyclo(1, 0) {}
  Cyclo(unsigned e, std::int64_t n);

  static Cyclo root_power(unsigned e, std::int64_t k);
  /// sum_k multiplicities[k] * zeta_e^k, k in [0, e).
  static Cyclo from_root_multiplicities(unsigned e, std::span<const std::int64_t> multiplicities);
  /// Builds from canonical coefficients; throws DomainError on wrong length.
  static Cyclo from_coefficients(unsigned e, std::vector<std::int64_t> coeffs);

  unsigned conductor() const { return field_->conductor(); }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  bool is_integer() const;
  std::optional<std::int64_t> integer_value() const;
  bool is_zero() const;

  Cyclo conj() const;
  std::complex<double> to_complex() const;
  /// Human-readable form such as "-1-ζ3" or "2ζ12^5".
  std::string to_string() const;

  Cyclo& operator+=(const Cyclo& rhs);
  Cyclo& operator-=(const Cyclo& rhs);
  Cyclo& operator*=(const Cyclo& rhs);
  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
  Cyclo operator-() const;
  Cyclo scaled(std::int64_t k) const;

  friend bool operator==(const Cyclo& a, const Cyclo& b) {
    return a.conductor() == b.conductor() && a.coeffs_ == b.coeffs_;
  }

 private:
  Cyclo(const CyclotomicField* field, std::vector<std::int64_t> coeffs)
      : field_(field), coeffs_(std::move(coeffs)) {}
  void check_conductor(const Cyclo& other) const;
  static std::vector<std::int64_t> reduce(const CyclotomicField& field, std::span<const std::int64_t> poly);

  const CyclotomicField* field_;
  std::vector<std::int64_t> coeffs_;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace repdim

#endif  // REPDIM_CYCLOTOMIC_HPP
