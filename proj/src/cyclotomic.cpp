#include "repdim/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "repdim/error.hpp"

namespace repdim {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("cyclotomic coefficient overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("cyclotomic coefficient overflow");
  return out;
}

unsigned euler_phi(unsigned e) {
  unsigned result = e;
  unsigned n = e;
  for (unsigned q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      while (n % q == 0) n /= q;
      result -= result / q;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

std::map<unsigned, std::vector<std::int64_t>>& polynomial_cache() {
  static std::map<unsigned, std::vector<std::int64_t>> cache;
  return cache;
}
std::mutex& polynomial_mutex() {
  static std::mutex m;
  return m;
}

// Exact quotient of `num` by a monic `den`; throws if the remainder is nonzero.
std::vector<std::int64_t> divide_exact(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<std::int64_t> quotient(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    std::int64_t c = num[i];
    quotient[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] = checked_add(num[i - dn + j], -checked_mul(c, den[j]));
  }
  for (std::size_t i = 0; i < dn; ++i)
    if (num[i] != 0) throw VerificationError("cyclotomic division left a remainder");
  return quotient;
}

std::vector<std::int64_t> compute_polynomial(unsigned e) {
  std::vector<std::int64_t> num(e + 1, 0);
  num[0] = -1;
  num[e] = 1;
  for (unsigned d = 1; d < e; ++d)
    if (e % d == 0) num = divide_exact(std::move(num), cyclotomic_polynomial(d));
  return num;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(unsigned e) {
  if (e < 1) throw DomainError("cyclotomic polynomial index must be positive");
  {
    std::lock_guard lock(polynomial_mutex());
    auto it = polynomial_cache().find(e);
    if (it != polynomial_cache().end()) return it->second;
  }
  auto poly = compute_polynomial(e);
  std::lock_guard lock(polynomial_mutex());
  return polynomial_cache().emplace(e, std::move(poly)).first->second;
}

CyclotomicField::CyclotomicField(unsigned e) : e_(e), phi_(euler_phi(e)), poly_(cyclotomic_polynomial(e)) {
  residues_.reserve(e_);
  std::vector<std::int64_t> current(phi_, 0);
  current[0] = 1;
  for (unsigned j = 0; j < e_; ++j) {
    residues_.push_back(current);
    // current *= x, then x^phi -> -(poly_[0] + ... + poly_[phi-1] x^(phi-1)).
    std::int64_t top = current[phi_ - 1];
    for (unsigned i = phi_ - 1; i > 0; --i) current[i] = current[i - 1];
    current[0] = 0;
    if (top != 0)
      for (unsigned i = 0; i < phi_; ++i) current[i] = checked_add(current[i], -checked_mul(top, poly_[i]));
  }
}

const CyclotomicField& CyclotomicField::get(unsigned e) {
  if (e < 1) throw DomainError("conductor must be positive");
  static std::mutex m;
  static std::map<unsigned, std::unique_ptr<CyclotomicField>> fields;
  std::lock_guard lock(m);
  auto& slot = fields[e];
  if (!slot) slot = std::make_unique<CyclotomicField>(e);
  return *slot;
}

std::vector<std::int64_t> Cyclo::reduce(const CyclotomicField& field, std::span<const std::int64_t> poly) {
  const unsigned phi = field.degree();
  const unsigned e = field.conductor();
  std::vector<std::int64_t> out(phi, 0);
  for (std::size_t j = 0; j < poly.size(); ++j) {
    if (poly[j] == 0) continue;
    if (j < phi) {
      out[j] = checked_add(out[j], poly[j]);
      continue;
    }
    const auto& r = field.residue_of_power(static_cast<unsigned>(j % e));
    for (unsigned i = 0; i < phi; ++i)
      if (r[i] != 0) out[i] = checked_add(out[i], checked_mul(poly[j], r[i]));
  }
  return out;
}

Cyclo::Cyclo(unsigned e, std::int64_t n) : field_(&CyclotomicField::get(e)), coeffs_(field_->degree(), 0) {
  coeffs_[0] = n;
}

Cyclo Cyclo::root_power(unsigned e, std::int64_t k) {
  const auto& field = CyclotomicField::get(e);
  std::int64_t r = k % static_cast<std::int64_t>(e);
  if (r < 0) r += e;
  return Cyclo(&field, field.residue_of_power(static_cast<unsigned>(r)));
}

Cyclo Cyclo::from_root_multiplicities(unsigned e, std::span<const std::int64_t> multiplicities) {
  const auto& field = CyclotomicField::get(e);
  if (multiplicities.size() > e) throw DomainError("more multiplicities than roots of unity");
  return Cyclo(&field, reduce(field, multiplicities));
}

Cyclo Cyclo::from_coefficients(unsigned e, std::vector<std::int64_t> coeffs) {
  const auto& field = CyclotomicField::get(e);
  if (coeffs.size() != field.degree())
    throw DomainError("expected " + std::to_string(field.degree()) + " coefficients for conductor " +
                      std::to_string(e));
  return Cyclo(&field, std::move(coeffs));
}

bool Cyclo::is_integer() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

std::optional<std::int64_t> Cyclo::integer_value() const {
  if (!is_integer()) return std::nullopt;
  return coeffs_[0];
}

bool Cyclo::is_zero() const {
  for (auto c : coeffs_)
    if (c != 0) return false;
  return true;
}

void Cyclo::check_conductor(const Cyclo& other) const {
  if (conductor() != other.conductor())
    throw DomainError("conductor mismatch: " + std::to_string(conductor()) + " vs " +
                      std::to_string(other.conductor()));
}

Cyclo& Cyclo::operator+=(const Cyclo& rhs) {
  check_conductor(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], rhs.coeffs_[i]);
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& rhs) {
  check_conductor(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (rhs.coeffs_[i] == INT64_MIN) throw OverflowError("cyclotomic coefficient overflow");
    coeffs_[i] = checked_add(coeffs_[i], -rhs.coeffs_[i]);
  }
  return *this;
}

Cyclo& Cyclo::operator*=(const Cyclo& rhs) {
  check_conductor(rhs);
  const std::size_t n = coeffs_.size();
  std::vector<std::int64_t> product(2 * n - 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (rhs.coeffs_[j] != 0) product[i + j] = checked_add(product[i + j], checked_mul(coeffs_[i], rhs.coeffs_[j]));
  }
  coeffs_ = reduce(*field_, product);
  return *this;
}

Cyclo Cyclo::operator-() const { return scaled(-1); }

Cyclo Cyclo::scaled(std::int64_t k) const {
  Cyclo out = *this;
  for (auto& c : out.coeffs_) c = checked_mul(c, k);
  return out;
}

Cyclo Cyclo::conj() const {
  const unsigned e = conductor();
  std::vector<std::int64_t> by_power(e, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) by_power[(e - i) % e] = coeffs_[i];
  return Cyclo(field_, reduce(*field_, by_power));
}

std::complex<double> Cyclo::to_complex() const {
  std::complex<double> z = 0.0;
  const double step = 2.0 * std::numbers::pi / conductor();
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) z += static_cast<double>(coeffs_[i]) * std::polar(1.0, step * static_cast<double>(i));
  return z;
}

std::string Cyclo::to_string() const {
  std::string out;
  const std::string root = "ζ" + std::to_string(conductor());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    std::int64_t c = coeffs_[i];
    if (c == 0) continue;
    std::string mag = std::to_string(c < 0 ? -c : c);
    if (!out.empty() || c < 0) out += c < 0 ? "-" : "+";
    if (i == 0) {
      out += mag;
    } else {
      if (mag != "1") out += mag;
      out += root;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace repdim
