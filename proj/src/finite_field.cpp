#include "repdim/finite_field.hpp"

#include "repdim/error.hpp"
#include "repdim/group.hpp"

namespace repdim {

std::pair<std::uint32_t, unsigned> prime_power(std::uint32_t q) {
  if (q < 2) return {0, 0};
  auto primes = prime_factors(q);
  if (primes.size() != 1) return {0, 0};
  unsigned n = 0;
  for (std::uint32_t r = q; r > 1; r /= static_cast<std::uint32_t>(primes[0])) ++n;
  return {static_cast<std::uint32_t>(primes[0]), n};
}

FiniteField::FiniteField(std::uint32_t q) : q_(q) {
  auto [p, n] = prime_power(q);
  if (p == 0) throw DomainError("field size " + std::to_string(q) + " is not a prime power");
  p_ = p;
  n_ = n;

  // Multiply a digit vector by x modulo a monic polynomial with low
  // coefficients `poly` (x^n = -sum poly[i] x^i).
  auto times_x = [&](std::vector<std::uint32_t> v, const std::vector<std::uint32_t>& poly) {
    std::uint32_t top = v[n - 1];
    for (unsigned i = n - 1; i > 0; --i) v[i] = v[i - 1];
    v[0] = 0;
    for (unsigned i = 0; i < n; ++i) v[i] = (v[i] + (p - poly[i]) % p * top) % p;
    return v;
  };
  auto encode = [&](const std::vector<std::uint32_t>& v) {
    std::uint32_t code = 0;
    for (unsigned i = n; i-- > 0;) code = code * p + v[i];
    return code;
  };

  // For n = 1 the search below looks for a primitive root g via poly = x - g.
  // In general it scans monic degree-n polynomials for one in which x has
  // multiplicative order q - 1 (a primitive polynomial).
  const std::uint64_t candidates = static_cast<std::uint64_t>(q);
  for (std::uint64_t code = 0; code < candidates; ++code) {
    std::vector<std::uint32_t> poly(n);
    std::uint64_t c = code;
    for (unsigned i = 0; i < n; ++i) {
      poly[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    if (poly[0] == 0) continue;
    std::vector<std::uint32_t> exp;
    std::vector<std::uint32_t> log(q, 0);
    std::vector<bool> seen(q, false);
    std::vector<std::uint32_t> v(n, 0);
    v[0] = 1;
    bool primitive = true;
    for (std::uint32_t k = 0; k < q - 1; ++k) {
      std::uint32_t e = encode(v);
      if (seen[e] || e == 0) {
        primitive = false;
        break;
      }
      seen[e] = true;
      exp.push_back(e);
      log[e] = k;
      v = times_x(v, poly);
    }
    if (primitive && encode(v) == 1) {
      exp_ = std::move(exp);
      log_ = std::move(log);
      return;
    }
  }
  throw VerificationError("no primitive polynomial found for GF(" + std::to_string(q) + ")");
}

std::uint32_t FiniteField::add(std::uint32_t a, std::uint32_t b) const {
  if (n_ == 1) return (a + b) % p_;
  std::uint32_t out = 0;
  std::uint32_t scale = 1;
  for (unsigned i = 0; i < n_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

std::uint32_t FiniteField::neg(std::uint32_t a) const {
  if (n_ == 1) return (p_ - a) % p_;
  std::uint32_t out = 0;
  std::uint32_t scale = 1;
  for (unsigned i = 0; i < n_; ++i) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

std::uint32_t FiniteField::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

std::uint32_t FiniteField::inv(std::uint32_t a) const {
  if (a == 0) throw DomainError("zero has no inverse");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

}  // namespace repdim
