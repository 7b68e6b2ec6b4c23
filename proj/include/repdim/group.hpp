#ifndef REPDIM_GROUP_HPP
#define REPDIM_GROUP_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "repdim/permutation.hpp"

namespace repdim {

using Element = std::uint32_t;

inline constexpr std::size_t kDefaultOrderBound = 10000;

struct BuildOptions {
  std::size_t order_bound = kDefaultOrderBound;
};

/// Multiplication oracle behind a Group. Elements are indices
/// 0..order()-1 and index 0 must be the identity.
class GroupBackend {
 public:
  virtual ~GroupBackend() = default;
  virtual std::size_t order() const = 0;
  virtual Element multiply(Element a, Element b) const = 0;
  virtual Element inverse(Element a) const = 0;
  virtual std::vector<Element> generators() const = 0;
  /// Backend name for diagnostics ("permutation", "product", ...).
  virtual std::string kind() const = 0;
  virtual std::string element_label(Element a) const { return "g" + std::to_string(a); }
};

/// A finite group with indexed elements. Immutable and cheap to copy;
/// copies share the backend.
class Group {
 public:
  Group(std::shared_ptr<const GroupBackend> backend, std::string spec);

  std::size_t order() const { return order_; }
  Element identity() const { return 0; }
  Element multiply(Element a, Element b) const { return backend_->multiply(a, b); }
  Element inverse(Element a) const { return inverses_[a]; }
  Element power(Element a, std::uint64_t k) const;
  Element conjugate(Element a, Element by) const {  // by^-1 a by
    return multiply(multiply(inverse(by), a), by);
  }
  Element commutator(Element a, Element b) const {  // a^-1 b^-1 a b
    return multiply(multiply(inverse(a), inverse(b)), multiply(a, b));
  }
  unsigned element_order(Element a) const;

  std::span<const Element> generators() const { return generators_; }
  const std::string& spec() const { return spec_; }
  const GroupBackend& backend() const { return *backend_; }
  std::string element_label(Element a) const { return backend_->element_label(a); }

 private:
  std::shared_ptr<const GroupBackend> backend_;
  std::string spec_;
  std::size_t order_;
  std::vector<Element> generators_;
  std::vector<Element> inverses_;
  std::vector<std::uint64_t> order_primes_;
};

/// Closure of permutation generators. The spec string records the
/// generators in canonical cycle notation. Throws BoundError when the
/// closure exceeds `options.order_bound`.
Group group_from_generators(std::span<const Permutation> gens,
                            const BuildOptions& options = {});

/// Same closure, with a caller-supplied spec string (named families that
/// are realised as permutation groups).
Group permutation_group(std::span<const Permutation> gens, std::string spec,
                        const BuildOptions& options = {});

/// Direct product with componentwise multiplication; index a*|B| + b.
Group direct_product(const Group& a, const Group& b, const BuildOptions& options = {});

std::vector<std::uint64_t> prime_factors(std::uint64_t n);
bool is_prime(std::uint64_t n);

}  // namespace repdim

#endif  // REPDIM_GROUP_HPP
