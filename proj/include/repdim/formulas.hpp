#ifndef REPDIM_FORMULAS_HPP
#define REPDIM_FORMULAS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace repdim {

struct Prediction {
  unsigned delta = 0;
  std::optional<unsigned> delta_irr;  // nullopt: no faithful irreducible
  std::string source;
};

namespace family {

struct Extraspecial {
  unsigned p;
  unsigned r;  // order p^(2r+1)
};

/// Nonabelian p-group of order p^n.
struct PGroup {
  unsigned p;
  unsigned n;
  bool center_cyclic;
  std::uint64_t center_order;
  std::uint64_t derived_order;
};

struct Abelian {
  unsigned rank;
  bool cyclic;
};

struct Symmetric {
  unsigned n;
};

struct Alternating {
  unsigned n;
};

/// F_q+ semidirect a cyclic subgroup of F_q^x of order (q-1)/d.
struct AffineFrobenius {
  unsigned q;
  unsigned d;
  bool kernel_cyclic;
  unsigned kernel_rank;
};

struct Frobenius72 {};

struct Product;

}  // namespace family

using FamilyDescriptor =
    std::variant<family::Extraspecial, family::PGroup, family::Abelian, family::Symmetric, family::Alternating,
                 family::AffineFrobenius, family::Frobenius72, family::Product>;

namespace family {

/// Direct product of two nonabelian groups; the flags are facts about the
/// factors supplied by the caller.
struct Product {
  std::shared_ptr<const FamilyDescriptor> first;
  std::shared_ptr<const FamilyDescriptor> second;
  bool coprime_orders;
  bool both_nonabelian;
  bool both_simple;
  bool both_p_groups_cyclic_center;
  bool both_monolithic;
  bool both_unique_nonlinear;
};

}  // namespace family

/// Every clause whose hypotheses hold, most specific first.
std::vector<Prediction> predict_all(const FamilyDescriptor& descriptor);

/// First applicable clause, or nullopt when none applies.
std::optional<Prediction> predict(const FamilyDescriptor& descriptor);

}  // namespace repdim

#endif  // REPDIM_FORMULAS_HPP
