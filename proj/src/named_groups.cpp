#include "repdim/named_groups.hpp"

#include <algorithm>
#include <memory>

#include "repdim/error.hpp"
#include "repdim/finite_field.hpp"
#include "repdim/structure.hpp"

namespace repdim {

namespace {

void check_bound(std::uint64_t order, const BuildOptions& options) {
  if (order > options.order_bound)
    throw BoundError("group order " + std::to_string(order) + " exceeds bound " +
                     std::to_string(options.order_bound));
}

std::vector<Element> drop_identity(std::vector<Element> gens) {
  std::erase(gens, Element{0});
  return gens;
}

// Mixed-radix vectors added componentwise.
class AbelianBackend final : public GroupBackend {
 public:
  explicit AbelianBackend(std::vector<std::uint64_t> moduli) : moduli_(std::move(moduli)) {
    order_ = 1;
    for (auto m : moduli_) order_ *= m;
  }
  std::size_t order() const override { return order_; }
  Element multiply(Element a, Element b) const override {
    Element out = 0;
    std::uint64_t scale = 1;
    for (auto m : moduli_) {
      out += static_cast<Element>(((a % m + b % m) % m) * scale);
      a = static_cast<Element>(a / m);
      b = static_cast<Element>(b / m);
      scale *= m;
    }
    return out;
  }
  Element inverse(Element a) const override {
    Element out = 0;
    std::uint64_t scale = 1;
    for (auto m : moduli_) {
      out += static_cast<Element>(((m - a % m) % m) * scale);
      a = static_cast<Element>(a / m);
      scale *= m;
    }
    return out;
  }
  std::vector<Element> generators() const override {
    std::vector<Element> gens;
    std::uint64_t scale = 1;
    for (auto m : moduli_) {
      if (m > 1) gens.push_back(static_cast<Element>(scale));
      scale *= m;
    }
    return gens;
  }
  std::string kind() const override { return "abelian"; }

 private:
  std::vector<std::uint64_t> moduli_;
  std::size_t order_;
};

// r^a s^b with index a + m*b; s r s = r^-1.
class DihedralBackend final : public GroupBackend {
 public:
  explicit DihedralBackend(std::uint64_t m) : m_(m) {}
  std::size_t order() const override { return 2 * m_; }
  Element multiply(Element x, Element y) const override {
    auto [a, b] = split(x);
    auto [c, d] = split(y);
    std::uint64_t rot = b == 0 ? (a + c) % m_ : (a + m_ - c) % m_;
    return join(rot, (b + d) % 2);
  }
  Element inverse(Element x) const override {
    auto [a, b] = split(x);
    return b == 1 ? x : join((m_ - a) % m_, 0);
  }
  std::vector<Element> generators() const override {
    return drop_identity({join(1 % m_, 0), join(0, 1)});
  }
  std::string kind() const override { return "dihedral"; }
  std::string element_label(Element x) const override {
    auto [a, b] = split(x);
    return "r^" + std::to_string(a) + (b ? "s" : "");
  }

 private:
  std::pair<std::uint64_t, std::uint64_t> split(Element x) const { return {x % m_, x / m_}; }
  Element join(std::uint64_t a, std::uint64_t b) const { return static_cast<Element>(a + m_ * b); }
  std::uint64_t m_;
};

// a^k x^b with a of order 2m, x^2 = a^m, x a x^-1 = a^-1; index k + 2m*b.
class DicyclicBackend final : public GroupBackend {
 public:
  explicit DicyclicBackend(std::uint64_t m) : m_(m), n_(2 * m) {}
  std::size_t order() const override { return 2 * n_; }
  Element multiply(Element x, Element y) const override {
    auto [k, b] = split(x);
    auto [l, c] = split(y);
    std::uint64_t rot = b == 0 ? (k + l) % n_ : (k + n_ - l) % n_;
    if (b == 1 && c == 1) return join((rot + m_) % n_, 0);
    return join(rot, (b + c) % 2);
  }
  Element inverse(Element x) const override {
    auto [k, b] = split(x);
    return b == 1 ? join((k + m_) % n_, 1) : join((n_ - k) % n_, 0);
  }
  std::vector<Element> generators() const override { return drop_identity({join(1, 0), join(0, 1)}); }
  std::string kind() const override { return "dicyclic"; }
  std::string element_label(Element x) const override {
    auto [k, b] = split(x);
    return "a^" + std::to_string(k) + (b ? "x" : "");
  }

 private:
  std::pair<std::uint64_t, std::uint64_t> split(Element x) const { return {x % n_, x / n_}; }
  Element join(std::uint64_t k, std::uint64_t b) const { return static_cast<Element>(k + n_ * b); }
  std::uint64_t m_;
  std::uint64_t n_;
};

// Affine maps v -> a v + b, a = w^(d t); index b + q*t. Products apply the
// left factor first.
class AffineBackend final : public GroupBackend {
 public:
  AffineBackend(std::uint32_t q, std::uint32_t d) : field_(q), d_(d), h_((q - 1) / d) {}
  std::size_t order() const override { return std::size_t{field_.size()} * h_; }
  Element multiply(Element x, Element y) const override {
    auto [t, b] = split(x);
    auto [u, c] = split(y);
    std::uint32_t a2 = scalar(u);
    return join((t + u) % h_, field_.add(field_.mul(a2, b), c));
  }
  Element inverse(Element x) const override {
    auto [t, b] = split(x);
    std::uint32_t ainv = field_.inv(scalar(t));
    return join((h_ - t) % h_, field_.neg(field_.mul(ainv, b)));
  }
  std::vector<Element> generators() const override {
    std::vector<Element> gens;
    std::uint32_t basis = 1;
    for (unsigned i = 0; i < field_.degree(); ++i) {
      gens.push_back(join(0, basis));
      basis *= field_.characteristic();
    }
    if (h_ > 1) gens.push_back(join(1, 0));
    return gens;
  }
  std::string kind() const override { return "affine"; }
  std::string element_label(Element x) const override {
    auto [t, b] = split(x);
    return "v->" + std::to_string(scalar(t)) + "v+" + std::to_string(b);
  }

 private:
  std::uint32_t scalar(std::uint32_t t) const {
    return field_.primitive_power(std::uint64_t{d_} * t);
  }
  std::pair<std::uint32_t, std::uint32_t> split(Element x) const {
    return {x / field_.size(), x % field_.size()};
  }
  Element join(std::uint32_t t, std::uint32_t b) const { return t * field_.size() + b; }

  FiniteField field_;
  std::uint32_t d_;
  std::uint32_t h_;
};

// Small group given by its full multiplication table.
class TableBackend final : public GroupBackend {
 public:
  TableBackend(std::size_t n, std::vector<Element> table, std::vector<Element> gens, std::string kind)
      : n_(n), table_(std::move(table)), gens_(std::move(gens)), kind_(std::move(kind)) {
    inverse_.resize(n_);
    for (Element x = 0; x < n_; ++x)
      for (Element y = 0; y < n_; ++y)
        if (table_[x * n_ + y] == 0) inverse_[x] = y;
  }
  std::size_t order() const override { return n_; }
  Element multiply(Element a, Element b) const override { return table_[a * n_ + b]; }
  Element inverse(Element a) const override { return inverse_[a]; }
  std::vector<Element> generators() const override { return gens_; }
  std::string kind() const override { return kind_; }

 private:
  std::size_t n_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<Element> gens_;
  std::string kind_;
};

template <typename Mul>
Group table_group(std::size_t n, Mul mul, std::vector<Element> gens, const std::string& kind) {
  std::vector<Element> table(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) table[x * n + y] = mul(x, y);
  return Group(std::make_shared<TableBackend>(n, std::move(table), std::move(gens), kind), kind);
}

// (a, b, c) in Z_p^3 with (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab').
Group heisenberg(std::uint32_t p) {
  const std::uint32_t n = p * p * p;
  auto mul = [p](Element x, Element y) {
    std::uint32_t a = x % p, b = x / p % p, c = x / (p * p);
    std::uint32_t a2 = y % p, b2 = y / p % p, c2 = y / (p * p);
    return static_cast<Element>((a + a2) % p + p * ((b + b2) % p) + p * p * ((c + c2 + a * b2) % p));
  };
  return table_group(n, mul, {1, p}, "heisenberg");
}

// x^i y^j, x of order p^2, y of order p, y x y^-1 = x^(1+p); index i + p^2 j.
Group metacyclic_p3(std::uint32_t p) {
  const std::uint32_t p2 = p * p;
  std::vector<std::uint32_t> twist(p);  // (1+p)^j mod p^2
  twist[0] = 1;
  for (std::uint32_t j = 1; j < p; ++j) twist[j] = twist[j - 1] * (1 + p) % p2;
  auto mul = [=](Element x, Element y) {
    std::uint32_t i = x % p2, j = x / p2;
    std::uint32_t k = y % p2, l = y / p2;
    return static_cast<Element>((i + k * twist[j]) % p2 + p2 * ((j + l) % p));
  };
  return table_group(p2 * p, mul, {1, p2}, "metacyclic");
}

struct CentralFactor {
  Group group;
  std::vector<std::uint32_t> coset;  // element -> coset of the center
  std::vector<std::uint32_t> zpow;   // element -> exponent of the central generator
  std::vector<Element> rep;          // coset -> representative
};

CentralFactor make_factor(const Group& h, std::uint32_t p) {
  auto z_members = center(h).members;
  Element z = 0;
  for (Element x : z_members)
    if (x != 0) {
      z = x;
      break;
    }
  if (z_members.size() != p || z == 0) throw VerificationError("factor center is not of order p");
  CentralFactor f{h, std::vector<std::uint32_t>(h.order(), ~0u), std::vector<std::uint32_t>(h.order(), 0), {}};
  for (Element x = 0; x < h.order(); ++x) {
    if (f.coset[x] != ~0u) continue;
    const auto u = static_cast<std::uint32_t>(f.rep.size());
    f.rep.push_back(x);
    Element y = x;
    for (std::uint32_t c = 0; c < p; ++c) {
      f.coset[y] = u;
      f.zpow[y] = c;
      y = h.multiply(y, z);
    }
  }
  return f;
}

// Central product of order p^3 factors with their centers identified.
// Index c + p*(u_1 + p^2*(u_2 + ...)).
class CentralProductBackend final : public GroupBackend {
 public:
  CentralProductBackend(std::vector<CentralFactor> factors, std::uint32_t p)
      : factors_(std::move(factors)), p_(p), cosets_(p * p) {
    order_ = p_;
    for (std::size_t i = 0; i < factors_.size(); ++i) order_ *= cosets_;
  }
  std::size_t order() const override { return order_; }
  Element multiply(Element x, Element y) const override {
    std::uint64_t c = x % p_ + y % p_;
    Element xs = x / p_, ys = y / p_;
    std::uint64_t out = 0, scale = 1;
    for (const auto& f : factors_) {
      Element prod = f.group.multiply(f.rep[xs % cosets_], f.rep[ys % cosets_]);
      out += f.coset[prod] * scale;
      c += f.zpow[prod];
      xs /= cosets_;
      ys /= cosets_;
      scale *= cosets_;
    }
    return static_cast<Element>(c % p_ + p_ * out);
  }
  Element inverse(Element x) const override {
    std::uint64_t c = p_ - x % p_;
    Element xs = x / p_;
    std::uint64_t out = 0, scale = 1;
    for (const auto& f : factors_) {
      Element inv = f.group.inverse(f.rep[xs % cosets_]);
      out += f.coset[inv] * scale;
      c += f.zpow[inv];
      xs /= cosets_;
      scale *= cosets_;
    }
    return static_cast<Element>(c % p_ + p_ * out);
  }
  std::vector<Element> generators() const override {
    std::vector<Element> gens;
    std::uint64_t scale = 1;
    for (const auto& f : factors_) {
      for (Element g : f.group.generators())
        gens.push_back(static_cast<Element>(f.zpow[g] + p_ * (f.coset[g] * scale)));
      scale *= cosets_;
    }
    return gens;
  }
  std::string kind() const override { return "extraspecial"; }

 private:
  std::vector<CentralFactor> factors_;
  std::uint32_t p_;
  std::uint32_t cosets_;
  std::size_t order_;
};

class PointMap {
 public:
  explicit PointMap(std::size_t n) : images_(n) {}
  std::uint32_t& operator[](std::size_t i) { return images_[i]; }
  Permutation finish() { return Permutation(std::move(images_)); }

 private:
  std::vector<std::uint32_t> images_;
};

std::vector<std::uint64_t> integer_args(const GroupSpec& spec) {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < spec.args.size(); ++i) out.push_back(static_cast<std::uint64_t>(spec.integer(i)));
  return out;
}

void expect_arity(const GroupSpec& spec, std::size_t n) {
  if (spec.args.size() != n)
    throw ParseError(spec.family + " takes " + std::to_string(n) + " argument(s), got " +
                     std::to_string(spec.args.size()));
}

}  // namespace

Group cyclic_group(std::uint64_t n, const BuildOptions& options) {
  if (n < 1) throw DomainError("cyclic order must be positive");
  check_bound(n, options);
  return Group(std::make_shared<AbelianBackend>(std::vector<std::uint64_t>{n}),
               "cyclic(" + std::to_string(n) + ")");
}

Group abelian_group(const std::vector<std::uint64_t>& moduli, const BuildOptions& options) {
  if (moduli.empty()) throw DomainError("abelian needs at least one modulus");
  std::uint64_t order = 1;
  std::string spec = "abelian(";
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    if (moduli[i] < 1) throw DomainError("abelian moduli must be positive");
    order *= moduli[i];
    check_bound(order, options);
    spec += (i ? "," : "") + std::to_string(moduli[i]);
  }
  return Group(std::make_shared<AbelianBackend>(moduli), spec + ")");
}

Group dihedral_group(std::uint64_t order, const BuildOptions& options) {
  if (order < 2 || order % 2 != 0) throw DomainError("dihedral order must be even and at least 2");
  check_bound(order, options);
  return Group(std::make_shared<DihedralBackend>(order / 2), "dihedral(" + std::to_string(order) + ")");
}

Group dicyclic_group(std::uint64_t order, const BuildOptions& options) {
  if (order < 4 || order % 4 != 0) throw DomainError("dicyclic order must be a positive multiple of 4");
  check_bound(order, options);
  return Group(std::make_shared<DicyclicBackend>(order / 4), "dicyclic(" + std::to_string(order) + ")");
}

Group symmetric_group(unsigned n, const BuildOptions& options) {
  if (n < 1) throw DomainError("symmetric degree must be positive");
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(parse_cycles("(1,2)", n));
    PointMap shift(n);
    for (unsigned i = 0; i < n; ++i) shift[i] = (i + 1) % n;
    gens.push_back(shift.finish());
  }
  return permutation_group(gens, "symmetric(" + std::to_string(n) + ")", options);
}

Group alternating_group(unsigned n, const BuildOptions& options) {
  if (n < 1) throw DomainError("alternating degree must be positive");
  std::vector<Permutation> gens;
  for (unsigned k = 3; k <= n; ++k)
    gens.push_back(parse_cycles("(1,2," + std::to_string(k) + ")", n));
  return permutation_group(gens, "alternating(" + std::to_string(n) + ")", options);
}

Group extraspecial_group(std::uint32_t p, std::uint64_t order, ExtraspecialType type,
                         const BuildOptions& options) {
  if (!is_prime(p)) throw DomainError("extraspecial: " + std::to_string(p) + " is not prime");
  unsigned r = 0;
  std::uint64_t expected = p;
  while (expected < order) {
    expected *= std::uint64_t{p} * p;
    ++r;
  }
  if (r == 0 || expected != order)
    throw DomainError("extraspecial: order " + std::to_string(order) + " is not p^(2r+1) with r >= 1");
  check_bound(order, options);

  std::string tag;
  Group base = p == 2 ? dihedral_group(8) : heisenberg(p);
  Group first = base;
  switch (type) {
    case ExtraspecialType::Plus:
    case ExtraspecialType::Minus:
      if (p != 2) throw DomainError("extraspecial: plus/minus types need p = 2");
      tag = type == ExtraspecialType::Plus ? "plus" : "minus";
      if (type == ExtraspecialType::Minus) first = dicyclic_group(8);
      break;
    case ExtraspecialType::ExponentP:
    case ExtraspecialType::ExponentP2:
      if (p == 2) throw DomainError("extraspecial: p = 2 takes type plus or minus");
      tag = "exp" + std::to_string(type == ExtraspecialType::ExponentP ? p : p * p);
      if (type == ExtraspecialType::ExponentP2) first = metacyclic_p3(p);
      break;
  }
  std::vector<CentralFactor> factors;
  factors.push_back(make_factor(first, p));
  for (unsigned i = 1; i < r; ++i) factors.push_back(make_factor(base, p));
  return Group(std::make_shared<CentralProductBackend>(std::move(factors), p),
               "extraspecial(" + std::to_string(p) + "," + std::to_string(order) + "," + tag + ")");
}

Group frobenius_affine_group(std::uint32_t q, std::uint32_t d, const BuildOptions& options) {
  if (prime_power(q).first == 0) throw DomainError("frobenius_affine: q = " + std::to_string(q) + " is not a prime power");
  if (d < 1 || (q - 1) % d != 0) throw DomainError("frobenius_affine: d must divide q - 1");
  check_bound(std::uint64_t{q} * ((q - 1) / d), options);
  return Group(std::make_shared<AffineBackend>(q, d),
               "frobenius_affine(" + std::to_string(q) + "," + std::to_string(d) + ")");
}

Group frobenius72_group(const BuildOptions& options) {
  check_bound(72, options);
  auto point = [](std::uint32_t a, std::uint32_t b) { return a % 3 + 3 * (b % 3); };
  auto affine = [&](auto map) {
    PointMap m(9);
    for (std::uint32_t b = 0; b < 3; ++b)
      for (std::uint32_t a = 0; a < 3; ++a) m[point(a, b)] = map(a, b);
    return m.finish();
  };
  std::vector<Permutation> gens{
      affine([&](std::uint32_t a, std::uint32_t b) { return point(a + 1, b); }),
      affine([&](std::uint32_t a, std::uint32_t b) { return point(a, b + 1); }),
      // [[0,-1],[1,0]] and [[1,1],[1,-1]] generate Q_8 in SL(2,3).
      affine([&](std::uint32_t a, std::uint32_t b) { return point(3 - b, a); }),
      affine([&](std::uint32_t a, std::uint32_t b) { return point(a + b, a + 3 - b); }),
  };
  return permutation_group(gens, "frobenius72()", options);
}

namespace {

Group linear_group(unsigned n, std::uint32_t q, bool special, const BuildOptions& options) {
  if (n != 2) throw DomainError("only 2x2 linear groups are supported");
  if (q != 2 && q != 3 && q != 4 && q != 5) throw DomainError("linear groups need q in {2,3,4,5}");
  FiniteField f(q);
  const std::uint32_t points = q * q - 1;
  auto matrix = [&](std::uint32_t m00, std::uint32_t m01, std::uint32_t m10, std::uint32_t m11) {
    PointMap m(points);
    for (std::uint32_t v = 1; v < q * q; ++v) {
      std::uint32_t a = v % q, b = v / q;
      std::uint32_t x = f.add(f.mul(m00, a), f.mul(m01, b));
      std::uint32_t y = f.add(f.mul(m10, a), f.mul(m11, b));
      m[v - 1] = x + q * y - 1;
    }
    return m.finish();
  };
  std::vector<Permutation> gens;
  for (std::uint32_t t = 1; t < q; ++t) {
    gens.push_back(matrix(1, t, 0, 1));
    gens.push_back(matrix(1, 0, t, 1));
  }
  if (!special && q > 2) gens.push_back(matrix(f.primitive_power(1), 0, 0, 1));
  std::string spec = std::string(special ? "sl" : "gl") + "(2," + std::to_string(q) + ")";
  return permutation_group(gens, spec, options);
}

}  // namespace

Group general_linear_group(unsigned n, std::uint32_t q, const BuildOptions& options) {
  return linear_group(n, q, false, options);
}

Group special_linear_group(unsigned n, std::uint32_t q, const BuildOptions& options) {
  return linear_group(n, q, true, options);
}

Group build_group(const GroupSpec& spec, const BuildOptions& options) {
  const std::string& f = spec.family;
  auto arg = [&](std::size_t i) { return static_cast<std::uint64_t>(spec.integer(i)); };
  auto small = [&](std::size_t i) -> std::uint32_t {
    auto v = arg(i);
    if (v > 0xFFFFFFFu) throw DomainError(f + ": parameter too large");
    return static_cast<std::uint32_t>(v);
  };
  if (f == "cyclic") {
    expect_arity(spec, 1);
    return cyclic_group(arg(0), options);
  }
  if (f == "abelian") return abelian_group(integer_args(spec), options);
  if (f == "dihedral") {
    expect_arity(spec, 1);
    return dihedral_group(arg(0), options);
  }
  if (f == "dicyclic" || f == "quaternion") {
    expect_arity(spec, 1);
    auto n = arg(0);
    if (f == "quaternion" && (n < 8 || (n & (n - 1)) != 0))
      throw DomainError("quaternion order must be a power of 2, at least 8");
    return dicyclic_group(n, options);
  }
  if (f == "symmetric") {
    expect_arity(spec, 1);
    return symmetric_group(small(0), options);
  }
  if (f == "alternating") {
    expect_arity(spec, 1);
    return alternating_group(small(0), options);
  }
  if (f == "extraspecial") {
    expect_arity(spec, 3);
    const std::uint32_t p = small(0);
    const std::string& word = spec.word(2);
    ExtraspecialType type;
    if (word == "plus") type = ExtraspecialType::Plus;
    else if (word == "minus") type = ExtraspecialType::Minus;
    else if (word == "exp" + std::to_string(p)) type = ExtraspecialType::ExponentP;
    else if (word == "exp" + std::to_string(std::uint64_t{p} * p)) type = ExtraspecialType::ExponentP2;
    else throw DomainError("extraspecial: unknown type '" + word + "'");
    return extraspecial_group(p, arg(1), type, options);
  }
  if (f == "frobenius_affine") {
    expect_arity(spec, 2);
    return frobenius_affine_group(small(0), small(1), options);
  }
  if (f == "frobenius72") {
    expect_arity(spec, 0);
    return frobenius72_group(options);
  }
  if (f == "gl" || f == "sl") {
    expect_arity(spec, 2);
    return f == "gl" ? general_linear_group(small(0), small(1), options)
                     : special_linear_group(small(0), small(1), options);
  }
  if (f == "product") {
    expect_arity(spec, 2);
    return direct_product(build_group(spec.nested(0), options), build_group(spec.nested(1), options),
                          options);
  }
  if (f == "perm") {
    if (spec.degree < 0 || spec.degree > 0xFFFF) throw DomainError("perm: bad degree");
    std::vector<Permutation> gens;
    for (const auto& a : spec.args) gens.push_back(parse_cycles(a.text, static_cast<std::size_t>(spec.degree)));
    return permutation_group(gens, canonical_spec(spec), options);
  }
  throw ParseError("unknown group family '" + f + "'");
}

Group named_group(std::string_view text, const BuildOptions& options) {
  return build_group(parse_group_spec(text), options);
}

}  // namespace repdim
