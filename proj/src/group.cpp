#include "repdim/group.hpp"

#include <algorithm>
#include <functional>
#include <string_view>
#include <unordered_map>

#include "repdim/error.hpp"

namespace repdim {

Group::Group(std::shared_ptr<const GroupBackend> backend, std::string spec)
    : backend_(std::move(backend)), spec_(std::move(spec)), order_(backend_->order()) {
  generators_ = backend_->generators();
  inverses_.resize(order_);
  for (Element x = 0; x < order_; ++x) inverses_[x] = backend_->inverse(x);
  order_primes_ = prime_factors(order_);
}

Element Group::power(Element a, std::uint64_t k) const {
  Element result = identity();
  Element base = a;
  while (k > 0) {
    if (k & 1u) result = multiply(result, base);
    k >>= 1u;
    if (k > 0) base = multiply(base, base);
  }
  return result;
}

unsigned Group::element_order(Element a) const {
  std::uint64_t ord = order_;
  for (auto q : order_primes_) {
    while (ord % q == 0 && power(a, ord / q) == identity()) ord /= q;
  }
  return static_cast<unsigned>(ord);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      primes.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

namespace {

// Elements stored as packed 16-bit image arrays, looked up by their bytes.
class PermutationBackend final : public GroupBackend {
 public:
  PermutationBackend(std::span<const Permutation> gens, std::size_t bound) {
    for (const auto& g : gens) degree_ = std::max(degree_, g.degree());
    if (degree_ > 0xFFFF) throw DomainError("permutation degree exceeds 65535");

    std::vector<std::vector<std::uint16_t>> gen_images;
    for (const auto& g : gens) {
      std::vector<std::uint16_t> img(degree_);
      for (std::size_t i = 0; i < degree_; ++i)
        img[i] = static_cast<std::uint16_t>(i < g.degree() ? g[i] : i);
      gen_images.push_back(std::move(img));
    }

    std::vector<std::uint16_t> id(degree_);
    for (std::size_t i = 0; i < degree_; ++i) id[i] = static_cast<std::uint16_t>(i);
    insert(id);

    std::vector<std::uint16_t> buf(degree_);
    for (std::size_t next = 0; next < count_; ++next) {
      for (std::size_t gi = 0; gi < gen_images.size(); ++gi) {
        const std::uint16_t* x = row(static_cast<Element>(next));
        for (std::size_t i = 0; i < degree_; ++i) buf[i] = gen_images[gi][x[i]];
        if (lookup(buf.data()) == kMissing) {
          if (count_ >= bound)
            throw BoundError("group order exceeds bound " + std::to_string(bound));
          insert(buf);
        }
      }
    }

    for (const auto& img : gen_images) {
      Element e = lookup(img.data());
      if (e != 0 && std::find(gens_.begin(), gens_.end(), e) == gens_.end())
        gens_.push_back(e);
    }
  }

  std::size_t order() const override { return count_; }

  Element multiply(Element a, Element b) const override {
    thread_local std::vector<std::uint16_t> buf;
    buf.resize(degree_);
    const std::uint16_t* x = row(a);
    const std::uint16_t* y = row(b);
    for (std::size_t i = 0; i < degree_; ++i) buf[i] = y[x[i]];
    return lookup(buf.data());
  }

  Element inverse(Element a) const override {
    thread_local std::vector<std::uint16_t> buf;
    buf.resize(degree_);
    const std::uint16_t* x = row(a);
    for (std::size_t i = 0; i < degree_; ++i) buf[x[i]] = static_cast<std::uint16_t>(i);
    return lookup(buf.data());
  }

  std::vector<Element> generators() const override { return gens_; }
  std::string kind() const override { return "permutation"; }

  std::string element_label(Element a) const override {
    std::vector<std::uint32_t> img(row(a), row(a) + degree_);
    return Permutation(std::move(img)).cycle_string();
  }

 private:
  static constexpr Element kMissing = ~Element{0};

  const std::uint16_t* row(Element a) const { return images_.data() + a * degree_; }

  std::string_view key(const std::uint16_t* img) const {
    return {reinterpret_cast<const char*>(img), degree_ * sizeof(std::uint16_t)};
  }

  Element lookup(const std::uint16_t* img) const {
    auto it = index_.find(key(img));
    return it == index_.end() ? kMissing : it->second;
  }

  void insert(const std::vector<std::uint16_t>& img) {
    images_.insert(images_.end(), img.begin(), img.end());
    index_.emplace(std::string(key(img.data())), static_cast<Element>(count_));
    ++count_;
  }

  std::size_t degree_ = 0;
  std::size_t count_ = 0;
  std::vector<std::uint16_t> images_;
  struct KeyHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const { return std::hash<std::string_view>{}(s); }
  };
  std::unordered_map<std::string, Element, KeyHash, std::equal_to<>> index_;
  std::vector<Element> gens_;
};

class ProductBackend final : public GroupBackend {
 public:
  ProductBackend(Group a, Group b) : a_(std::move(a)), b_(std::move(b)), nb_(b_.order()) {}

  std::size_t order() const override { return a_.order() * nb_; }
  Element multiply(Element x, Element y) const override {
    return compose(a_.multiply(x / nb_, y / nb_), b_.multiply(x % nb_, y % nb_));
  }
  Element inverse(Element x) const override {
    return compose(a_.inverse(x / nb_), b_.inverse(x % nb_));
  }
  std::vector<Element> generators() const override {
    std::vector<Element> gens;
    for (auto g : a_.generators()) gens.push_back(compose(g, 0));
    for (auto h : b_.generators()) gens.push_back(compose(0, h));
    return gens;
  }
  std::string kind() const override { return "product"; }
  std::string element_label(Element x) const override {
    return "(" + a_.element_label(x / nb_) + "," + b_.element_label(x % nb_) + ")";
  }

 private:
  Element compose(Element x, Element y) const { return static_cast<Element>(x * nb_ + y); }

  Group a_;
  Group b_;
  std::size_t nb_;
};

}  // namespace

Group permutation_group(std::span<const Permutation> gens, std::string spec,
                        const BuildOptions& options) {
  return Group(std::make_shared<PermutationBackend>(gens, options.order_bound), std::move(spec));
}

Group group_from_generators(std::span<const Permutation> gens, const BuildOptions& options) {
  std::size_t degree = 0;
  for (const auto& g : gens) degree = std::max(degree, g.degree());
  std::string spec = "perm(" + std::to_string(degree) + ":";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i > 0) spec += ',';
    spec += '"' + gens[i].cycle_string() + '"';
  }
  spec += ')';
  return permutation_group(gens, std::move(spec), options);
}

Group direct_product(const Group& a, const Group& b, const BuildOptions& options) {
  if (b.order() != 0 && a.order() > options.order_bound / b.order())
    throw BoundError("product order " + std::to_string(a.order()) + "*" +
                     std::to_string(b.order()) + " exceeds bound " +
                     std::to_string(options.order_bound));
  return Group(std::make_shared<ProductBackend>(a, b),
               "product(" + a.spec() + "," + b.spec() + ")");
}

}  // namespace repdim
