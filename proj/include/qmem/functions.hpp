#pragma once

// Function tables, random function families (uniform, balanced, affine
// GF(2), inner product, explicit weighted lists, compositions), and exact
// collision/two-universality analysis.
//
// Domain convention: a bit string x_1 ... x_n is the index
// sum_i x_i 2^{i-1}, i.e. bit i-1 of the index is the i-th string bit.

#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qmem/error.hpp"
#include "qmem/random.hpp"

namespace qmem {

/// Largest support enumerated exactly for the built-in kinds.
inline constexpr std::uint64_t kMaxEnumeration = 65536;
/// Largest predicate domain enumerated exactly.
inline constexpr std::size_t kMaxPredicateDomain = 16;
/// Largest support enumerated for a composition of two families.
inline constexpr std::uint64_t kMaxComposedEnumeration = std::uint64_t{1} << 20;
/// Largest domain for exhaustive pairwise checks.
inline constexpr std::size_t kMaxPairDomain = 256;

/// Explicit map from {0..domain-1} to {0..range-1}.
class FunctionTable {
 public:
  FunctionTable(std::size_t range_size, std::vector<std::uint32_t> values)
      : range_(range_size), values_(std::move(values)) {
    detail::require(range_ >= 1, "FunctionTable: range must be nonempty");
    detail::require(!values_.empty(), "FunctionTable: domain must be nonempty");
    for (auto v : values_) detail::require(v < range_, "FunctionTable: value outside range");
  }

  /// Predicate whose value at x is bit x of `mask`.
  static FunctionTable predicate_from_mask(std::size_t domain, std::uint64_t mask) {
    std::vector<std::uint32_t> v(domain);
    for (std::size_t x = 0; x < domain; ++x) v[x] = static_cast<std::uint32_t>((mask >> x) & 1U);
    return FunctionTable(2, std::move(v));
  }

  static FunctionTable constant(std::size_t domain, std::size_t range, std::uint32_t value) {
    return FunctionTable(range, std::vector<std::uint32_t>(domain, value));
  }

  std::size_t domain_size() const { return values_.size(); }
  std::size_t range_size() const { return range_; }
  std::uint32_t operator()(std::size_t x) const { return values_[x]; }
  std::span<const std::uint32_t> values() const { return values_; }

  std::vector<std::size_t> preimage_sizes() const {
    std::vector<std::size_t> sizes(range_, 0);
    for (auto v : values_) ++sizes[v];
    return sizes;
  }

  bool is_balanced() const {
    if (range_ != 2) return false;
    const auto sizes = preimage_sizes();
    return sizes[0] == sizes[1];
  }

  friend bool operator==(const FunctionTable&, const FunctionTable&) = default;

 private:
  std::size_t range_;
  std::vector<std::uint32_t> values_;
};

/// outer o inner
inline FunctionTable compose(const FunctionTable& outer, const FunctionTable& inner) {
  detail::require(outer.domain_size() == inner.range_size(), "compose: outer domain must equal inner range");
  std::vector<std::uint32_t> v(inner.domain_size());
  for (std::size_t x = 0; x < v.size(); ++x) v[x] = outer(inner(x));
  return FunctionTable(outer.range_size(), std::move(v));
}

enum class FamilyKind { explicit_list, uniform_all, uniform_balanced, affine_gf2, inner_product, composed };

inline const char* kind_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::explicit_list: return "explicit";
    case FamilyKind::uniform_all: return "uniform-all";
    case FamilyKind::uniform_balanced: return "uniform-balanced";
    case FamilyKind::affine_gf2: return "affine-gf2";
    case FamilyKind::inner_product: return "inner-product";
    case FamilyKind::composed: return "composed";
  }
  return "unknown";
}

class FunctionFamily;

namespace family_params {
struct Explicit {
  std::vector<FunctionTable> tables;
  std::vector<double> weights;
};
struct UniformAll {
  std::size_t domain;
  std::size_t range;
};
struct UniformBalanced {
  std::size_t domain;
};
/// h(x) = A x xor b over uniform A (out_bits x in_bits) and b.
struct Affine {
  unsigned in_bits;
  unsigned out_bits;
};
/// h(x) = <a, x> mod 2 over uniform a.
struct InnerProduct {
  unsigned bits;
};
struct Composed {
  std::shared_ptr<const FunctionFamily> outer;
  std::shared_ptr<const FunctionFamily> inner;
};
}  // namespace family_params

namespace detail {

inline std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::nullopt;
  return a * b;
}

inline std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    auto next = checked_mul(r, base);
    if (!next) return std::nullopt;
    r = *next;
  }
  return r;
}

inline std::optional<std::uint64_t> checked_binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n-k+i) / i stays integral at every step
    auto m = checked_mul(r, n - k + i);
    if (!m) return std::nullopt;
    r = *m / i;
  }
  return r;
}

inline std::uint32_t parity(std::uint64_t v) { return static_cast<std::uint32_t>(std::popcount(v) & 1); }

}  // namespace detail

/// A random function: a probability distribution over function tables.
/// Immutable; copies share composed sub-families.
class FunctionFamily {
 public:
  using Callback = std::function<void(const FunctionTable&, double)>;

  static FunctionFamily explicit_list(std::vector<FunctionTable> tables, std::vector<double> weights) {
    detail::require(!tables.empty(), "FunctionFamily: explicit list is empty");
    detail::require(tables.size() == weights.size(), "FunctionFamily: one weight per table required");
    double total = 0.0;
    for (double w : weights) {
      detail::require(w >= 0.0 && std::isfinite(w), "FunctionFamily: negative weight");
      total += w;
    }
    detail::require(std::abs(total - 1.0) <= 1e-12, "FunctionFamily: weights must sum to 1");
    for (const auto& t : tables)
      detail::require(t.domain_size() == tables.front().domain_size() &&
                          t.range_size() == tables.front().range_size(),
                      "FunctionFamily: tables must share domain and range");
    return FunctionFamily(family_params::Explicit{std::move(tables), std::move(weights)});
  }

  /// Equal weights over `tables`.
  static FunctionFamily uniform_over(std::vector<FunctionTable> tables) {
    std::vector<double> w(tables.size(), 1.0 / static_cast<double>(tables.size()));
    return explicit_list(std::move(tables), std::move(w));
  }

  static FunctionFamily uniform_all(std::size_t domain, std::size_t range) {
    detail::require(domain >= 1 && range >= 1, "FunctionFamily::uniform_all: empty domain or range");
    return FunctionFamily(family_params::UniformAll{domain, range});
  }

  static FunctionFamily uniform_balanced(std::size_t domain) {
    detail::require(domain >= 2 && domain % 2 == 0, "FunctionFamily::uniform_balanced: domain must be even");
    return FunctionFamily(family_params::UniformBalanced{domain});
  }

  static FunctionFamily affine_gf2(unsigned in_bits, unsigned out_bits) {
    detail::require(in_bits >= 1 && in_bits <= 31 && out_bits >= 1 && out_bits <= 31,
                    "FunctionFamily::affine_gf2: bit counts must lie in [1, 31]");
    return FunctionFamily(family_params::Affine{in_bits, out_bits});
  }

  static FunctionFamily inner_product(unsigned bits) {
    detail::require(bits >= 1 && bits <= 31, "FunctionFamily::inner_product: bits must lie in [1, 31]");
    return FunctionFamily(family_params::InnerProduct{bits});
  }

  /// Draws outer and inner independently and returns outer o inner.
  static FunctionFamily composed(FunctionFamily outer, FunctionFamily inner) {
    detail::require(outer.domain_size() == inner.range_size(),
                    "FunctionFamily::composed: outer domain must equal inner range");
    return FunctionFamily(family_params::Composed{std::make_shared<const FunctionFamily>(std::move(outer)),
                                                  std::make_shared<const FunctionFamily>(std::move(inner))});
  }

  FamilyKind kind() const { return static_cast<FamilyKind>(params_.index()); }
  const char* name() const { return kind_name(kind()); }

  template <class P>
  const P& params() const {
    return std::get<P>(params_);
  }

  std::size_t domain_size() const {
    return std::visit(
        [](const auto& p) -> std::size_t {
          using P = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<P, family_params::Explicit>) return p.tables.front().domain_size();
          else if constexpr (std::is_same_v<P, family_params::UniformAll>) return p.domain;
          else if constexpr (std::is_same_v<P, family_params::UniformBalanced>) return p.domain;
          else if constexpr (std::is_same_v<P, family_params::Affine>) return std::size_t{1} << p.in_bits;
          else if constexpr (std::is_same_v<P, family_params::InnerProduct>) return std::size_t{1} << p.bits;
          else return p.inner->domain_size();
        },
        params_);
  }

  std::size_t range_size() const {
    return std::visit(
        [](const auto& p) -> std::size_t {
          using P = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<P, family_params::Explicit>) return p.tables.front().range_size();
          else if constexpr (std::is_same_v<P, family_params::UniformAll>) return p.range;
          else if constexpr (std::is_same_v<P, family_params::UniformBalanced>) return 2;
          else if constexpr (std::is_same_v<P, family_params::Affine>) return std::size_t{1} << p.out_bits;
          else if constexpr (std::is_same_v<P, family_params::InnerProduct>) return 2;
          else return p.outer->range_size();
        },
        params_);
  }

  /// Number of (table, weight) pairs enumerated; nullopt on overflow.
  std::optional<std::uint64_t> support_size() const {
    return std::visit(
        [](const auto& p) -> std::optional<std::uint64_t> {
          using P = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<P, family_params::Explicit>) return p.tables.size();
          else if constexpr (std::is_same_v<P, family_params::UniformAll>) return detail::checked_pow(p.range, p.domain);
          else if constexpr (std::is_same_v<P, family_params::UniformBalanced>)
            return detail::checked_binomial(p.domain, p.domain / 2);
          else if constexpr (std::is_same_v<P, family_params::Affine>) {
            const std::uint64_t bits = std::uint64_t{p.out_bits} * (p.in_bits + 1);
            if (bits >= 63) return std::nullopt;
            return std::uint64_t{1} << bits;
          } else if constexpr (std::is_same_v<P, family_params::InnerProduct>) return std::uint64_t{1} << p.bits;
          else {
            auto a = p.outer->support_size();
            auto b = p.inner->support_size();
            if (!a || !b) return std::nullopt;
            return detail::checked_mul(*a, *b);
          }
        },
        params_);
  }

  bool enumerable() const {
    switch (kind()) {
      case FamilyKind::explicit_list: return true;
      case FamilyKind::uniform_balanced: return domain_size() <= kMaxPredicateDomain;
      case FamilyKind::composed: {
        const auto& c = params<family_params::Composed>();
        auto n = support_size();
        return c.outer->enumerable() && c.inner->enumerable() && n && *n <= kMaxComposedEnumeration;
      }
      default: {
        auto n = support_size();
        return n && *n <= kMaxEnumeration;
      }
    }
  }

  /// Visits every table in the support with its probability. Throws
  /// cap_exceeded when the family is too large to enumerate.
  void for_each(const Callback& fn) const {
    if (!enumerable())
      throw cap_exceeded(std::string("family '") + name() +
                         "' is too large to enumerate exactly; use Monte Carlo sampling");
    std::visit([&](const auto& p) { enumerate(p, fn); }, params_);
  }

  struct Weighted {
    FunctionTable table;
    double weight;
  };

  std::vector<Weighted> support() const {
    std::vector<Weighted> out;
    for_each([&](const FunctionTable& t, double w) { out.push_back({t, w}); });
    return out;
  }

  FunctionTable sample(Rng& rng) const {
    return std::visit([&](const auto& p) { return draw(p, rng); }, params_);
  }

 private:
  using Params = std::variant<family_params::Explicit, family_params::UniformAll, family_params::UniformBalanced,
                              family_params::Affine, family_params::InnerProduct, family_params::Composed>;

  explicit FunctionFamily(Params p) : params_(std::move(p)) {}

  static void enumerate(const family_params::Explicit& p, const Callback& fn) {
    for (std::size_t i = 0; i < p.tables.size(); ++i) fn(p.tables[i], p.weights[i]);
  }

  static void enumerate(const family_params::UniformAll& p, const Callback& fn) {
    const std::uint64_t total = *detail::checked_pow(p.range, p.domain);
    const double w = 1.0 / static_cast<double>(total);
    std::vector<std::uint32_t> digits(p.domain, 0);
    for (std::uint64_t t = 0; t < total; ++t) {
      std::uint64_t rest = t;
      for (std::size_t x = 0; x < p.domain; ++x) {
        digits[x] = static_cast<std::uint32_t>(rest % p.range);
        rest /= p.range;
      }
      fn(FunctionTable(p.range, digits), w);
    }
  }

  static void enumerate(const family_params::UniformBalanced& p, const Callback& fn) {
    const double w = 1.0 / static_cast<double>(*detail::checked_binomial(p.domain, p.domain / 2));
    const std::uint64_t end = std::uint64_t{1} << p.domain;
    for (std::uint64_t mask = 0; mask < end; ++mask)
      if (static_cast<std::size_t>(std::popcount(mask)) == p.domain / 2)
        fn(FunctionTable::predicate_from_mask(p.domain, mask), w);
  }

  static FunctionTable affine_table(const family_params::Affine& p, std::span<const std::uint64_t> rows,
                                    std::uint64_t offset) {
    const std::size_t domain = std::size_t{1} << p.in_bits;
    std::vector<std::uint32_t> v(domain);
    for (std::size_t x = 0; x < domain; ++x) {
      std::uint32_t y = 0;
      for (unsigned j = 0; j < p.out_bits; ++j)
        y |= (detail::parity(rows[j] & x) ^ static_cast<std::uint32_t>((offset >> j) & 1U)) << j;
      v[x] = y;
    }
    return FunctionTable(std::size_t{1} << p.out_bits, std::move(v));
  }

  // Index layout: low out_bits bits are b, then one in_bits chunk per row of A.
  static void enumerate(const family_params::Affine& p, const Callback& fn) {
    const std::uint64_t total = *FunctionFamily(p).support_size();
    const double w = 1.0 / static_cast<double>(total);
    const std::uint64_t row_mask = (std::uint64_t{1} << p.in_bits) - 1;
    std::vector<std::uint64_t> rows(p.out_bits);
    for (std::uint64_t t = 0; t < total; ++t) {
      const std::uint64_t offset = t & ((std::uint64_t{1} << p.out_bits) - 1);
      std::uint64_t rest = t >> p.out_bits;
      for (unsigned j = 0; j < p.out_bits; ++j) {
        rows[j] = rest & row_mask;
        rest >>= p.in_bits;
      }
      fn(affine_table(p, rows, offset), w);
    }
  }

  static FunctionTable inner_product_table(unsigned bits, std::uint64_t a) {
    const std::size_t domain = std::size_t{1} << bits;
    std::vector<std::uint32_t> v(domain);
    for (std::size_t x = 0; x < domain; ++x) v[x] = detail::parity(a & x);
    return FunctionTable(2, std::move(v));
  }

  static void enumerate(const family_params::InnerProduct& p, const Callback& fn) {
    const std::uint64_t total = std::uint64_t{1} << p.bits;
    const double w = 1.0 / static_cast<double>(total);
    for (std::uint64_t a = 0; a < total; ++a) fn(inner_product_table(p.bits, a), w);
  }

  static void enumerate(const family_params::Composed& p, const Callback& fn) {
    const auto outer = p.outer->support();
    p.inner->for_each([&](const FunctionTable& g, double wg) {
      for (const auto& f : outer) fn(compose(f.table, g), f.weight * wg);
    });
  }

  static FunctionTable draw(const family_params::Explicit& p, Rng& rng) {
    const double u = rng.uniform();
    double acc = 0.0;
    for (std::size_t i = 0; i < p.tables.size(); ++i) {
      acc += p.weights[i];
      if (u < acc) return p.tables[i];
    }
    for (std::size_t i = p.tables.size(); i-- > 0;)
      if (p.weights[i] > 0.0) return p.tables[i];
    return p.tables.back();
  }

  static FunctionTable draw(const family_params::UniformAll& p, Rng& rng) {
    std::vector<std::uint32_t> v(p.domain);
    for (auto& y : v) y = static_cast<std::uint32_t>(rng.below(p.range));
    return FunctionTable(p.range, std::move(v));
  }

  static FunctionTable draw(const family_params::UniformBalanced& p, Rng& rng) {
    std::vector<std::uint32_t> v(p.domain, 0);
    for (std::size_t i = p.domain / 2; i < p.domain; ++i) v[i] = 1;
    rng.shuffle(v);
    return FunctionTable(2, std::move(v));
  }

  static FunctionTable draw(const family_params::Affine& p, Rng& rng) {
    std::vector<std::uint64_t> rows(p.out_bits);
    for (auto& r : rows) r = rng.below(std::uint64_t{1} << p.in_bits);
    const std::uint64_t offset = rng.below(std::uint64_t{1} << p.out_bits);
    return affine_table(p, rows, offset);
  }

  static FunctionTable draw(const family_params::InnerProduct& p, Rng& rng) {
    return inner_product_table(p.bits, rng.below(std::uint64_t{1} << p.bits));
  }

  static FunctionTable draw(const family_params::Composed& p, Rng& rng) {
    const FunctionTable f = p.outer->sample(rng);
    const FunctionTable g = p.inner->sample(rng);
    return compose(f, g);
  }

  Params params_;
};

/// Deterministic draw: the same seed always yields the same table.
inline FunctionTable sample_function(const FunctionFamily& fam, std::uint64_t seed) {
  Rng rng(seed);
  return fam.sample(rng);
}

/// All predicates (or all balanced predicates) on {0..n-1}, in increasing
/// order of the mask whose bit x is f(x).
inline std::vector<FunctionTable> enumerate_predicates(std::size_t n, bool balanced) {
  detail::require(n >= 1, "enumerate_predicates: empty domain");
  if (n > kMaxPredicateDomain)
    throw cap_exceeded("enumerate_predicates: domain " + std::to_string(n) +
                       " exceeds the exact-enumeration cap of 16; use sampling");
  const FunctionFamily fam = balanced ? FunctionFamily::uniform_balanced(n) : FunctionFamily::uniform_all(n, 2);
  std::vector<FunctionTable> out;
  fam.for_each([&](const FunctionTable& t, double) { out.push_back(t); });
  return out;
}

// ---------------------------------------------------------------------------
// Pairwise statistics

/// Joint law of (G(x), G(x')) as a |Y| x |Y| row-major table, when it can
/// be computed exactly (enumeration, or independence for uniform-all, or
/// structurally for compositions). x == x' is allowed.
inline std::optional<std::vector<double>> exact_pair_distribution(const FunctionFamily& fam, std::size_t x,
                                                                  std::size_t x2) {
  const std::size_t n = fam.domain_size();
  const std::size_t r = fam.range_size();
  detail::require(x < n && x2 < n, "pair distribution: point outside the domain");

  if (fam.kind() == FamilyKind::composed) {
    const auto& c = fam.params<family_params::Composed>();
    auto inner = exact_pair_distribution(*c.inner, x, x2);
    if (!inner) return std::nullopt;
    const std::size_t ny = c.inner->range_size();
    std::vector<double> out(r * r, 0.0);
    for (std::size_t y = 0; y < ny; ++y)
      for (std::size_t y2 = 0; y2 < ny; ++y2) {
        const double pg = (*inner)[y * ny + y2];
        if (pg == 0.0) continue;
        auto outer = exact_pair_distribution(*c.outer, y, y2);
        if (!outer) return std::nullopt;
        for (std::size_t k = 0; k < r * r; ++k) out[k] += pg * (*outer)[k];
      }
    return out;
  }

  if (fam.enumerable()) {
    std::vector<double> out(r * r, 0.0);
    fam.for_each([&](const FunctionTable& t, double w) { out[t(x) * r + t(x2)] += w; });
    return out;
  }

  if (fam.kind() == FamilyKind::uniform_all) {
    std::vector<double> out(r * r, 0.0);
    const double inv = 1.0 / static_cast<double>(r);
    for (std::size_t y = 0; y < r; ++y) {
      if (x == x2) out[y * r + y] = inv;
      else
        for (std::size_t y2 = 0; y2 < r; ++y2) out[y * r + y2] = inv * inv;
    }
    return out;
  }
  return std::nullopt;
}

/// Pr[g(x) = g(x')] for distinct x, x'. Exact when computable; otherwise
/// requires an explicit Monte Carlo mode and reports a standard error.
inline Estimate collision_probability(const FunctionFamily& fam, std::size_t x, std::size_t x2,
                                      EvalMode mode = EvalMode::exact_mode()) {
  detail::require(x != x2, "collision_probability: points must be distinct");
  if (auto pair = exact_pair_distribution(fam, x, x2)) {
    const std::size_t r = fam.range_size();
    Estimate e;
    for (std::size_t y = 0; y < r; ++y) e.value += (*pair)[y * r + y];
    return e;
  }
  if (mode.exact)
    throw cap_exceeded(std::string("collision_probability: family '") + fam.name() +
                       "' is not enumerable; pass a Monte Carlo mode");
  Rng rng(mode.seed);
  RunningMean mean;
  for (std::size_t i = 0; i < mode.samples; ++i) {
    const FunctionTable t = fam.sample(rng);
    mean.add(t(x) == t(x2) ? 1.0 : 0.0);
  }
  return mean.estimate();
}

struct UniversalityReport {
  bool two_universal = false;
  std::size_t worst_x = 0;
  std::size_t worst_x2 = 0;
  double worst_collision = 0.0;
  /// 1 / |Y|
  double threshold = 0.0;
};

/// Exhaustive check of Pr[g(x) = g(x')] <= 1/|Y| + 1e-12 over distinct pairs.
inline UniversalityReport is_two_universal(const FunctionFamily& fam) {
  const std::size_t n = fam.domain_size();
  if (n > kMaxPairDomain)
    throw cap_exceeded("is_two_universal: domain exceeds 256 points");
  UniversalityReport rep;
  rep.threshold = 1.0 / static_cast<double>(fam.range_size());
  rep.worst_collision = -1.0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t x2 = x + 1; x2 < n; ++x2) {
      auto pair = exact_pair_distribution(fam, x, x2);
      if (!pair)
        throw cap_exceeded(std::string("is_two_universal: family '") + fam.name() + "' is not enumerable");
      const std::size_t r = fam.range_size();
      double c = 0.0;
      for (std::size_t y = 0; y < r; ++y) c += (*pair)[y * r + y];
      if (c > rep.worst_collision) {
        rep.worst_collision = c;
        rep.worst_x = x;
        rep.worst_x2 = x2;
      }
    }
  if (n < 2) rep.worst_collision = 0.0;
  rep.two_universal = rep.worst_collision <= rep.threshold + 1e-12;
  return rep;
}

/// 2 Pr[f(x) = f(x')] - 1 for a random predicate; 1 on the diagonal.
inline double lambda_coeff(const FunctionFamily& fam, std::size_t x, std::size_t x2) {
  detail::require(fam.range_size() == 2, "lambda_coeff: family must consist of predicates");
  detail::require(x < fam.domain_size() && x2 < fam.domain_size(), "lambda_coeff: point outside the domain");
  if (x == x2) return 1.0;
  return 2.0 * collision_probability(fam, x, x2).value - 1.0;
}

/// All lambda coefficients as a row-major |X| x |X| table.
inline std::vector<double> lambda_matrix(const FunctionFamily& fam) {
  detail::require(fam.range_size() == 2, "lambda_matrix: family must consist of predicates");
  const std::size_t n = fam.domain_size();
  std::vector<double> lam(n * n, 1.0);
  if (fam.enumerable() && fam.kind() != FamilyKind::composed) {
    std::vector<double> equal(n * n, 0.0);
    fam.for_each([&](const FunctionTable& t, double w) {
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t x2 = x + 1; x2 < n; ++x2)
          if (t(x) == t(x2)) equal[x * n + x2] += w;
    });
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t x2 = x + 1; x2 < n; ++x2) lam[x * n + x2] = lam[x2 * n + x] = 2.0 * equal[x * n + x2] - 1.0;
    return lam;
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t x2 = x + 1; x2 < n; ++x2) lam[x * n + x2] = lam[x2 * n + x] = lambda_coeff(fam, x, x2);
  return lam;
}

}  // namespace qmem
