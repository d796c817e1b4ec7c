#pragma once

// Upper and lower bounds on the distance from uniform of a predicate or
// hash of X given bounded storage, each paired with an exact comparator.

#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qmem/combinatorics.hpp"
#include "qmem/error.hpp"
#include "qmem/functions.hpp"
#include "qmem/prob.hpp"
#include "qmem/quantum.hpp"

namespace qmem {

inline constexpr double kBoundSlack = 1e-9;

/// How `exact` must relate to `bound_value`.
enum class Relation {
  upper,  // exact <= bound
  lower,  // exact >= bound
  equal,  // |exact - bound| <= tolerance
};

inline const char* relation_name(Relation r) {
  switch (r) {
    case Relation::upper: return "upper";
    case Relation::lower: return "lower";
    case Relation::equal: return "equal";
  }
  return "unknown";
}

struct BoundReport {
  std::string label;
  double bound_value = 0.0;
  std::optional<double> exact;
  /// Zero for exact values; a standard error for Monte Carlo estimates.
  double std_error = 0.0;
  /// Sampled lower bound on the true value, when no exact value exists.
  std::optional<double> lower_estimate;
  Relation relation = Relation::upper;
  double tolerance = kBoundSlack;
  bool satisfied = false;
  /// Upper bound of at least 1/2, which says nothing about a binary value.
  bool vacuous = false;
  nlohmann::ordered_json context = nlohmann::ordered_json::object();

  /// Recomputes `satisfied` from the values.
  BoundReport& evaluate() {
    if (exact) {
      switch (relation) {
        case Relation::upper: satisfied = *exact <= bound_value + tolerance; break;
        case Relation::lower: satisfied = *exact >= bound_value - tolerance; break;
        case Relation::equal: satisfied = std::abs(*exact - bound_value) <= tolerance; break;
      }
    } else if (lower_estimate) {
      satisfied = relation != Relation::upper || *lower_estimate <= bound_value + tolerance;
    } else {
      satisfied = false;
    }
    return *this;
  }
};

inline BoundReport make_report(std::string label, double bound, std::optional<double> exact,
                               Relation relation = Relation::upper, double tolerance = kBoundSlack) {
  BoundReport r;
  r.label = std::move(label);
  r.bound_value = bound;
  r.exact = exact;
  r.relation = relation;
  r.tolerance = tolerance;
  r.vacuous = relation == Relation::upper && bound >= 0.5;
  r.evaluate();
  return r;
}

/// 1/2 sqrt(d) sqrt(sum_{x,x'} P(x) P(x') lambda_{x,x'} tr(rho_x rho_x')).
inline double mainschur_bound(const StateFamily& sf, const FunctionFamily& fam) {
  detail::require(fam.range_size() == 2, "mainschur_bound: family must consist of predicates");
  detail::require(fam.domain_size() == sf.domain_size(), "mainschur_bound: domain mismatch");
  const std::size_t n = sf.domain_size();
  const std::vector<double> lam = lambda_matrix(fam);
  double sum = 0.0;
  for (std::size_t x = 0; x < n; ++x) {
    const double px = sf.prior()[x];
    if (px == 0.0) continue;
    for (std::size_t x2 = 0; x2 < n; ++x2) {
      const double px2 = sf.prior()[x2];
      if (px2 == 0.0) continue;
      sum += px * px2 * lam[x * n + x2] * trace_product(sf.state(x), sf.state(x2));
    }
  }
  return 0.5 * std::sqrt(static_cast<double>(sf.dim())) * std::sqrt(std::max(0.0, sum));
}

/// 1/2 sqrt(d * P_C(X)); holds for every two-universal random predicate.
inline double binhash_bound(const Distribution& prior, std::size_t dim) {
  detail::require(dim >= 1, "binhash_bound: dimension must be positive");
  return 0.5 * std::sqrt(static_cast<double>(dim) * prior.collision_probability());
}

/// Largest n - s for which the exact classical lower bound is formed.
inline constexpr unsigned kMaxLowerBoundGap = 16;

/// 1/2 C(2^{n-s}), exact.
inline Rational classical_lower_bound(unsigned n, unsigned s) {
  detail::require(s < n, "classical_lower_bound: requires s < n");
  if (n - s > kMaxLowerBoundGap)
    throw cap_exceeded("classical_lower_bound: n - s exceeds " + std::to_string(kMaxLowerBoundGap));
  return binomial_c(1LL << (n - s)) / 2;
}

/// sigma(x) = the first s bits of x (the low s bits of the index); every
/// preimage has size 2^{n-s}.
inline FunctionTable balanced_storage(unsigned n, unsigned s) {
  detail::require(s < n, "balanced_storage: requires s < n");
  if (n > kMaxPredicateDomain) throw cap_exceeded("balanced_storage: n exceeds 16");
  const std::size_t domain = std::size_t{1} << n;
  const std::uint32_t mask = (std::uint32_t{1} << s) - 1;
  std::vector<std::uint32_t> v(domain);
  for (std::size_t x = 0; x < domain; ++x) v[x] = static_cast<std::uint32_t>(x) & mask;
  return FunctionTable(std::size_t{1} << s, std::move(v));
}

/// d(G(X) | S, G) for S produced from X by `storage`: the family average
/// of d(g(X) | S). The classical device is the identity channel, so the
/// selectable form reduces to this.
inline Estimate classical_storage_distance(const Distribution& prior, const ClassicalChannel& storage,
                                           const FunctionFamily& fam, EvalMode mode = EvalMode::exact_mode()) {
  detail::require(fam.domain_size() == prior.size(), "classical_storage_distance: domain mismatch");
  const JointDistribution xs = joint_with_channel(prior, storage);
  const std::size_t r = fam.range_size();
  auto one = [&](const FunctionTable& g) { return cond_dist_from_uniform(map_rows(xs, g.values(), r)); };
  if (mode.exact) {
    Estimate e;
    fam.for_each([&](const FunctionTable& g, double w) {
      if (w > 0.0) e.value += w * one(g);
    });
    return e;
  }
  Rng rng(mode.seed);
  RunningMean mean;
  for (std::size_t i = 0; i < mode.samples; ++i) mean.add(one(fam.sample(rng)));
  return mean.estimate();
}

inline Estimate classical_storage_distance(const Distribution& prior, const FunctionTable& storage,
                                           const FunctionFamily& fam, EvalMode mode = EvalMode::exact_mode()) {
  return classical_storage_distance(prior, ClassicalChannel::deterministic(storage.values(), storage.range_size()),
                                    fam, mode);
}

/// d(Q) <= 3/2 sqrt(|X|) E_f[d(f(X'))] for X' ~ Q and F uniform over the
/// balanced predicates, which are enumerated exactly.
inline BoundReport hashing_lemma_check(const Distribution& q) {
  const std::size_t n = q.size();
  detail::require(n >= 2 && n % 2 == 0, "hashing_lemma_check: alphabet size must be even");
  if (n > kMaxPredicateDomain) throw cap_exceeded("hashing_lemma_check: alphabet exceeds 16; use sampling");

  double total = 0.0;
  std::uint64_t count = 0;
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != n / 2) continue;
    double p1 = 0.0;
    for (std::size_t x = 0; x < n; ++x)
      if ((mask >> x) & 1U) p1 += q[x];
    total += std::abs(p1 - 0.5);
    ++count;
  }
  const double mean = total / static_cast<double>(count);
  BoundReport r = make_report("hashing-lemma", 1.5 * std::sqrt(static_cast<double>(n)) * mean, dist_from_uniform(q));
  r.vacuous = false;
  r.context["alphabet"] = n;
  r.context["mean_predicate_distance"] = mean;
  return r;
}

/// Distance for every two-universal function given distance epsilon for
/// every two-universal predicate.
inline double theorem_hash_transfer(double epsilon, std::size_t range_size) {
  detail::require(epsilon >= 0.0, "theorem_hash_transfer: epsilon must be nonnegative");
  detail::require(range_size >= 1, "theorem_hash_transfer: range must be nonempty");
  return 1.5 * std::sqrt(static_cast<double>(range_size)) * epsilon;
}

/// 3/4 2^{-(n-s-k)/2}, with n the Renyi entropy of X.
inline double pa_bound(double n, double s, double k) { return 0.75 * std::exp2(-(n - s - k) / 2.0); }

struct PaOptions {
  EvalMode mode = EvalMode::exact_mode();
  /// Random measurements per function when the key has more than one bit.
  std::size_t measurement_trials = 64;
  std::uint64_t measurement_seed = 0;
};

namespace detail {

inline unsigned bit_width_of(std::size_t v) { return static_cast<unsigned>(std::bit_width(v) - 1); }

inline void require_power_of_two(std::size_t v, const char* what) {
  require(v >= 1 && std::has_single_bit(v), what);
}

inline void fill_pa_context(BoundReport& r, double n, unsigned s, unsigned k, std::size_t d, const FunctionFamily& g) {
  r.context["n"] = n;
  r.context["s"] = s;
  r.context["k"] = k;
  r.context["d"] = d;
  r.context["family"] = g.name();
}

}  // namespace detail

/// Quantum storage: states on 2^s dimensions, hash into k bits. With k = 1
/// the distance is exact (or Monte Carlo); otherwise only a sampled lower
/// bound is reported next to the bound.
inline BoundReport pa_experiment(const StateFamily& encoding, const FunctionFamily& hash, PaOptions opt = {}) {
  detail::require(hash.domain_size() == encoding.domain_size(), "pa_experiment: hash domain mismatch");
  detail::require_power_of_two(encoding.dim(), "pa_experiment: dimension must be a power of two");
  detail::require_power_of_two(hash.range_size(), "pa_experiment: hash range must be a power of two");
  const unsigned s = detail::bit_width_of(encoding.dim());
  const unsigned k = detail::bit_width_of(hash.range_size());
  const double n = encoding.prior().renyi_entropy();

  BoundReport r;
  r.label = "pa-quantum";
  r.bound_value = pa_bound(n, s, k);
  r.relation = Relation::upper;
  if (k == 1) {
    const Estimate e = family_distance(encoding, hash, opt.mode);
    r.exact = e.value;
    r.std_error = e.std_error;
    if (!e.exact) r.tolerance = kBoundSlack + 3.0 * e.std_error;
  } else {
    const Estimate e =
        sampled_distance_lower_bound(encoding, hash, opt.mode, opt.measurement_trials, opt.measurement_seed);
    r.lower_estimate = e.value;
    r.std_error = e.std_error;
  }
  r.vacuous = r.bound_value >= 0.5;
  detail::fill_pa_context(r, n, s, k, encoding.dim(), hash);
  return r.evaluate();
}

/// Classical storage sigma: X -> {0,1}^s, exact for any key length.
inline BoundReport pa_experiment(const Distribution& prior, const FunctionTable& storage, const FunctionFamily& hash,
                                 EvalMode mode = EvalMode::exact_mode()) {
  detail::require(storage.domain_size() == prior.size(), "pa_experiment: storage domain mismatch");
  detail::require_power_of_two(storage.range_size(), "pa_experiment: storage range must be a power of two");
  detail::require_power_of_two(hash.range_size(), "pa_experiment: hash range must be a power of two");
  const unsigned s = detail::bit_width_of(storage.range_size());
  const unsigned k = detail::bit_width_of(hash.range_size());
  const double n = prior.renyi_entropy();

  const Estimate e = classical_storage_distance(prior, storage, hash, mode);
  BoundReport r;
  r.label = "pa-classical";
  r.bound_value = pa_bound(n, s, k);
  r.exact = e.value;
  r.std_error = e.std_error;
  if (!e.exact) r.tolerance = kBoundSlack + 3.0 * e.std_error;
  r.vacuous = r.bound_value >= 0.5;
  detail::fill_pa_context(r, n, s, k, storage.range_size(), hash);
  return r.evaluate();
}

}  // namespace qmem
