#pragma once

// Density matrices, state families, POVMs, Helstrom discrimination and the
// exact predicate distance of a quantum encoding.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

#include "qmem/error.hpp"
#include "qmem/functions.hpp"
#include "qmem/linalg.hpp"
#include "qmem/prob.hpp"
#include "qmem/random.hpp"

namespace qmem {

inline constexpr double kTraceTolerance = 1e-10;
inline constexpr double kPsdTolerance = 1e-10;
inline constexpr double kPovmTolerance = 1e-9;

class DensityMatrix {
 public:
  explicit DensityMatrix(HermitianMatrix h) : h_(std::move(h)) {
    detail::require(std::abs(h_.trace() - 1.0) <= kTraceTolerance, "DensityMatrix: trace must be 1");
    const auto mu = hermitian_eigenvalues(h_);
    detail::require(mu.front() >= -kPsdTolerance, "DensityMatrix: matrix is not positive semidefinite");
  }
  explicit DensityMatrix(const Matrix& m) : DensityMatrix(HermitianMatrix(m)) {}

  /// |psi><psi| / <psi|psi>
  static DensityMatrix pure(std::span<const cplx> psi) {
    double norm2 = 0.0;
    for (const auto& z : psi) norm2 += std::norm(z);
    detail::require(!psi.empty() && norm2 > 0.0, "DensityMatrix::pure: zero vector");
    HermitianMatrix p = HermitianMatrix::projector(psi);
    p *= 1.0 / norm2;
    return DensityMatrix(std::move(p));
  }

  static DensityMatrix basis_state(std::size_t dim, std::size_t index) {
    detail::require(index < dim, "DensityMatrix::basis_state: index out of range");
    std::vector<double> d(dim, 0.0);
    d[index] = 1.0;
    return DensityMatrix(HermitianMatrix::diagonal(d));
  }

  static DensityMatrix maximally_mixed(std::size_t dim) {
    detail::require(dim >= 1, "DensityMatrix::maximally_mixed: dimension must be positive");
    return DensityMatrix(HermitianMatrix::diagonal(std::vector<double>(dim, 1.0 / static_cast<double>(dim))));
  }

  /// Qubit state (I + x X + y Y + z Z) / 2 for |(x, y, z)| <= 1.
  static DensityMatrix from_bloch(double x, double y, double z) {
    detail::require(x * x + y * y + z * z <= 1.0 + 1e-12, "DensityMatrix::from_bloch: vector outside the ball");
    Matrix m{{0.5 * (1.0 + z), 0.5 * cplx(x, -y)}, {0.5 * cplx(x, y), 0.5 * (1.0 - z)}};
    return DensityMatrix(m);
  }

  const HermitianMatrix& hermitian() const { return h_; }
  const Matrix& matrix() const { return h_.matrix(); }
  std::size_t dim() const { return h_.dim(); }
  const cplx& operator()(std::size_t i, std::size_t j) const { return h_(i, j); }

  /// tr(rho^2)
  double purity() const { return trace_product(h_, h_); }

 private:
  HermitianMatrix h_;
};

inline double trace_product(const DensityMatrix& a, const DensityMatrix& b) {
  return trace_product(a.hermitian(), b.hermitian());
}

/// Prior over X together with one state per x.
class StateFamily {
 public:
  StateFamily(Distribution prior, std::vector<DensityMatrix> states)
      : prior_(std::move(prior)), states_(std::move(states)) {
    detail::require(!states_.empty(), "StateFamily: no states");
    detail::require(prior_.size() == states_.size(), "StateFamily: one state per prior entry required");
    for (const auto& s : states_)
      detail::require(s.dim() == states_.front().dim(), "StateFamily: states must share a dimension");
  }

  std::size_t dim() const { return states_.front().dim(); }
  std::size_t domain_size() const { return states_.size(); }
  const Distribution& prior() const { return prior_; }
  const DensityMatrix& state(std::size_t x) const { return states_[x]; }
  const std::vector<DensityMatrix>& states() const { return states_; }

  /// sum_x P(x) rho_x
  DensityMatrix average() const {
    HermitianMatrix acc = HermitianMatrix::zero(dim());
    for (std::size_t x = 0; x < states_.size(); ++x) acc += prior_[x] * states_[x].hermitian();
    return DensityMatrix(acc);
  }

 private:
  Distribution prior_;
  std::vector<DensityMatrix> states_;
};

class Povm {
 public:
  explicit Povm(std::vector<HermitianMatrix> elements) : elements_(std::move(elements)) {
    detail::require(!elements_.empty(), "Povm: no elements");
    const std::size_t d = elements_.front().dim();
    Matrix total(d);
    for (const auto& e : elements_) {
      detail::require(e.dim() == d, "Povm: elements must share a dimension");
      detail::require(hermitian_eigenvalues(e).front() >= -kPsdTolerance, "Povm: element is not PSD");
      total += e.matrix();
    }
    detail::require(total.max_abs_diff(Matrix::identity(d)) <= kPovmTolerance, "Povm: elements must sum to identity");
  }

  std::size_t size() const { return elements_.size(); }
  std::size_t dim() const { return elements_.front().dim(); }
  const HermitianMatrix& operator[](std::size_t w) const { return elements_[w]; }
  const std::vector<HermitianMatrix>& elements() const { return elements_; }

  /// tr(E_w rho) for every outcome w.
  std::vector<double> outcome_probabilities(const DensityMatrix& rho) const {
    detail::require(rho.dim() == dim(), "Povm: dimension mismatch");
    std::vector<double> p(size());
    for (std::size_t w = 0; w < size(); ++w) p[w] = trace_product(elements_[w], rho.hermitian());
    return p;
  }

 private:
  std::vector<HermitianMatrix> elements_;
};

namespace detail {

inline HermitianMatrix helstrom_operator(double q, const DensityMatrix& rho0, const DensityMatrix& rho1) {
  require(q >= 0.0 && q <= 1.0, "helstrom: prior q must lie in [0, 1]");
  require(rho0.dim() == rho1.dim(), "helstrom: state dimensions differ");
  return q * rho0.hermitian() - (1.0 - q) * rho1.hermitian();
}

}  // namespace detail

/// Optimal probability of telling rho0 (prior q) from rho1 (prior 1-q).
inline double helstrom_success(double q, const DensityMatrix& rho0, const DensityMatrix& rho1) {
  return 0.5 + 0.5 * abs_eigenvalue_sum(detail::helstrom_operator(q, rho0, rho1));
}

/// E_0 projects onto eigenvalues >= -1e-10 of q rho0 - (1-q) rho1.
inline Povm helstrom_povm(double q, const DensityMatrix& rho0, const DensityMatrix& rho1) {
  const EigenSystem es = hermitian_eigensystem(detail::helstrom_operator(q, rho0, rho1));
  const std::size_t d = rho0.dim();
  Matrix e0(d);
  for (std::size_t k = 0; k < d; ++k) {
    if (es.values[k] < -1e-10) continue;
    const auto v = es.vectors.column(k);
    e0 += Matrix::outer(v, v);
  }
  const HermitianMatrix p0(e0);
  return Povm({p0, HermitianMatrix::identity(d) - p0});
}

/// q tr(E_0 rho0) + (1-q) tr(E_1 rho1) for a binary POVM.
inline double success_probability(double q, const DensityMatrix& rho0, const DensityMatrix& rho1, const Povm& povm) {
  detail::require(povm.size() == 2, "success_probability: POVM must be binary");
  detail::require(q >= 0.0 && q <= 1.0, "success_probability: prior q must lie in [0, 1]");
  return q * trace_product(povm[0], rho0.hermitian()) + (1.0 - q) * trace_product(povm[1], rho1.hermitian());
}

/// Random projective binary POVM: a Haar basis split by fair coins.
inline Povm random_binary_povm(std::size_t dim, Rng& rng) {
  const Matrix u = random_unitary(dim, rng);
  Matrix e0(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    if (!rng.coin()) continue;
    const auto v = u.column(k);
    e0 += Matrix::outer(v, v);
  }
  const HermitianMatrix p0(e0);
  return Povm({p0, HermitianMatrix::identity(dim) - p0});
}

/// Best success over the two trivial POVMs and `trials` random ones.
inline double random_povm_success(double q, const DensityMatrix& rho0, const DensityMatrix& rho1, std::size_t trials,
                                  std::uint64_t seed) {
  detail::require(trials >= 1, "random_povm_success: trials must be positive");
  detail::require(q >= 0.0 && q <= 1.0, "random_povm_success: prior q must lie in [0, 1]");
  detail::require(rho0.dim() == rho1.dim(), "random_povm_success: state dimensions differ");
  Rng rng(seed);
  double best = std::max(q, 1.0 - q);
  for (std::size_t t = 0; t < trials; ++t)
    best = std::max(best, success_probability(q, rho0, rho1, random_binary_povm(rho0.dim(), rng)));
  return best;
}

// ---------------------------------------------------------------------------
// Predicate distance

namespace detail {

inline void require_predicate_on(const StateFamily& sf, const FunctionTable& f) {
  require(f.range_size() == 2, "predicate distance: function must be a predicate");
  require(f.domain_size() == sf.domain_size(), "predicate distance: domain mismatch");
}

}  // namespace detail

/// sum_{f(x)=0} P(x) rho_x - sum_{f(x)=1} P(x) rho_x
inline HermitianMatrix predicate_operator(const StateFamily& sf, const FunctionTable& f) {
  detail::require_predicate_on(sf, f);
  HermitianMatrix acc = HermitianMatrix::zero(sf.dim());
  for (std::size_t x = 0; x < sf.domain_size(); ++x) {
    const double w = f(x) == 0 ? sf.prior()[x] : -sf.prior()[x];
    if (w != 0.0) acc += w * sf.state(x).hermitian();
  }
  return acc;
}

/// d(f(X) | rho_X): half the trace norm of the predicate operator.
inline double predicate_distance(const StateFamily& sf, const FunctionTable& f) {
  return 0.5 * abs_eigenvalue_sum(predicate_operator(sf, f));
}

/// The states sigma_z = sum_{f(x)=z} P(x) rho_x / P(f(X)=z); a value with
/// zero probability has no state.
struct ConditionalStates {
  double p0 = 0.0;
  std::optional<DensityMatrix> sigma0;
  std::optional<DensityMatrix> sigma1;
};

inline ConditionalStates conditional_states(const StateFamily& sf, const FunctionTable& f) {
  detail::require_predicate_on(sf, f);
  double mass[2] = {0.0, 0.0};
  HermitianMatrix acc[2] = {HermitianMatrix::zero(sf.dim()), HermitianMatrix::zero(sf.dim())};
  for (std::size_t x = 0; x < sf.domain_size(); ++x) {
    mass[f(x)] += sf.prior()[x];
    acc[f(x)] += sf.prior()[x] * sf.state(x).hermitian();
  }
  ConditionalStates out;
  out.p0 = mass[0] / (mass[0] + mass[1]);
  if (mass[0] > 0.0) out.sigma0.emplace(acc[0] * (1.0 / mass[0]));
  if (mass[1] > 0.0) out.sigma1.emplace(acc[1] * (1.0 / mass[1]));
  return out;
}

/// Second route to predicate_distance: Helstrom on the conditional states
/// minus 1/2. A predicate that is constant on the support gives 1/2.
inline double predicate_distance_helstrom(const StateFamily& sf, const FunctionTable& f) {
  const ConditionalStates cs = conditional_states(sf, f);
  if (!cs.sigma0 || !cs.sigma1) return 0.5;
  return helstrom_success(cs.p0, *cs.sigma0, *cs.sigma1) - 0.5;
}

/// d(F(X) | rho_X, F): the average of predicate_distance over the family.
inline Estimate family_distance(const StateFamily& sf, const FunctionFamily& fam,
                                EvalMode mode = EvalMode::exact_mode()) {
  detail::require(fam.range_size() == 2, "family_distance: family must consist of predicates");
  detail::require(fam.domain_size() == sf.domain_size(), "family_distance: domain mismatch");
  if (mode.exact) {
    Estimate e;
    fam.for_each([&](const FunctionTable& f, double w) {
      if (w > 0.0) e.value += w * predicate_distance(sf, f);
    });
    return e;
  }
  Rng rng(mode.seed);
  RunningMean mean;
  for (std::size_t i = 0; i < mode.samples; ++i) mean.add(predicate_distance(sf, fam.sample(rng)));
  return mean.estimate();
}

/// Four pure qubit states at the vertices of a regular tetrahedron on the
/// Bloch sphere, uniform prior.
inline StateFamily tetrahedron_family() {
  const double r = std::sqrt(8.0) / 3.0;
  std::vector<DensityMatrix> states;
  states.push_back(DensityMatrix::from_bloch(0.0, 0.0, 1.0));
  for (int j = 0; j < 3; ++j) {
    const double phi = 2.0 * std::numbers::pi * j / 3.0;
    states.push_back(DensityMatrix::from_bloch(r * std::cos(phi), r * std::sin(phi), -1.0 / 3.0));
  }
  return StateFamily(Distribution::uniform(4), std::move(states));
}

enum class Purity { pure, mixed };

/// Pure states from normalized complex Gaussian vectors, or mixed states
/// G G^dagger / tr(G G^dagger) from a complex Gaussian G.
inline DensityMatrix random_density_matrix(std::size_t dim, Purity purity, Rng& rng) {
  if (purity == Purity::pure) return DensityMatrix::pure(random_unit_vector(dim, rng));
  const Matrix g = random_gaussian_matrix(dim, rng);
  Matrix w = g * g.adjoint();
  w *= 1.0 / w.trace().real();
  return DensityMatrix(w);
}

inline StateFamily random_state_family(std::size_t dim, std::size_t domain_size, Purity purity, std::uint64_t seed,
                                       bool random_prior = false) {
  detail::require(dim >= 1 && domain_size >= 1, "random_state_family: dimension and domain must be positive");
  Rng rng(seed);
  std::vector<double> weights(domain_size, 1.0);
  if (random_prior)
    for (auto& w : weights) w = -std::log(1.0 - rng.uniform());
  std::vector<DensityMatrix> states;
  states.reserve(domain_size);
  for (std::size_t x = 0; x < domain_size; ++x) states.push_back(random_density_matrix(dim, purity, rng));
  return StateFamily(Distribution::normalized(std::move(weights)), std::move(states));
}

/// rho_x = sum_s P(s|x) |s><s| in dimension `dim` >= number of storage values.
inline StateFamily classical_embedding(const Distribution& prior, const ClassicalChannel& storage, std::size_t dim) {
  detail::require(prior.size() == storage.input_size(), "classical_embedding: alphabet mismatch");
  detail::require(dim >= storage.output_size(), "classical_embedding: dimension too small for the storage alphabet");
  std::vector<DensityMatrix> states;
  for (std::size_t x = 0; x < prior.size(); ++x) {
    std::vector<double> diag(dim, 0.0);
    for (std::size_t s = 0; s < storage.output_size(); ++s) diag[s] = storage(x, s);
    states.emplace_back(HermitianMatrix::diagonal(diag));
  }
  return StateFamily(prior, std::move(states));
}

/// Every state replaced by U rho U^dagger.
inline StateFamily conjugated(const StateFamily& sf, const Matrix& u) {
  detail::require(u.dim() == sf.dim(), "conjugated: dimension mismatch");
  const Matrix ud = u.adjoint();
  std::vector<DensityMatrix> states;
  for (const auto& rho : sf.states()) states.emplace_back(u * rho.matrix() * ud);
  return StateFamily(sf.prior(), std::move(states));
}

/// Lower bound on d(g(X) | rho_X) for a function with any range: the best
/// classical distance over `trials` random rank-one basis measurements
/// (plus not measuring at all).
inline double sampled_function_distance(const StateFamily& sf, const FunctionTable& g, std::size_t trials, Rng& rng) {
  detail::require(g.domain_size() == sf.domain_size(), "sampled distance: domain mismatch");
  const std::size_t r = g.range_size();
  const std::size_t d = sf.dim();
  std::vector<double> pz(r, 0.0);
  for (std::size_t x = 0; x < sf.domain_size(); ++x) pz[g(x)] += sf.prior()[x];
  double best = dist_from_uniform(Distribution::normalized(pz));
  for (std::size_t t = 0; t < trials; ++t) {
    const Matrix u = random_unitary(d, rng);
    std::vector<double> p(r * d, 0.0);
    for (std::size_t x = 0; x < sf.domain_size(); ++x) {
      const double px = sf.prior()[x];
      if (px == 0.0) continue;
      for (std::size_t w = 0; w < d; ++w) {
        const auto v = u.column(w);
        cplx amp = 0.0;
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j) amp += std::conj(v[i]) * sf.state(x)(i, j) * v[j];
        p[g(x) * d + w] += px * std::max(0.0, amp.real());
      }
    }
    double total = 0.0;
    for (double v : p) total += v;
    for (double& v : p) v /= total;
    best = std::max(best, cond_dist_from_uniform(JointDistribution(r, d, std::move(p))));
  }
  return best;
}

/// Family average of sampled_function_distance: a lower bound on
/// d(G(X) | rho_X, G) when G has more than two outputs.
inline Estimate sampled_distance_lower_bound(const StateFamily& sf, const FunctionFamily& fam, EvalMode mode,
                                             std::size_t trials, std::uint64_t seed) {
  detail::require(fam.domain_size() == sf.domain_size(), "sampled distance: domain mismatch");
  Rng measure(seed, 1);
  if (mode.exact) {
    Estimate e;
    fam.for_each([&](const FunctionTable& g, double w) {
      if (w > 0.0) e.value += w * sampled_function_distance(sf, g, trials, measure);
    });
    return e;
  }
  Rng draw(mode.seed);
  RunningMean mean;
  for (std::size_t i = 0; i < mode.samples; ++i)
    mean.add(sampled_function_distance(sf, fam.sample(draw), trials, measure));
  return mean.estimate();
}

}  // namespace qmem
