#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qmem/bounds.hpp"

using namespace qmem;

namespace {

const double kTetra = 1.0 / (2.0 * std::sqrt(3.0));

Distribution random_prior(std::size_t n, Rng& rng) {
  std::vector<double> w(n);
  for (auto& v : w) v = -std::log(1.0 - rng.uniform());
  return Distribution::normalized(std::move(w));
}

// Sparse, peaked or flat, so both small and large distances show up.
Distribution random_hashing_input(std::size_t n, Rng& rng, int shape) {
  std::vector<double> w(n, 0.0);
  switch (shape % 3) {
    case 0:
      for (auto& v : w) v = -std::log(1.0 - rng.uniform());
      break;
    case 1:
      for (auto& v : w) v = rng.coin() ? rng.uniform() : 0.0;
      w[rng.below(n)] += 0.1;
      break;
    default:
      for (auto& v : w) v = std::pow(rng.uniform(), 6.0);
      w[rng.below(n)] += 1e-3;
  }
  return Distribution::normalized(std::move(w));
}

StateFamily identical_states(std::size_t n, const DensityMatrix& rho) {
  return StateFamily(Distribution::uniform(n), std::vector<DensityMatrix>(n, rho));
}

}  // namespace

TEST(BoundReport, Evaluate) {
  EXPECT_TRUE(make_report("a", 0.3, 0.3 + 5e-10).satisfied);
  EXPECT_FALSE(make_report("a", 0.3, 0.3 + 5e-9).satisfied);
  EXPECT_TRUE(make_report("a", 0.6, 0.1).vacuous);
  EXPECT_FALSE(make_report("a", 0.4, 0.1).vacuous);
  EXPECT_TRUE(make_report("a", 0.2, 0.3, Relation::lower).satisfied);
  EXPECT_FALSE(make_report("a", 0.2, 0.3, Relation::equal, 1e-3).satisfied);
  EXPECT_FALSE(make_report("a", 0.2, std::nullopt).satisfied);
}

TEST(MainschurBound, Examples) {
  const auto balanced = FunctionFamily::uniform_balanced(4);
  EXPECT_NEAR(mainschur_bound(tetrahedron_family(), balanced), kTetra, 1e-12);

  // tr(rho rho') = 1 everywhere: diagonal 1/4 cancels the off-diagonal -1/4.
  const auto same = identical_states(4, DensityMatrix::basis_state(2, 0));
  EXPECT_NEAR(mainschur_bound(same, balanced), 0.0, 1e-12);
  EXPECT_NEAR(family_distance(same, balanced).value, 0.0, 1e-12);
  // uniform-all has lambda = 0 off the diagonal
  EXPECT_NEAR(mainschur_bound(same, FunctionFamily::uniform_all(4, 2)), 0.5 * std::sqrt(2.0) * 0.5, 1e-12);

  for (std::size_t d = 1; d <= 4; ++d) {
    const StateFamily single(Distribution::uniform(1), {DensityMatrix::basis_state(d, 0)});
    const auto fam = FunctionFamily::uniform_all(1, 2);
    EXPECT_NEAR(mainschur_bound(single, fam), 0.5 * std::sqrt(static_cast<double>(d)), 1e-12);
    EXPECT_NEAR(family_distance(single, fam).value, 0.5, 1e-12);
  }
  EXPECT_THROW(mainschur_bound(tetrahedron_family(), FunctionFamily::uniform_balanced(6)), validation_error);
}

TEST(BinhashBound, Examples) {
  for (unsigned n = 1; n <= 6; ++n)
    for (unsigned s = 0; s <= n; ++s)
      EXPECT_NEAR(binhash_bound(Distribution::uniform(std::size_t{1} << n), std::size_t{1} << s),
                  0.5 * std::exp2(-(static_cast<double>(n) - s) / 2.0), 1e-12);
  EXPECT_DOUBLE_EQ(binhash_bound(Distribution::point_mass(5, 2), 1), 0.5);
  const double b = binhash_bound(Distribution::uniform(4), 2);
  EXPECT_NEAR(b, 0.5 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(b, 0.35355, 1e-5);
  EXPECT_GE(b, kTetra);
  EXPECT_THROW(binhash_bound(Distribution::uniform(4), 0), validation_error);
}

TEST(BinhashBound, RenyiForm) {
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const Distribution p = random_prior(2 + rng.below(30), rng);
    const unsigned s = static_cast<unsigned>(rng.below(4));
    EXPECT_NEAR(binhash_bound(p, std::size_t{1} << s), 0.5 * std::exp2(-(p.renyi_entropy() - s) / 2.0), 1e-12);
  }
}

TEST(ClassicalLowerBound, Examples) {
  EXPECT_EQ(classical_lower_bound(2, 1), Rational(1, 4));
  EXPECT_EQ(classical_lower_bound(3, 1), Rational(3, 16));
  EXPECT_EQ(classical_lower_bound(4, 1), Rational(35, 256));
  EXPECT_EQ(classical_lower_bound(5, 1), Rational(6435, 65536));
  EXPECT_EQ(classical_lower_bound(7, 5), Rational(3, 16));
  EXPECT_THROW(classical_lower_bound(2, 2), validation_error);
  EXPECT_THROW(classical_lower_bound(2, 3), validation_error);
  EXPECT_THROW(classical_lower_bound(20, 3), cap_exceeded);
  EXPECT_NO_THROW(classical_lower_bound(20, 4));
}

TEST(ClassicalLowerBound, ApproachesAsymptoticForm) {
  double previous = 1.0;
  for (unsigned gap = 1; gap <= 12; ++gap) {
    const double ratio = to_double(classical_lower_bound(gap + 2, 2)) /
                         (std::exp2(-static_cast<double>(gap) / 2.0) / std::sqrt(2.0 * std::numbers::pi));
    EXPECT_LT(ratio, 1.0);
    EXPECT_LT(std::abs(ratio - 1.0), previous);
    previous = std::abs(ratio - 1.0);
  }
  EXPECT_LT(previous, 1e-3);
}

TEST(BalancedStorage, Preimages) {
  const auto s21 = balanced_storage(2, 1);
  EXPECT_EQ(s21, FunctionTable(2, {0, 1, 0, 1}));
  for (unsigned n = 1; n <= 10; ++n)
    for (unsigned s = 0; s < n; ++s)
      for (auto size : balanced_storage(n, s).preimage_sizes()) EXPECT_EQ(size, std::size_t{1} << (n - s));
  EXPECT_THROW(balanced_storage(3, 3), validation_error);
  EXPECT_THROW(balanced_storage(17, 1), cap_exceeded);
}

TEST(BalancedStorage, ExactDistanceExamples) {
  const auto d21 = classical_storage_distance(Distribution::uniform(4), balanced_storage(2, 1),
                                              FunctionFamily::uniform_all(4, 2));
  EXPECT_NEAR(d21.value, 0.25, 1e-12);
  const auto d31 = classical_storage_distance(Distribution::uniform(8), balanced_storage(3, 1),
                                              FunctionFamily::uniform_all(8, 2));
  EXPECT_NEAR(d31.value, 3.0 / 16.0, 1e-12);
}

TEST(BalancedStorage, LowerBoundIsExactForSmallN) {
  for (unsigned n = 1; n <= 4; ++n)
    for (unsigned s = 0; s < n; ++s) {
      const std::size_t nx = std::size_t{1} << n;
      const double exact =
          classical_storage_distance(Distribution::uniform(nx), balanced_storage(n, s), FunctionFamily::uniform_all(nx, 2))
              .value;
      EXPECT_NEAR(exact, to_double(classical_lower_bound(n, s)), 1e-12) << "n=" << n << " s=" << s;
    }
}

TEST(ClassicalLowerBound, SandwichAgainstBinhash) {
  for (unsigned n = 2; n <= 4; ++n)
    for (unsigned s = 1; s < n; ++s)
      EXPECT_GE(to_double(classical_lower_bound(n, s)) + 1e-15,
                binhash_bound(Distribution::uniform(std::size_t{1} << n), std::size_t{1} << (s - 1)))
          << "n=" << n << " s=" << s;
  // equality at n - s = 1
  EXPECT_NEAR(to_double(classical_lower_bound(2, 1)), binhash_bound(Distribution::uniform(4), 1), 1e-15);
}

TEST(Dominance, PropertyExactBelowMainschurBelowBinhash) {
  Rng rng(101);
  int universal_cases = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t d = 1 + rng.below(4);
    const unsigned bits = 1 + static_cast<unsigned>(rng.below(3));
    const std::size_t nx = std::size_t{1} << bits;
    const Purity purity = rng.coin() ? Purity::pure : Purity::mixed;
    const StateFamily sf = random_state_family(d, nx, purity, rng.next_u64(), t % 2 == 1);

    FunctionFamily fam = FunctionFamily::uniform_all(nx, 2);
    switch (t % 5) {
      case 1: fam = FunctionFamily::uniform_balanced(nx); break;
      case 2: fam = FunctionFamily::affine_gf2(bits, 1); break;
      case 3: fam = FunctionFamily::inner_product(bits); break;
      case 4: {
        std::vector<FunctionTable> tables;
        for (int i = 0; i < 3; ++i) {
          std::vector<std::uint32_t> v(nx);
          for (auto& y : v) y = static_cast<std::uint32_t>(rng.coin());
          tables.emplace_back(2, std::move(v));
        }
        fam = FunctionFamily::uniform_over(std::move(tables));
        break;
      }
      default: break;
    }
    const double exact = family_distance(sf, fam).value;
    const double schur = mainschur_bound(sf, fam);
    EXPECT_LE(exact, schur + 1e-9) << "instance " << t << " " << fam.name();
    if (is_two_universal(fam).two_universal) {
      ++universal_cases;
      EXPECT_LE(schur, binhash_bound(sf.prior(), d) + 1e-9) << "instance " << t << " " << fam.name();
    }
  }
  EXPECT_GE(universal_cases, 80);
}

TEST(HashingLemma, Examples) {
  const auto u = hashing_lemma_check(Distribution::uniform(6));
  EXPECT_NEAR(*u.exact, 0.0, 1e-15);
  EXPECT_NEAR(u.bound_value, 0.0, 1e-15);
  EXPECT_TRUE(u.satisfied);

  const auto pm = hashing_lemma_check(Distribution::point_mass(2, 0));
  EXPECT_DOUBLE_EQ(*pm.exact, 0.5);
  EXPECT_NEAR(pm.bound_value, 1.5 * std::sqrt(2.0) * 0.5, 1e-12);
  EXPECT_NEAR(pm.bound_value, 1.0607, 1e-4);

  const auto eq = hashing_lemma_check(Distribution(std::vector<double>{0.5, 0.5, 0.0, 0.0}));
  EXPECT_DOUBLE_EQ(*eq.exact, 0.5);
  EXPECT_NEAR(eq.bound_value, 0.5, 1e-12);
  EXPECT_NEAR(eq.context["mean_predicate_distance"].get<double>(), 1.0 / 6.0, 1e-12);
  EXPECT_TRUE(eq.satisfied);

  EXPECT_THROW(hashing_lemma_check(Distribution::uniform(3)), validation_error);
  EXPECT_THROW(hashing_lemma_check(Distribution::uniform(18)), cap_exceeded);
}

TEST(HashingLemma, PropertyRandomDistributions) {
  Rng rng(202);
  double worst = 0.0;
  for (std::size_t n : {2u, 4u, 6u, 8u, 16u})
    for (int t = 0; t < 500; ++t) {
      const auto r = hashing_lemma_check(random_hashing_input(n, rng, t));
      ASSERT_TRUE(r.satisfied) << "n=" << n << " instance " << t;
      if (r.bound_value > 0.0) worst = std::max(worst, *r.exact / r.bound_value);
    }
  EXPECT_LE(worst, 1.0 + 1e-9);
}

TEST(TheoremHashTransfer, Examples) {
  EXPECT_EQ(theorem_hash_transfer(0.0, 8), 0.0);
  EXPECT_NEAR(theorem_hash_transfer(0.1, 2), 0.15 * std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(theorem_hash_transfer(0.1, 2), 0.2121, 1e-4);
  EXPECT_THROW(theorem_hash_transfer(-0.1, 2), validation_error);
  for (unsigned n = 2; n <= 20; n += 3)
    for (unsigned s = 0; s < n; ++s)
      for (unsigned k = 1; k <= 3; ++k) {
        const double eps = binhash_bound(Distribution::uniform(std::size_t{1} << n), std::size_t{1} << s);
        EXPECT_NEAR(theorem_hash_transfer(eps, std::size_t{1} << k), pa_bound(n, s, k), 1e-12);
      }
}

TEST(PaBound, Examples) {
  EXPECT_DOUBLE_EQ(pa_bound(3, 2, 1), 0.75);
  EXPECT_DOUBLE_EQ(pa_bound(4, 1, 1), 0.375);
  EXPECT_NEAR(pa_bound(20, 5, 5), 0.75 / 32.0, 1e-15);
  EXPECT_NEAR(pa_bound(20, 5, 5), 0.02344, 1e-5);
  EXPECT_GT(pa_bound(1, 1, 1), 0.75);
}

TEST(PaExperiment, ClassicalExample) {
  const auto r = pa_experiment(Distribution::uniform(4), balanced_storage(2, 1), FunctionFamily::uniform_all(4, 2));
  EXPECT_EQ(r.label, "pa-classical");
  EXPECT_NEAR(*r.exact, 0.25, 1e-12);
  EXPECT_DOUBLE_EQ(r.bound_value, 0.75);
  EXPECT_TRUE(r.satisfied);
  EXPECT_TRUE(r.vacuous);
  EXPECT_EQ(r.context["s"].get<unsigned>(), 1u);
  EXPECT_EQ(r.context["k"].get<unsigned>(), 1u);
  EXPECT_DOUBLE_EQ(r.context["n"].get<double>(), 2.0);
  EXPECT_EQ(r.context["d"].get<std::size_t>(), 2u);
}

TEST(PaExperiment, ClassicalMultiBitKey) {
  const auto r = pa_experiment(Distribution::uniform(16), balanced_storage(4, 1), FunctionFamily::affine_gf2(4, 2));
  ASSERT_TRUE(r.exact.has_value());
  EXPECT_LE(*r.exact, r.bound_value);
  EXPECT_DOUBLE_EQ(r.bound_value, pa_bound(4, 1, 2));
}

TEST(PaExperiment, PropertyQuantumRandomEncodings) {
  Rng rng(303);
  const auto hash = FunctionFamily::affine_gf2(4, 1);
  for (int t = 0; t < 50; ++t) {
    const auto sf = random_state_family(2, 16, Purity::pure, rng.next_u64());
    const auto r = pa_experiment(sf, hash);
    EXPECT_EQ(r.label, "pa-quantum");
    EXPECT_DOUBLE_EQ(r.bound_value, 0.375);
    ASSERT_TRUE(r.exact.has_value());
    EXPECT_LE(*r.exact, 0.375 + 1e-9) << "instance " << t;
    EXPECT_TRUE(r.satisfied);
    EXPECT_FALSE(r.vacuous);
  }
}

TEST(PaExperiment, IdenticalEncoding) {
  const auto same = identical_states(16, DensityMatrix::maximally_mixed(2));
  const auto balanced = pa_experiment(same, FunctionFamily::uniform_balanced(16));
  EXPECT_NEAR(*balanced.exact, 0.0, 1e-12);
  EXPECT_TRUE(balanced.satisfied);
  // the two constant maps (A = 0) each contribute 1/2
  const auto affine = pa_experiment(same, FunctionFamily::affine_gf2(4, 1));
  EXPECT_NEAR(*affine.exact, 1.0 / 32.0, 1e-12);
  EXPECT_TRUE(affine.satisfied);
}

TEST(PaExperiment, MultiBitQuantumKeyReportsOnlyALowerEstimate) {
  const auto sf = random_state_family(2, 16, Purity::pure, 9);
  const auto r = pa_experiment(sf, FunctionFamily::affine_gf2(4, 2), PaOptions{EvalMode::exact_mode(), 8, 1});
  EXPECT_FALSE(r.exact.has_value());
  ASSERT_TRUE(r.lower_estimate.has_value());
  EXPECT_GE(*r.lower_estimate, 0.0);
  EXPECT_DOUBLE_EQ(r.bound_value, pa_bound(4, 1, 2));
  EXPECT_TRUE(r.satisfied);
}

TEST(PaExperiment, Validation) {
  EXPECT_THROW(pa_experiment(tetrahedron_family(), FunctionFamily::affine_gf2(3, 1)), validation_error);
  EXPECT_THROW(pa_experiment(random_state_family(3, 4, Purity::pure, 1), FunctionFamily::affine_gf2(2, 1)),
               validation_error);
  EXPECT_THROW(pa_experiment(Distribution::uniform(4), FunctionTable(3, {0, 1, 2, 0}), FunctionFamily::affine_gf2(2, 1)),
               validation_error);
}
