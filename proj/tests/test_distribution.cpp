// Copyright 2026 The lsbs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <memory>
#include <numeric>

#include <gtest/gtest.h>
#include <omp.h>

#include "lsbs/distribution.hpp"
#include "lsbs/haar.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace lsbs;

namespace {

std::vector<unsigned> occ(const FockState& s) { return {s.occupations().begin(), s.occupations().end()}; }

void expect_matches(const OutputDistribution& d, const std::map<oracle::Occupation, double>& ref, double tol) {
    double covered = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        const auto key = occ(d.state(i));
        const auto it = ref.find(key);
        const double expected = it == ref.end() ? 0.0 : it->second;
        covered += expected;
        EXPECT_NEAR(d.probability(i), expected, tol) << d.state(i).to_string();
    }
    EXPECT_NEAR(covered, 1.0, 1e-9);
}

OutputDistribution uniform_over(std::size_t states) {
    auto basis = std::make_shared<const FockBasis>(states, 1, Family::collision_free, 1000);
    return OutputDistribution(basis, std::vector<double>(states, 1.0 / states), 1.0, true);
}

}  // namespace

TEST(BsProbability, IdentityPassesPhotonsThrough) {
    const UnitaryMatrix id = UnitaryMatrix::identity(4);
    const FockState s = FockState::parse("1:0:1:1");
    EXPECT_NEAR(bs_probability(id, s, s), 1.0, 1e-15);
    EXPECT_EQ(bs_probability(id, s, FockState::parse("1:1:1:0")), 0.0);
    EXPECT_NEAR(distinguishable_probability(id, s, s), 1.0, 1e-15);
}

TEST(BsProbability, HongOuMandel) {
    const UnitaryMatrix bs = UnitaryMatrix::balanced_beam_splitter();
    const FockState one_one = FockState::parse("1:1");
    EXPECT_NEAR(bs_probability(bs, one_one, one_one), 0.0, 1e-12);
    EXPECT_NEAR(distinguishable_probability(bs, one_one, one_one), 0.5, 1e-12);
    EXPECT_NEAR(bs_probability(bs, one_one, FockState::parse("2:0")), 0.5, 1e-12);
    EXPECT_NEAR(distinguishable_probability(bs, one_one, FockState::parse("0:2")), 0.25, 1e-12);
}

TEST(BsProbability, MatchesAmplitudeExpansion) {
    for (std::size_t m = 2; m <= 4; ++m) {
        const UnitaryMatrix u = haar_random_unitary(m, 50 + m);
        for (const auto& input : {FockState::leading_ones(m, 2), FockState::from_modes(m, std::vector<Mode>{1, 1})}) {
            const auto ref = oracle::bosonic_probabilities(u, occ(input));
            for (const auto& [out, p] : ref) EXPECT_NEAR(bs_probability(u, input, FockState(out)), p, 1e-10);
            const auto cl = oracle::classical_probabilities(u, occ(input));
            for (const auto& [out, p] : cl) EXPECT_NEAR(distinguishable_probability(u, input, FockState(out)), p, 1e-10);
        }
    }
    const UnitaryMatrix u = haar_random_unitary(4, 9);
    const FockState input = FockState::parse("2:0:1:1");
    for (const auto& [out, p] : oracle::bosonic_probabilities(u, occ(input)))
        EXPECT_NEAR(bs_probability(u, input, FockState(out)), p, 1e-10);
    for (const auto& [out, p] : oracle::classical_probabilities(u, occ(input)))
        EXPECT_NEAR(distinguishable_probability(u, input, FockState(out)), p, 1e-10);
}

TEST(BsProbability, SinglePhotonHasNoStatistics) {
    const UnitaryMatrix u = haar_random_unitary(5, 3);
    const FockState in = FockState::parse("0:0:1:0:0");
    for (std::size_t j = 0; j < 5; ++j) {
        const FockState out = FockState::from_modes(5, std::vector<Mode>{static_cast<Mode>(j)});
        EXPECT_NEAR(bs_probability(u, in, out), distinguishable_probability(u, in, out), 1e-15);
        EXPECT_NEAR(bs_probability(u, in, out), std::norm(u(j, 2)), 1e-15);
    }
}

TEST(BsProbability, PhotonMismatchRejected) {
    const UnitaryMatrix u = haar_random_unitary(3, 3);
    EXPECT_LSBS_ERROR(bs_probability(u, FockState::parse("1:1:0"), FockState::parse("1:0:0")),
                      ErrorCategory::invalid_configuration);
    EXPECT_LSBS_ERROR(bs_probability(u, FockState::parse("1:1"), FockState::parse("1:1")),
                      ErrorCategory::invalid_configuration);
}

TEST(FullDistribution, FullFockIsComplete) {
    for (std::size_t m = 2; m <= 8; ++m) {
        for (std::size_t n = 1; n <= 4 && n <= m; ++n) {
            const UnitaryMatrix u = haar_random_unitary(m, 10 * m + n);
            for (ParticleModel model : {ParticleModel::indistinguishable, ParticleModel::distinguishable}) {
                const auto d = full_distribution(u, FockState::leading_ones(m, n), Family::full_fock, model, false);
                EXPECT_NEAR(d.raw_mass(), 1.0, 1e-9) << m << " " << n;
                EXPECT_FALSE(d.renormalized());
            }
        }
    }
}

TEST(FullDistribution, CollisionFreeMassComplementsCollisions) {
    const UnitaryMatrix u = haar_random_unitary(20, 4);
    const FockState in = FockState::leading_ones(20, 3);
    const auto cf = full_distribution(u, in, Family::collision_free, ParticleModel::indistinguishable, false);
    const auto full = full_distribution(u, in, Family::full_fock, ParticleModel::indistinguishable, false);
    double collisions = 0.0;
    for (std::size_t i = 0; i < full.size(); ++i)
        if (!full.state(i).collision_free()) collisions += full.probability(i);
    EXPECT_LT(cf.raw_mass(), 1.0);
    EXPECT_LT(1.0 - cf.raw_mass(), 0.5);
    EXPECT_NEAR(1.0 - cf.raw_mass(), collisions, 1e-12);
    EXPECT_EQ(cf.size(), 1140u);
    const auto renorm = cf.renormalize();
    EXPECT_TRUE(renorm.renormalized());
    EXPECT_DOUBLE_EQ(renorm.raw_mass(), cf.raw_mass());
}

TEST(FullDistribution, IdentityDistinguishableIsPointMass) {
    const FockState in = FockState::parse("0:1:1:0:1");
    const auto d = full_distribution(UnitaryMatrix::identity(5), in, Family::collision_free,
                                     ParticleModel::distinguishable, true);
    EXPECT_NEAR(d.probability_of(in), 1.0, 1e-15);
}

TEST(FullDistribution, SinglePhotonModelsAgree) {
    const UnitaryMatrix u = haar_random_unitary(6, 21);
    const FockState in = FockState::leading_ones(6, 1);
    const auto a = full_distribution(u, in, Family::collision_free, ParticleModel::indistinguishable, true);
    const auto b = full_distribution(u, in, Family::collision_free, ParticleModel::distinguishable, true);
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a.probability(i), b.probability(i), 1e-15);
}

TEST(FullDistribution, CapEnforced) {
    const UnitaryMatrix u = haar_random_unitary(30, 1);
    EXPECT_LSBS_ERROR(full_distribution(u, FockState::leading_ones(30, 5), Family::collision_free,
                                        ParticleModel::indistinguishable, true, DistributionOptions{1000}),
                      ErrorCategory::instance_too_large);
}

TEST(FullDistribution, IndependentOfThreadCount) {
    const UnitaryMatrix u = haar_random_unitary(12, 6);
    const FockState in = FockState::leading_ones(12, 4);
    omp_set_num_threads(1);
    const auto a = full_distribution(u, in, Family::full_fock, ParticleModel::indistinguishable, true);
    omp_set_num_threads(4);
    const auto b = full_distribution(u, in, Family::full_fock, ParticleModel::indistinguishable, true);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a.probability(i), b.probability(i));
}

TEST(LossyDistribution, NoLossEqualsRenormalizedCollisionFree) {
    const UnitaryMatrix u = haar_random_unitary(7, 2);
    const FockState in = FockState::leading_ones(7, 3);
    const auto a = lossy_distribution(u, in, {}, ParticleModel::indistinguishable);
    const auto b = full_distribution(u, in, Family::collision_free, ParticleModel::indistinguishable, true);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a.probability(i), b.probability(i), 1e-15);
}

TEST(LossyDistribution, InputLossThroughIdentity) {
    const auto d = lossy_distribution(UnitaryMatrix::identity(4), FockState::parse("1:1:0:0"), LossConfig{1, 0},
                                      ParticleModel::indistinguishable);
    EXPECT_NEAR(d.probability_of(FockState::parse("1:0:0:0")), 0.5, 1e-15);
    EXPECT_NEAR(d.probability_of(FockState::parse("0:1:0:0")), 0.5, 1e-15);
    EXPECT_EQ(d.n_detected(), 1u);
}

TEST(LossyDistribution, OutputLossMatchesMarginalisation) {
    const UnitaryMatrix u = haar_random_unitary(8, 31);
    const FockState in = FockState::leading_ones(8, 3);
    for (bool bosonic : {true, false}) {
        const auto model = bosonic ? ParticleModel::indistinguishable : ParticleModel::distinguishable;
        const auto d = lossy_distribution(u, in, LossConfig{0, 1}, model);
        expect_matches(d, oracle::lossy_marginal(u, occ(in), 0, 1, bosonic), 1e-12);
    }
}

TEST(LossyDistribution, MixedLossesMatchMarginalisation) {
    const UnitaryMatrix u = haar_random_unitary(7, 32);
    for (auto [heralded, loss] : {std::pair{FockState::leading_ones(7, 3), LossConfig{1, 0}},
                                  std::pair{FockState::leading_ones(7, 4), LossConfig{1, 1}},
                                  std::pair{FockState::leading_ones(7, 4), LossConfig{2, 0}},
                                  std::pair{FockState::leading_ones(7, 4), LossConfig{0, 2}},
                                  std::pair{FockState::parse("2:1:1:0:0:0:0"), LossConfig{0, 1}},
                                  std::pair{FockState::parse("2:1:0:0:0:0:0"), LossConfig{1, 0}}}) {
        const auto d = lossy_distribution(u, heralded, loss, ParticleModel::indistinguishable);
        expect_matches(d, oracle::lossy_marginal(u, occ(heralded), loss.n_lost_in, loss.n_lost_out, true), 1e-12);
        EXPECT_NEAR(std::accumulate(d.probabilities().begin(), d.probabilities().end(), 0.0), 1.0, 1e-9);
    }
}

TEST(LossyDistribution, LossesMustLeaveAPhoton) {
    const UnitaryMatrix u = haar_random_unitary(5, 1);
    EXPECT_LSBS_ERROR(lossy_distribution(u, FockState::leading_ones(5, 2), LossConfig{1, 1},
                                         ParticleModel::indistinguishable),
                      ErrorCategory::invalid_configuration);
}

TEST(CombinedLoss, UniformMixtureOfSplits) {
    const UnitaryMatrix u = haar_random_unitary(8, 40);
    const FockState her = FockState::leading_ones(8, 4);
    const auto mix = combined_loss_distribution(u, her, 1, ParticleModel::indistinguishable);
    const auto in = lossy_distribution(u, her, LossConfig{1, 0}, ParticleModel::indistinguishable);
    const auto out = lossy_distribution(u, her, LossConfig{0, 1}, ParticleModel::indistinguishable);
    for (std::size_t i = 0; i < mix.size(); ++i)
        EXPECT_NEAR(mix.probability(i), 0.5 * (in.probability(i) + out.probability(i)), 1e-15);
    // weights[k] belongs to k input losses
    const std::vector<double> weights = {3.0, 1.0};
    const auto weighted = combined_loss_distribution(u, her, 1, ParticleModel::indistinguishable, weights);
    for (std::size_t i = 0; i < mix.size(); ++i)
        EXPECT_NEAR(weighted.probability(i), 0.25 * in.probability(i) + 0.75 * out.probability(i), 1e-15);
    const std::vector<double> bad = {1.0};
    EXPECT_LSBS_ERROR(combined_loss_distribution(u, her, 1, ParticleModel::indistinguishable, bad),
                      ErrorCategory::invalid_configuration);
}

TEST(TotalVariation, Axioms) {
    const UnitaryMatrix u = haar_random_unitary(6, 12);
    std::vector<OutputDistribution> ds;
    for (const char* s : {"1:1:1:0:0:0", "2:1:0:0:0:0", "0:0:0:1:1:1"})
        ds.push_back(full_distribution(u, FockState::parse(s), Family::full_fock, ParticleModel::indistinguishable, true));
    for (const auto& p : ds) {
        EXPECT_NEAR(total_variation_distance(p, p), 0.0, 1e-15);
        for (const auto& q : ds) {
            const double d = total_variation_distance(p, q);
            EXPECT_GE(d, 0.0);
            EXPECT_LE(d, 1.0);
            EXPECT_DOUBLE_EQ(d, total_variation_distance(q, p));
            for (const auto& r : ds) EXPECT_LE(d, total_variation_distance(p, r) + total_variation_distance(r, q) + 1e-15);
        }
    }
    const UnitaryMatrix id = UnitaryMatrix::identity(4);
    const auto a = full_distribution(id, FockState::parse("1:1:0:0"), Family::collision_free,
                                     ParticleModel::indistinguishable, true);
    const auto b = full_distribution(id, FockState::parse("0:0:1:1"), Family::collision_free,
                                     ParticleModel::indistinguishable, true);
    EXPECT_DOUBLE_EQ(total_variation_distance(a, b), 1.0);
}

TEST(TotalVariation, RejectsMismatchedFamilies) {
    const UnitaryMatrix u = haar_random_unitary(5, 2);
    const FockState in = FockState::leading_ones(5, 2);
    const auto cf = full_distribution(u, in, Family::collision_free, ParticleModel::indistinguishable, true);
    const auto full = full_distribution(u, in, Family::full_fock, ParticleModel::indistinguishable, true);
    const auto raw = full_distribution(u, in, Family::collision_free, ParticleModel::indistinguishable, false);
    const auto three = full_distribution(u, FockState::leading_ones(5, 3), Family::collision_free,
                                         ParticleModel::indistinguishable, true);
    EXPECT_LSBS_ERROR(total_variation_distance(cf, full), ErrorCategory::invalid_comparison);
    EXPECT_LSBS_ERROR(total_variation_distance(cf, three), ErrorCategory::invalid_comparison);
    EXPECT_LSBS_ERROR(total_variation_distance(cf, raw), ErrorCategory::invalid_comparison);
}

TEST(Sampling, PointMass) {
    const FockState in = FockState::parse("0:1:0:1");
    const auto d = full_distribution(UnitaryMatrix::identity(4), in, Family::collision_free,
                                     ParticleModel::indistinguishable, true);
    for (const auto& e : sample_events(d, 3, 200)) EXPECT_EQ(e, in);
}

TEST(Sampling, UniformFrequencies) {
    const auto d = uniform_over(4);
    const std::size_t draws = 100000;
    std::vector<double> counts(4, 0.0);
    for (std::size_t i : sample_indices(d, 2024, draws)) counts[i] += 1.0;
    const double se = std::sqrt(0.25 * 0.75 / draws);
    for (double c : counts) EXPECT_LE(std::abs(c / draws - 0.25), 5 * se);
}

TEST(Sampling, DeterministicAndNeedsNormalization) {
    const auto d = uniform_over(10);
    EXPECT_EQ(sample_indices(d, 5, 1000), sample_indices(d, 5, 1000));
    EXPECT_NE(sample_indices(d, 5, 1000), sample_indices(d, 6, 1000));
    const UnitaryMatrix u = haar_random_unitary(6, 2);
    const auto raw = full_distribution(u, FockState::leading_ones(6, 2), Family::collision_free,
                                       ParticleModel::indistinguishable, false);
    EXPECT_LSBS_ERROR(sample_events(raw, 1, 10), ErrorCategory::invalid_distribution);
}

TEST(Sampling, SkipsZeroProbabilityEntries) {
    auto basis = std::make_shared<const FockBasis>(4, 1, Family::collision_free, 10);
    const OutputDistribution d(basis, {0.0, 0.5, 0.0, 0.5}, 1.0, true);
    const CdfSampler sampler(d);
    EXPECT_EQ(sampler(0.0), 1u);
    EXPECT_EQ(sampler(0.5), 3u);
    EXPECT_EQ(sampler(std::nextafter(1.0, 0.0)), 3u);
    for (std::size_t i : sample_indices(d, 9, 1000)) EXPECT_TRUE(i == 1 || i == 3);
}

TEST(Serialization, JsonRoundTripAndCsv) {
    const UnitaryMatrix u = haar_random_unitary(5, 14);
    const auto d = full_distribution(u, FockState::parse("2:1:0:0:0"), Family::full_fock,
                                     ParticleModel::indistinguishable, false);
    const auto back = distribution_from_json(distribution_to_json(d));
    EXPECT_EQ(back.family(), d.family());
    EXPECT_EQ(back.raw_mass(), d.raw_mass());
    EXPECT_EQ(back.renormalized(), d.renormalized());
    ASSERT_EQ(back.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) EXPECT_EQ(back.probability(i), d.probability(i));
    const std::string csv = distribution_to_csv(d);
    EXPECT_EQ(csv.rfind("state,probability\n0:0:0:0:3,", 0), 0u);
    EXPECT_LSBS_ERROR(distribution_from_json(R"({"m": 3, "n": 1, "family": "collision-free", "renormalized": false,
        "raw_mass": 1, "entries": [{"state": "1:0:0", "p": 1}]})"),
                      ErrorCategory::parse_error);
}
