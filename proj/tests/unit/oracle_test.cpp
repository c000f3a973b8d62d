/*
 * Copyright 2026 The resvmech Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <resv/adversary.hpp>
#include <resv/oracle.hpp>

#include "../support/brute_force.hpp"

#include <gtest/gtest.h>

#include <random>

namespace resv {
namespace {

const MarketBounds kBounds{Rational(1), Rational(4), Rational(1), Rational(4)};

Reservation job(std::string id, Rational a, Rational d, Rational t, std::int64_t c, Rational v)
{
    return {std::move(id), a, d, t, c, v};
}

TEST(SubsetFeasible, CapacityDecidesSharedWindow)
{
    Instance inst{1, kBounds,
                  {job("x", Rational(0), Rational(2), Rational(2), 1, Rational(2)),
                   job("y", Rational(0), Rational(2), Rational(2), 1, Rational(2))}};
    EXPECT_FALSE(subset_feasible(inst, std::vector<std::string>{"x", "y"}).has_value());
    inst.capacity = 2;
    const auto w = subset_feasible(inst, std::vector<std::string>{"x", "y"});
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(*w, (std::vector<Placement>{{"x", Rational(0)}, {"y", Rational(0)}}));
    EXPECT_THROW((void)subset_feasible(inst, std::vector<std::string>{"z"}), std::invalid_argument);
}

TEST(SubsetFeasible, SameBundleJobsAreCompatible)
{
    const auto fam = gen_theorem3(8, Rational(1, 10));
    const auto& b4 = fam.bundles[3];
    ASSERT_EQ(b4.size(), 2U);
    const Instance inst{8, fam.instances.back().bounds, b4};
    const auto w = subset_feasible(inst, std::vector<std::string>{b4[0].id, b4[1].id});
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ((*w)[0].start, Rational(1, 2));
    EXPECT_EQ((*w)[1].start, Rational(5, 2));
    for (const auto& inst_i : fam.instances) {
        for (const auto& bundle : fam.bundles) {
            if (bundle.front().arrival > inst_i.jobs.back().deadline) continue;
            std::vector<std::string> ids;
            for (const auto& j : bundle) ids.push_back(j.id);
            if (std::all_of(ids.begin(), ids.end(), [&](const auto& id) {
                    return std::any_of(inst_i.jobs.begin(), inst_i.jobs.end(), [&](const auto& j) { return j.id == id; });
                })) {
                EXPECT_TRUE(subset_feasible(inst_i, ids).has_value());
            }
        }
    }
}

TEST(SubsetFeasible, NeedsNonGreedyOrder)
{
    // Earliest-deadline-first placement at release times fails; a left shift
    // to a completion time of another job is required.
    const Instance inst{1, kBounds,
                        {job("long", Rational(0), Rational(4), Rational(3), 1, Rational(3)),
                         job("short", Rational(1, 2), Rational(4), Rational(1), 1, Rational(1))}};
    const auto w = subset_feasible(inst, std::vector<std::string>{"long", "short"});
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(verify_witness(inst, *w));
}

TEST(OptimalWelfare, TakesTheLargerOfTwoExclusiveJobs)
{
    const Instance inst{1, kBounds,
                        {job("j1", Rational(0), Rational(2), Rational(2), 1, Rational(5)),
                         job("j2", Rational(0), Rational(2), Rational(2), 1, Rational(3))}};
    const auto r = optimal_welfare(inst);
    EXPECT_EQ(r.opt_welfare, Rational(5));
    ASSERT_EQ(r.witness.size(), 1U);
    EXPECT_EQ(r.witness[0].job_id, "j1");
    EXPECT_GT(r.explored_nodes, 0U);
}

TEST(OptimalWelfare, EmptyInstance)
{
    const auto r = optimal_welfare(Instance{4, kBounds, {}});
    EXPECT_EQ(r.opt_welfare, Rational(0));
    EXPECT_TRUE(r.witness.empty());
}

TEST(OptimalWelfare, AdversarialFamilies)
{
    const auto t3 = gen_theorem3(8, Rational(1, 10));
    EXPECT_EQ(optimal_welfare(t3.instances[1]).opt_welfare, Rational(10));
    EXPECT_EQ(optimal_welfare(t3.instances[5]).opt_welfare, Rational(80));

    // m = 1, n = 2, C = 8: the C/2 + 1 bundles are worth 2^(i-1)(C + 2), the
    // full-demand ones 2^(i-1) C
    const auto t5 = gen_theorem5(1, 2, 8);
    const std::vector<Rational> want{Rational(10), Rational(20), Rational(40), Rational(64), Rational(128)};
    for (std::size_t i = 0; i < t5.instances.size(); ++i) {
        const auto r = optimal_welfare(t5.instances[i]);
        EXPECT_EQ(r.opt_welfare, want[i]) << "I" << i + 1;
        EXPECT_TRUE(verify_witness(t5.instances[i], r.witness));
    }
}

TEST(OptimalWelfare, CapsFault)
{
    Instance inst{1, kBounds, {}};
    for (int x = 0; x < 13; ++x) {
        inst.jobs.push_back(job("j" + std::to_string(x), Rational(0), Rational(20), Rational(1), 1, Rational(2)));
    }
    EXPECT_THROW((void)optimal_welfare(inst), OracleCapExceeded);
    inst.jobs.pop_back();
    try {
        (void)optimal_welfare(inst, OracleLimits{12, 5});
        FAIL() << "expected node cap";
    } catch (const OracleCapExceeded& e) {
        EXPECT_GE(e.explored_nodes, 5U);
    }
}

TEST(VerifyWitness, RejectsBrokenSchedules)
{
    const Instance inst{1, kBounds,
                        {job("x", Rational(0), Rational(4), Rational(2), 1, Rational(2)),
                         job("y", Rational(0), Rational(4), Rational(2), 1, Rational(2))}};
    EXPECT_TRUE(verify_witness(inst, {{"x", Rational(0)}, {"y", Rational(2)}}));
    EXPECT_FALSE(verify_witness(inst, {{"x", Rational(0)}, {"y", Rational(1)}}));
    EXPECT_FALSE(verify_witness(inst, {{"x", Rational(3)}}));
    EXPECT_FALSE(verify_witness(inst, {{"x", Rational(0)}, {"x", Rational(2)}}));
    EXPECT_FALSE(verify_witness(inst, {{"q", Rational(0)}}));
}

TEST(OptimalWelfareProperty, AgreesWithSlotEnumeration)
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 250; ++trial) {
        const auto cap = std::uniform_int_distribution<std::int64_t>(1, 4)(rng);
        const auto n = std::uniform_int_distribution<int>(0, 6)(rng);
        Instance inst{cap, kBounds, {}};
        for (int x = 0; x < n; ++x) {
            const auto a = std::uniform_int_distribution<std::int64_t>(0, 5)(rng);
            const auto t = std::uniform_int_distribution<std::int64_t>(1, 4)(rng);
            const auto d = a + t + std::uniform_int_distribution<std::int64_t>(0, 3)(rng);
            const auto c = std::uniform_int_distribution<std::int64_t>(1, cap)(rng);
            const auto rho = Rational(std::uniform_int_distribution<std::int64_t>(2, 8)(rng), 2);
            inst.jobs.push_back(job("j" + std::to_string(x), Rational(a), Rational(d), Rational(t), c,
                                    rho * Rational(c) * Rational(t)));
        }
        const auto r = optimal_welfare(inst);
        ASSERT_EQ(r.opt_welfare, testing::brute_force_opt(inst)) << "trial " << trial;
        ASSERT_TRUE(verify_witness(inst, r.witness));
        Money total(0);
        for (const auto& p : r.witness) {
            for (const auto& j : inst.jobs) {
                if (j.id == p.job_id) total += j.value;
            }
        }
        ASSERT_EQ(total, r.opt_welfare);
    }
}

} // namespace
} // namespace resv
