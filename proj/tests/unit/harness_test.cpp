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
#include <resv/harness.hpp>
#include <resv/report.hpp>

#include "../support/workloads.hpp"

#include <gtest/gtest.h>

namespace resv {
namespace {

MechanismConfig config(MechanismKind kind, Rational k, Rational T, std::optional<Rational> alpha = std::nullopt)
{
    MechanismConfig c;
    c.kind = kind;
    c.capacity = 8;
    c.bounds = {Rational(1), k, Rational(1), T};
    c.alpha = alpha;
    return c;
}

TEST(ClaimedBound, PerMechanism)
{
    EXPECT_EQ(claimed_bound(config(MechanismKind::random_pricing, Rational(2), Rational(2))), Rational(1, 42));
    EXPECT_EQ(claimed_bound(config(MechanismKind::random_pricing, Rational(4), Rational(2))), Rational(1, 82));
    EXPECT_EQ(claimed_bound(config(MechanismKind::greedy, Rational(2), Rational(2), Rational(1, 4))), Rational(3, 43));
    EXPECT_EQ(claimed_bound(config(MechanismKind::greedy, Rational(2), Rational(2), Rational(1, 8))), Rational(7, 87));
    EXPECT_EQ(claimed_bound(config(MechanismKind::greedy, Rational(2), Rational(2))), Rational(0));
    EXPECT_EQ(claimed_bound(config(MechanismKind::greedy, Rational(4), Rational(2), Rational(1, 4))), Rational(0));
    EXPECT_EQ(claimed_bound(config(MechanismKind::binary_filter, Rational(8), Rational(4))), Rational(1, 252));
    EXPECT_EQ(claimed_bound(config(MechanismKind::bounded_binary_filter, Rational(8), Rational(8), Rational(1, 2))),
              Rational(1, 189));
}

TEST(ExactExpectation, AllAcceptedGivesRatioOne)
{
    // demand C/2 + 1 with density 2 clears both random-pricing prices
    const Instance inst{8,
                        {Rational(1), Rational(2), Rational(1), Rational(2)},
                        {{"x", Rational(0), Rational(2), Rational(1), 5, Rational(10)},
                         {"y", Rational(2), Rational(4), Rational(2), 5, Rational(20)}}};
    const auto r = exact_expectation(make_config(MechanismKind::random_pricing, inst), inst, "pair");
    EXPECT_EQ(r.coin_count, 2U);
    EXPECT_EQ(r.expected_welfare, Rational(30));
    EXPECT_EQ(r.opt_welfare, Rational(30));
    EXPECT_EQ(r.welfare_ratio, Rational(1));
    EXPECT_EQ(r.expected_revenue, Rational(15));
    EXPECT_TRUE(r.bound_satisfied);
}

TEST(ExactExpectation, EmptyInstanceHasRatioOne)
{
    const Instance inst{8, {Rational(1), Rational(2), Rational(1), Rational(2)}, {}};
    const auto r = exact_expectation(make_config(MechanismKind::greedy, inst), inst);
    EXPECT_EQ(r.opt_welfare, Rational(0));
    EXPECT_EQ(r.welfare_ratio, Rational(1));
    EXPECT_EQ(r.revenue_ratio, Rational(1));
}

TEST(ExactExpectationProperty, AverageOfPerCoinRuns)
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto inst = testing::wide_workload(seed, 8, 4, true, true);
        for (const auto kind : kAllMechanisms) {
            const auto cfg = make_config(kind, inst, Rational(1, 2));
            const auto space = coin_space(cfg);
            Money w(0), rev(0);
            for (const auto& c : space) {
                const auto out = run_sequence(cfg, c, inst);
                w += out.welfare;
                rev += out.revenue;
            }
            const Rational n(static_cast<std::int64_t>(space.size()));
            const auto r = exact_expectation(cfg, inst);
            ASSERT_EQ(r.expected_welfare, w / n);
            ASSERT_EQ(r.expected_revenue, rev / n);
            ASSERT_LE(r.expected_revenue, r.expected_welfare);
            ASSERT_LE(r.expected_welfare, r.opt_welfare);
        }
    }
}

TEST(ClassConditional, OneReportPerCoinPair)
{
    const auto inst = testing::wide_workload(3, 8, 4);
    const auto cfg = make_config(MechanismKind::binary_filter, inst);
    const auto classes = class_conditional_check(cfg, inst);
    EXPECT_EQ(classes.size(), static_cast<std::size_t>(density_classes(cfg.bounds) * length_classes(cfg.bounds)));
    // classes are closed intervals, so boundary jobs count in two of them
    std::size_t jobs = 0;
    for (const auto& c : classes) jobs += c.class_jobs;
    EXPECT_GE(jobs, inst.jobs.size());
    EXPECT_THROW((void)class_conditional_check(make_config(MechanismKind::greedy, inst), inst), std::invalid_argument);
}

TEST(Yao, SixBundleTable)
{
    const auto small = yao_evaluate(gen_theorem3(8, Rational(1, 10)));
    EXPECT_EQ(small.opt[1], Rational(10));
    EXPECT_EQ(small.analytic_limit, Rational(159, 480));

    const auto rep = yao_evaluate(gen_theorem3(10000, Rational(1, 1000)));
    ASSERT_EQ(rep.rows.size(), 8U);
    EXPECT_EQ(rep.rows[0].label, "B1");
    EXPECT_EQ(rep.rows[6].label, "B4+B5");
    EXPECT_EQ(rep.rows[7].label, "B5+B6");
    EXPECT_EQ(rep.best_label, "B1");
    EXPECT_TRUE(rep.patterns_cover_exhaustive);
}

TEST(Yao, DoublingFamilyClosedForm)
{
    const auto rep = yao_evaluate(gen_theorem5(1, 2, 64));
    ASSERT_EQ(rep.closed_form.size(), 5U);
    EXPECT_EQ(rep.closed_form[0], Rational(31, 80));
    EXPECT_EQ(rep.analytic_limit, Rational(31, 80));
    EXPECT_EQ(rep.idealized_best, Rational(31, 80));
    for (std::size_t j = 0; j < 5; ++j) EXPECT_EQ(rep.idealized_rows[j].expected_ratio, rep.closed_form[j]);
    EXPECT_EQ(rep.log2_8kT, 5);
    EXPECT_EQ(rep.upper_bound, Rational(2, 5));
}

TEST(Audit, Misreports)
{
    const Reservation truth{"j", Rational(0), Rational(10), Rational(2), 1, Rational(6)};
    const auto lies = misreports(truth, DeviationGrid{});
    // five values per dimension; the doubled length 4 is already on the grid
    EXPECT_EQ(lies.size(), 5U * 5U * 5U * 5U * 5U - 1U);
    for (const auto& l : lies) {
        EXPECT_GE(l.arrival, truth.arrival);
        EXPECT_LE(l.deadline, truth.deadline);
        EXPECT_GE(l.length, truth.length);
        EXPECT_GE(l.demand, truth.demand);
    }
}

TEST(Audit, GreedyAndRandomPricingExamples)
{
    const Instance inst{8,
                        {Rational(1), Rational(4), Rational(1), Rational(2)},
                        {{"g", Rational(0), Rational(10), Rational(2), 1, Rational(6)},
                         {"r", Rational(0), Rational(10), Rational(2), 3, Rational(12)}}};
    auto cfg = make_config(MechanismKind::greedy, inst);
    // longer report: price 3 vs 2
    EXPECT_EQ(quote_price(cfg, Coins{0, std::nullopt, std::nullopt}, inst.jobs[0]), Rational(2));
    auto lie = inst.jobs[0];
    lie.length = Rational(3);
    EXPECT_EQ(quote_price(cfg, Coins{0, std::nullopt, std::nullopt}, lie), Rational(3));

    for (const auto kind : {MechanismKind::greedy, MechanismKind::random_pricing}) {
        cfg = make_config(kind, inst);
        for (const auto& c : coin_space(cfg)) {
            const auto rep = truthfulness_audit(cfg, c, inst, DeviationGrid{});
            EXPECT_GT(rep.deviations_tested, 1000U);
            EXPECT_TRUE(rep.profitable.empty()) << to_string(kind) << " " << c.str();
        }
    }
}

TEST(Report, CsvIsDeterministic)
{
    EXPECT_EQ(ratio_csv({}), "instance,mechanism,coins,welfare,revenue,opt,welfare_ratio,revenue_ratio,bound,satisfied\n");
    const auto inst = testing::narrow_workload(4);
    const auto r = exact_expectation(make_config(MechanismKind::random_pricing, inst), inst, "w4");
    const auto csv = ratio_csv({r});
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 2);
    EXPECT_EQ(csv, ratio_csv({exact_expectation(make_config(MechanismKind::random_pricing, inst), inst, "w4")}));
    EXPECT_NE(csv.find("w4,random-pricing,all:2,"), std::string::npos);
    EXPECT_NE(ratio_summary_json({r}).find("\"all_satisfied\""), std::string::npos);
}

} // namespace
} // namespace resv
