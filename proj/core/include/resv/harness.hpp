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

#ifndef RESV_HARNESS_HPP
#define RESV_HARNESS_HPP

#include <resv/adversary.hpp>
#include <resv/mechanism.hpp>
#include <resv/oracle.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace resv {

struct RatioReport
{
    std::string instance_id;
    MechanismKind mechanism{MechanismKind::random_pricing};
    std::size_t coin_count{0};
    Money expected_welfare{0};
    Money expected_revenue{0};
    Money opt_welfare{0};
    Rational welfare_ratio{1};
    Rational revenue_ratio{1};
    Rational bound_claimed{0};
    bool bound_satisfied{true};
};

/**
 * Guaranteed competitive ratio for \p config, from its bounds and alpha:
 * random-pricing 1/42 when k, T <= 2 and 1/(8Tk + 4k + 2) otherwise;
 * greedy (1 - a)/(11 - a) when k, T <= 2 and alpha is set;
 * binary-filter 1/(42 Lk LT); bounded-binary-filter (1 - a)/((11 - a) Lk LT).
 * Zero when no guarantee applies.
 */
[[nodiscard]] Rational claimed_bound(const MechanismConfig& config);

/// Expected welfare/revenue by enumerating every coin tuple with uniform weight, over OPT.
/// An instance with OPT = 0 yields ratio 1.
[[nodiscard]] RatioReport exact_expectation(const MechanismConfig& config, const Instance& inst,
                                            const std::string& instance_id = "instance",
                                            const std::optional<OracleResult>& opt = std::nullopt,
                                            const OracleLimits& limits = {});

/// Per (u, v) coin pair of a binary-filter run: expectation over i against OPT of the class J_uv.
struct ClassReport
{
    int u{1};
    int v{1};
    std::size_t class_jobs{0};
    Money expected_welfare{0};
    Money class_opt{0};
    bool satisfied{true}; ///< expected_welfare >= class_opt / 42
};

[[nodiscard]] std::vector<ClassReport> class_conditional_check(const MechanismConfig& config, const Instance& inst,
                                                               const OracleLimits& limits = {});

struct StrategyRow
{
    std::string label;
    std::vector<std::string> accepted; ///< job ids; the strategy's choices on the full instance I_N
    std::vector<Rational> ratios;      ///< one per instance I_1..I_N
    Rational expected_ratio{0};
};

struct YaoReport
{
    FamilyKind kind{FamilyKind::theorem3};
    std::vector<Money> opt; ///< OPT(I_1..I_N) at the generated parameters
    std::vector<StrategyRow> rows; ///< commit-to-one-bundle rows, plus compatible pairs for theorem3
    std::string best_label;
    Rational best_expected_ratio{0};

    /// Best over every feasible subset of I_N, i.e. every deterministic policy.
    StrategyRow exhaustive_best;

    /// Exact large-C limit of the best pattern (theorem3: 1/3 - 1/480; theorem5: closed form at j = 1).
    Rational analytic_limit{0};

    // theorem5 only
    std::vector<StrategyRow> idealized_rows; ///< C -> infinity limit of each commit-to-B_j row
    std::vector<Rational> closed_form;       ///< (2 - 2^-(N - j)) / N for j = 1..N
    Rational idealized_best{0};
    Rational upper_bound{0}; ///< 2 / log2(8kT) from realized bounds
    std::optional<int> log2_8kT;

    /// Cross-bundle job pairs that can be co-scheduled.
    std::vector<std::pair<std::string, std::string>> compatible_cross_pairs;

    /// Pattern best equals the exhaustive best.
    bool patterns_cover_exhaustive{false};
};

[[nodiscard]] YaoReport yao_evaluate(const YaoFamily& family, const OracleLimits& limits = {});

struct DeviationGrid
{
    Rational time_step{1, 2};
    int points{5};
    std::int64_t demand_step{1};
    std::vector<Rational> value_factors{Rational(1, 2), Rational(1), Rational(3, 2), Rational(2), Rational(4)};
};

struct ProfitableDeviation
{
    std::string job_id;
    Reservation misreport;
    Money gain;
};

struct AuditReport
{
    std::string instance_id;
    MechanismKind mechanism{MechanismKind::random_pricing};
    Coins coins;
    std::uint64_t deviations_tested{0};
    std::vector<ProfitableDeviation> profitable;
};

/// Misreports allowed to a rational customer: a' >= a, d' <= d, t' >= t, c' >= c, any v' > 0.
[[nodiscard]] std::vector<Reservation> misreports(const Reservation& truth, const DeviationGrid& grid);

/**
 * Tries every grid misreport of each job with coins and all other reports
 * held fixed. A job's decision depends only on the jobs before it, so each
 * deviation branches from the recorded prefix state.
 */
[[nodiscard]] AuditReport truthfulness_audit(const MechanismConfig& config, const Coins& coins, const Instance& inst,
                                             const DeviationGrid& grid, const std::string& instance_id = "instance");

} // namespace resv

#endif // RESV_HARNESS_HPP
