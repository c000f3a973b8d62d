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

#include <resv/harness.hpp>

namespace resv {

Rational claimed_bound(const MechanismConfig& config)
{
    const Rational k = config.bounds.k();
    const Rational T = config.bounds.T();
    const bool narrow = k <= Rational(2) && T <= Rational(2);
    const Rational classes(static_cast<std::int64_t>(density_classes(config.bounds)) * length_classes(config.bounds));

    switch (config.kind) {
    case MechanismKind::random_pricing:
        if (narrow) return Rational(1, 42);
        return Rational(1) / (Rational(8) * T * k + Rational(4) * k + Rational(2));
    case MechanismKind::greedy:
        if (!narrow || !config.alpha) return Rational(0);
        return (Rational(1) - *config.alpha) / (Rational(11) - *config.alpha);
    case MechanismKind::binary_filter:
        return Rational(1) / (Rational(42) * classes);
    case MechanismKind::bounded_binary_filter:
        return (Rational(1) - *config.alpha) / ((Rational(11) - *config.alpha) * classes);
    }
    return Rational(0);
}

RatioReport exact_expectation(const MechanismConfig& config, const Instance& inst, const std::string& instance_id,
                              const std::optional<OracleResult>& opt, const OracleLimits& limits)
{
    validate_config(config);
    if (auto v = validate_instance(inst); !v.empty()) throw InvalidInstance(std::move(v));
    if (auto v = alpha_violations(config, inst); !v.empty()) throw InvalidInstance(std::move(v));

    const Money opt_welfare = opt ? opt->opt_welfare : optimal_welfare(inst, limits).opt_welfare;
    const auto coins = coin_space(config);

    Money welfare(0);
    Money revenue(0);
    for (const auto& c : coins) {
        const auto out = run_sequence(config, c, inst);
        welfare += out.welfare;
        revenue += out.revenue;
    }
    const Rational n(static_cast<std::int64_t>(coins.size()));

    RatioReport r;
    r.instance_id = instance_id;
    r.mechanism = config.kind;
    r.coin_count = coins.size();
    r.expected_welfare = welfare / n;
    r.expected_revenue = revenue / n;
    r.opt_welfare = opt_welfare;
    if (opt_welfare.is_positive()) {
        r.welfare_ratio = r.expected_welfare / opt_welfare;
        r.revenue_ratio = r.expected_revenue / opt_welfare;
    }
    r.bound_claimed = claimed_bound(config);
    r.bound_satisfied = r.welfare_ratio >= r.bound_claimed && r.revenue_ratio >= r.bound_claimed;
    return r;
}

std::vector<ClassReport> class_conditional_check(const MechanismConfig& config, const Instance& inst,
                                                 const OracleLimits& limits)
{
    if (config.kind != MechanismKind::binary_filter) {
        throw std::invalid_argument("class_conditional_check applies to binary-filter only");
    }
    if (auto v = validate_instance(inst); !v.empty()) throw InvalidInstance(std::move(v));

    const auto& b = config.bounds;
    std::vector<ClassReport> out;
    for (int u = 1; u <= density_classes(b); ++u) {
        for (int v = 1; v <= length_classes(b); ++v) {
            const Rational rho_lo = b.rho_min * pow2(u - 1);
            const Rational rho_hi = b.rho_min * pow2(u);
            const Rational t_lo = b.t_min * pow2(v - 1);
            const Rational t_hi = b.t_min * pow2(v);

            Instance cls{inst.capacity, inst.bounds, {}};
            for (const auto& j : inst.jobs) {
                const auto rho = j.density();
                if (rho_lo <= rho && rho <= rho_hi && t_lo <= j.length && j.length <= t_hi) cls.jobs.push_back(j);
            }

            ClassReport r;
            r.u = u;
            r.v = v;
            r.class_jobs = cls.jobs.size();
            Money total(0);
            for (int i : {0, 1}) total += run_sequence(config, Coins{i, u, v}, inst).welfare;
            r.expected_welfare = total / Rational(2);
            r.class_opt = optimal_welfare(cls, limits).opt_welfare;
            r.satisfied = Rational(42) * r.expected_welfare >= r.class_opt;
            out.push_back(r);
        }
    }
    return out;
}

} // namespace resv
