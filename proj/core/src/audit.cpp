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

#include <algorithm>

namespace resv {

std::vector<Reservation> misreports(const Reservation& truth, const DeviationGrid& grid)
{
    if (grid.points < 1) throw std::invalid_argument("deviation grid needs at least one point per dimension");
    if (!grid.time_step.is_positive() || grid.demand_step < 1) throw std::invalid_argument("deviation steps must be positive");

    std::vector<Time> arrivals, deadlines, lengths;
    std::vector<std::int64_t> demands;
    for (int k = 0; k < grid.points; ++k) {
        const Rational shift = grid.time_step * Rational(k);
        arrivals.push_back(truth.arrival + shift);
        deadlines.push_back(truth.deadline - shift);
        lengths.push_back(truth.length + shift);
        demands.push_back(truth.demand + grid.demand_step * k);
    }
    const Time doubled = truth.length * Rational(2);
    if (std::find(lengths.begin(), lengths.end(), doubled) == lengths.end()) lengths.push_back(doubled);

    std::vector<Reservation> out;
    for (const auto& a : arrivals) {
        for (const auto& d : deadlines) {
            for (const auto& t : lengths) {
                for (auto c : demands) {
                    for (const auto& f : grid.value_factors) {
                        Reservation r{truth.id, a, d, t, c, truth.value * f};
                        if (r == truth) continue;
                        out.push_back(std::move(r));
                    }
                }
            }
        }
    }
    return out;
}

AuditReport truthfulness_audit(const MechanismConfig& config, const Coins& coins, const Instance& inst,
                               const DeviationGrid& grid, const std::string& instance_id)
{
    if (auto v = validate_instance(inst); !v.empty()) throw InvalidInstance(std::move(v));
    for (const auto& f : grid.value_factors) {
        if (!f.is_positive()) throw std::invalid_argument("value factors must be positive");
    }

    AuditReport rep;
    rep.instance_id = instance_id;
    rep.mechanism = config.kind;
    rep.coins = coins;

    auto utility = [](const Reservation& truth, const Decision& d) {
        return d.accepted ? truth.value - *d.price : Money(0);
    };

    MechanismState state(config, coins);
    for (const auto& job : inst.jobs) {
        auto [next, truthful] = on_arrival(state, job);
        const Money honest = utility(job, truthful);
        for (const auto& lie : misreports(job, grid)) {
            ++rep.deviations_tested;
            const Money gained = utility(job, decide(state, lie)) - honest;
            if (gained.is_positive()) rep.profitable.push_back({job.id, lie, gained});
        }
        state = std::move(next);
    }
    return rep;
}

} // namespace resv
