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

#include <resv/mechanism.hpp>

#include <algorithm>
#include <random>
#include <stdexcept>

namespace resv {

std::string_view to_string(MechanismKind kind) noexcept
{
    switch (kind) {
    case MechanismKind::random_pricing: return "random-pricing";
    case MechanismKind::greedy: return "greedy";
    case MechanismKind::binary_filter: return "binary-filter";
    case MechanismKind::bounded_binary_filter: return "bounded-binary-filter";
    }
    return "unknown";
}

MechanismKind parse_mechanism(std::string_view name)
{
    for (auto kind : kAllMechanisms) {
        if (to_string(kind) == name) return kind;
    }
    throw std::invalid_argument("unknown mechanism '" + std::string(name) + "'");
}

void validate_config(const MechanismConfig& config)
{
    if (config.capacity < 1) throw std::invalid_argument("mechanism capacity must be positive");
    if (!config.bounds.rho_min.is_positive() || !config.bounds.t_min.is_positive()) {
        throw std::invalid_argument("rho_min and t_min must be positive");
    }
    if (config.alpha) {
        if (!config.alpha->is_positive() || *config.alpha > Rational(1, 2)) {
            throw std::invalid_argument("alpha must lie in (0, 1/2], got " + config.alpha->str());
        }
    } else if (config.kind == MechanismKind::bounded_binary_filter) {
        throw std::invalid_argument("bounded-binary-filter requires alpha");
    }
}

MechanismConfig make_config(MechanismKind kind, const Instance& inst, std::optional<Rational> alpha)
{
    MechanismConfig config{kind, inst.bounds, inst.capacity, std::move(alpha)};
    validate_config(config);
    return config;
}

std::vector<Violation> alpha_violations(const MechanismConfig& config, const Instance& inst)
{
    std::vector<Violation> out;
    if (!config.alpha) return out;
    const Rational cap = *config.alpha * Rational(config.capacity);
    for (const auto& j : inst.jobs) {
        if (Rational(j.demand) > cap) out.push_back({j.id, "demand exceeds alpha * C"});
    }
    return out;
}

int density_classes(const MarketBounds& bounds)
{
    return std::max(1, ceil_log2(bounds.k()));
}

int length_classes(const MarketBounds& bounds)
{
    return std::max(1, ceil_log2(bounds.T()));
}

namespace {

bool uses_classes(MechanismKind kind)
{
    return kind == MechanismKind::binary_filter || kind == MechanismKind::bounded_binary_filter;
}

Rational half_capacity_power(std::int64_t capacity, int i)
{
    return i == 0 ? Rational(1) : Rational(capacity, 2);
}

void check_coins(const MechanismConfig& config, const Coins& coins)
{
    if (coins.i != 0 && coins.i != 1) throw std::invalid_argument("coin i must be 0 or 1");
    if (!uses_classes(config.kind)) return;
    if (!coins.u || !coins.v) {
        throw std::invalid_argument(std::string(to_string(config.kind)) + " requires coins u and v");
    }
    if (*coins.u < 1 || *coins.u > density_classes(config.bounds)) throw std::invalid_argument("coin u out of range");
    if (*coins.v < 1 || *coins.v > length_classes(config.bounds)) throw std::invalid_argument("coin v out of range");
}

} // namespace

Coins draw_coins(const MechanismConfig& config, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    Coins coins;
    const bool coin_i = config.kind == MechanismKind::random_pricing || config.kind == MechanismKind::binary_filter;
    if (coin_i) coins.i = std::uniform_int_distribution<int>(0, 1)(rng);
    if (uses_classes(config.kind)) {
        coins.u = std::uniform_int_distribution<int>(1, density_classes(config.bounds))(rng);
        coins.v = std::uniform_int_distribution<int>(1, length_classes(config.bounds))(rng);
    }
    return coins;
}

std::vector<Coins> coin_space(const MechanismConfig& config)
{
    switch (config.kind) {
    case MechanismKind::random_pricing: return {Coins{0, std::nullopt, std::nullopt}, Coins{1, std::nullopt, std::nullopt}};
    case MechanismKind::greedy: return {Coins{0, std::nullopt, std::nullopt}};
    case MechanismKind::binary_filter:
    case MechanismKind::bounded_binary_filter: {
        std::vector<Coins> out;
        const std::vector<int> bits =
            config.kind == MechanismKind::binary_filter ? std::vector<int>{0, 1} : std::vector<int>{0};
        for (int u = 1; u <= density_classes(config.bounds); ++u) {
            for (int v = 1; v <= length_classes(config.bounds); ++v) {
                for (int i : bits) out.push_back(Coins{i, u, v});
            }
        }
        return out;
    }
    }
    return {};
}

Money quote_price(const MechanismConfig& config, const Coins& coins, const Reservation& job)
{
    check_coins(config, coins);
    const Rational c(job.demand);
    const auto& b = config.bounds;
    switch (config.kind) {
    case MechanismKind::random_pricing:
        return b.rho_min * job.length * max(half_capacity_power(config.capacity, coins.i), c);
    case MechanismKind::greedy:
        return b.rho_min * c * job.length;
    case MechanismKind::binary_filter:
        return b.rho_min * pow2(*coins.u - 1) * max(half_capacity_power(config.capacity, coins.i), c) *
               max(b.t_min * pow2(*coins.v - 1), job.length);
    case MechanismKind::bounded_binary_filter:
        return b.rho_min * pow2(*coins.u - 1) * c * max(b.t_min * pow2(*coins.v - 1), job.length);
    }
    throw std::logic_error("quote_price: unhandled mechanism");
}

MechanismState::MechanismState(MechanismConfig config, Coins coins)
    : config_(std::move(config)), coins_(coins), timeline_(config_.capacity)
{
    validate_config(config_);
    check_coins(config_, coins_);
}

Decision decide(const MechanismState& state, const Reservation& job)
{
    const Money price = quote_price(state.config_, state.coins_, job);
    if (job.value < price) return Decision::reject();
    if (auto start = state.timeline_.earliest_feasible_start(job)) return Decision::accept(price, *start);
    return Decision::reject();
}

std::pair<MechanismState, Decision> on_arrival(const MechanismState& state, const Reservation& job)
{
    MechanismState next = state;
    Decision decision = decide(state, job);
    if (decision.accepted) next.timeline_ = state.timeline_.commit(job, *decision.start);
    next.log_.emplace_back(job.id, decision);
    return {std::move(next), std::move(decision)};
}

Outcome run_sequence(const MechanismConfig& config, const Coins& coins, const Instance& inst)
{
    if (auto violations = validate_instance(inst); !violations.empty()) throw InvalidInstance(std::move(violations));
    if (config.capacity != inst.capacity) throw std::invalid_argument("mechanism capacity differs from instance");

    Outcome out;
    out.coins = coins;
    out.decisions.reserve(inst.jobs.size());
    MechanismState state(config, coins);
    for (const auto& job : inst.jobs) {
        auto [next, decision] = on_arrival(state, job);
        if (decision.accepted) {
            out.welfare += job.value;
            out.revenue += *decision.price;
        }
        out.decisions.push_back(std::move(decision));
        state = std::move(next);
    }
    return out;
}

} // namespace resv
