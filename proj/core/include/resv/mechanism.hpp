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

#ifndef RESV_MECHANISM_HPP
#define RESV_MECHANISM_HPP

#include <resv/model.hpp>
#include <resv/timeline.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace resv {

enum class MechanismKind
{
    random_pricing,
    greedy,
    binary_filter,
    bounded_binary_filter,
};

inline constexpr MechanismKind kAllMechanisms[] = {
    MechanismKind::random_pricing,
    MechanismKind::greedy,
    MechanismKind::binary_filter,
    MechanismKind::bounded_binary_filter,
};

[[nodiscard]] std::string_view to_string(MechanismKind kind) noexcept;
[[nodiscard]] MechanismKind parse_mechanism(std::string_view name);

struct MechanismConfig
{
    MechanismKind kind{MechanismKind::random_pricing};
    MarketBounds bounds;
    std::int64_t capacity{1};
    std::optional<Rational> alpha; ///< demand cap c/C <= alpha, in (0, 1/2]
};

/// Config for \p inst; throws std::invalid_argument on an out-of-range alpha
/// or a bounded-binary-filter without alpha.
[[nodiscard]] MechanismConfig make_config(MechanismKind kind, const Instance& inst,
                                          std::optional<Rational> alpha = std::nullopt);
void validate_config(const MechanismConfig& config);

/// Jobs violating c/C <= alpha; empty when alpha is absent.
[[nodiscard]] std::vector<Violation> alpha_violations(const MechanismConfig& config, const Instance& inst);

/// max(1, ceil(log2 k)) and max(1, ceil(log2 T)).
[[nodiscard]] int density_classes(const MarketBounds& bounds);
[[nodiscard]] int length_classes(const MarketBounds& bounds);

[[nodiscard]] Coins draw_coins(const MechanismConfig& config, std::uint64_t seed);

/// Every coin tuple of the mechanism, each carrying equal probability.
[[nodiscard]] std::vector<Coins> coin_space(const MechanismConfig& config);

/// Posted price for the reported (t, c); never reads v, a, d or earlier jobs.
[[nodiscard]] Money quote_price(const MechanismConfig& config, const Coins& coins, const Reservation& job);

class MechanismState
{
public:
    using LogEntry = std::pair<std::string, Decision>;

    MechanismState(MechanismConfig config, Coins coins);

    [[nodiscard]] const MechanismConfig& config() const noexcept { return config_; }
    [[nodiscard]] const Coins& coins() const noexcept { return coins_; }
    [[nodiscard]] const CapacityTimeline& timeline() const noexcept { return timeline_; }
    [[nodiscard]] const std::vector<LogEntry>& log() const noexcept { return log_; }

    friend std::pair<MechanismState, Decision> on_arrival(const MechanismState& state, const Reservation& job);
    friend Decision decide(const MechanismState& state, const Reservation& job);

private:
    MechanismConfig config_;
    Coins coins_;
    CapacityTimeline timeline_;
    std::vector<LogEntry> log_;
};

/// The decision on_arrival would take, without building the successor state.
[[nodiscard]] Decision decide(const MechanismState& state, const Reservation& job);

/**
 * Accepts iff v >= price and the job fits somewhere in its window; an accepted
 * job is placed at its earliest feasible start and charged the price.
 */
std::pair<MechanismState, Decision> on_arrival(const MechanismState& state, const Reservation& job);

/// Folds on_arrival over inst.jobs; throws InvalidInstance for an invalid instance.
[[nodiscard]] Outcome run_sequence(const MechanismConfig& config, const Coins& coins, const Instance& inst);

} // namespace resv

#endif // RESV_MECHANISM_HPP
