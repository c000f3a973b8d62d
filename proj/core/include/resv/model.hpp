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

#ifndef RESV_MODEL_HPP
#define RESV_MODEL_HPP

#include <resv/rational.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace resv {

using Money = Rational;
using Time = Rational;

/**
 * \brief One customer request: c instances for t time units inside [a, d], worth v.
 */
struct Reservation
{
    std::string id;
    Time arrival;  ///< earliest start a
    Time deadline; ///< latest completion d
    Time length;   ///< t
    std::int64_t demand{1}; ///< c
    Money value;   ///< v

    /// v / (c t)
    [[nodiscard]] Rational density() const { return value / (Rational(demand) * length); }

    friend bool operator==(const Reservation&, const Reservation&) = default;
};

struct MarketBounds
{
    Rational rho_min{1};
    Rational rho_max{1};
    Time t_min{1};
    Time t_max{1};

    [[nodiscard]] Rational k() const { return rho_max / rho_min; }
    [[nodiscard]] Rational T() const { return t_max / t_min; }

    friend bool operator==(const MarketBounds&, const MarketBounds&) = default;
};

struct Instance
{
    std::int64_t capacity{1};
    MarketBounds bounds;
    std::vector<Reservation> jobs; ///< arrival (online) order

    friend bool operator==(const Instance&, const Instance&) = default;
};

struct Violation
{
    std::string job_id; ///< empty for instance-level violations
    std::string predicate;
};

/// Every broken Reservation/MarketBounds invariant; empty means the instance is valid.
[[nodiscard]] std::vector<Violation> validate_instance(const Instance& inst);

/// Raised when an operation requires a valid instance and got one with violations.
class InvalidInstance : public std::invalid_argument
{
public:
    explicit InvalidInstance(std::vector<Violation> violations);
    [[nodiscard]] const std::vector<Violation>& violations() const noexcept { return violations_; }

private:
    std::vector<Violation> violations_;
};

/// Tightest bounds that contain every job of \p inst (inst.bounds when there are no jobs).
[[nodiscard]] MarketBounds realized_bounds(const Instance& inst);

/// Random draws of a mechanism, fixed before the first arrival.
struct Coins
{
    int i{0};
    std::optional<int> u;
    std::optional<int> v;

    [[nodiscard]] std::string str() const;

    friend bool operator==(const Coins&, const Coins&) = default;
};

struct Decision
{
    bool accepted{false};
    std::optional<Money> price;
    std::optional<Time> start;

    static Decision reject() { return {}; }
    static Decision accept(Money p, Time s) { return {true, std::move(p), std::move(s)}; }

    friend bool operator==(const Decision&, const Decision&) = default;
};

struct Outcome
{
    std::vector<Decision> decisions; ///< parallel to Instance::jobs
    Money welfare{0};
    Money revenue{0};
    Coins coins;
};

} // namespace resv

#endif // RESV_MODEL_HPP
