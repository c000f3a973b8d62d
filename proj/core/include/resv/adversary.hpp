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

#ifndef RESV_ADVERSARY_HPP
#define RESV_ADVERSARY_HPP

#include <resv/model.hpp>

#include <cstdint>
#include <string_view>
#include <vector>

namespace resv {

enum class FamilyKind
{
    theorem3,
    theorem5,
};

[[nodiscard]] std::string_view to_string(FamilyKind kind) noexcept;
[[nodiscard]] FamilyKind parse_family_kind(std::string_view name);

/**
 * \brief A Yao input distribution: instances I_1..I_N drawn uniformly, where
 * I_i submits bundles B_1, ..., B_i in that order.
 */
struct YaoFamily
{
    FamilyKind kind{FamilyKind::theorem3};
    std::int64_t capacity{0};
    Rational epsilon{0}; ///< theorem3 only
    int n{0};            ///< theorem5 only
    int m{0};            ///< theorem5 only
    std::vector<std::vector<Reservation>> bundles;
    std::vector<Instance> instances;
};

/// Six-bundle family for k = T = 2. Requires even C >= 4 and 0 < epsilon < 1/4.
[[nodiscard]] YaoFamily gen_theorem3(std::int64_t capacity, const Rational& epsilon);

/// (n + m + 2)-bundle family with realized k = 2^m, T = 2^(n-1). Requires m, n >= 1 and even C >= 2.
[[nodiscard]] YaoFamily gen_theorem5(int m, int n, std::int64_t capacity);

/// Uniform grid min, min + step, ..., up to max.
struct GridRange
{
    Rational min{0};
    Rational max{0};
    Rational step{1};

    [[nodiscard]] std::vector<Rational> points() const;
};

struct RandomWorkloadSpec
{
    std::size_t job_count{0};
    std::int64_t capacity{1};
    MarketBounds bounds;
    GridRange arrival{0, 0, 1};
    GridRange slack{0, 0, 1}; ///< d - a - t
    GridRange length{1, 1, 1};
    GridRange density{1, 1, 1};
    std::int64_t demand_min{1};
    std::int64_t demand_max{1};
    std::uint64_t seed{0};
};

/// Deterministic in spec.seed; throws std::invalid_argument when a range leaves the bounds.
[[nodiscard]] Instance gen_random(const RandomWorkloadSpec& spec);

} // namespace resv

#endif // RESV_ADVERSARY_HPP
