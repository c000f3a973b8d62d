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

#include <random>
#include <stdexcept>
#include <string>

namespace resv {

std::string_view to_string(FamilyKind kind) noexcept
{
    return kind == FamilyKind::theorem3 ? "theorem3" : "theorem5";
}

FamilyKind parse_family_kind(std::string_view name)
{
    if (name == "theorem3") return FamilyKind::theorem3;
    if (name == "theorem5") return FamilyKind::theorem5;
    throw std::invalid_argument("unknown family kind '" + std::string(name) + "'");
}

namespace {

Reservation job(int bundle, int index, Time a, Time d, Time t, std::int64_t c, Money v)
{
    return {"B" + std::to_string(bundle) + "." + std::to_string(index), std::move(a), std::move(d), std::move(t), c,
            std::move(v)};
}

void build_prefix_instances(YaoFamily& fam, const MarketBounds& bounds)
{
    Instance inst{fam.capacity, bounds, {}};
    for (const auto& bundle : fam.bundles) {
        inst.jobs.insert(inst.jobs.end(), bundle.begin(), bundle.end());
        fam.instances.push_back(inst);
    }
}

} // namespace

YaoFamily gen_theorem3(std::int64_t capacity, const Rational& epsilon)
{
    if (capacity < 4 || capacity % 2 != 0) throw std::invalid_argument("theorem3 family needs an even capacity >= 4");
    if (!epsilon.is_positive() || !(epsilon < Rational(1, 4))) {
        throw std::invalid_argument("theorem3 family needs 0 < epsilon < 1/4");
    }

    YaoFamily fam;
    fam.kind = FamilyKind::theorem3;
    fam.capacity = capacity;
    fam.epsilon = epsilon;

    const std::int64_t half = capacity / 2 + 1;
    const Rational C(capacity);
    const Rational h(half);
    const Rational eps = epsilon;
    const Rational one(1), two(2), three(3);
    const Rational half1(1, 2), three_half(3, 2), five_half(5, 2), seven_half(7, 2), nine_half(9, 2);

    fam.bundles = {
        {job(1, 1, two - eps, three + eps, one + two * eps, half, (one + two * eps) * h)},
        {job(2, 1, three_half, seven_half, two, half, two * h)},
        {job(3, 1, three_half, seven_half, two, half, Rational(4) * h)},
        {job(4, 1, half1, five_half, two, half, Rational(4) * h),
         job(4, 2, five_half, nine_half, two, half, Rational(4) * h)},
        {job(5, 1, half1, five_half, two, capacity, Rational(4) * C),
         job(5, 2, five_half, nine_half, two, capacity, Rational(4) * C)},
        {job(6, 1, Rational(0), two, two, capacity, Rational(4) * C),
         job(6, 2, three, Rational(5), two, capacity, Rational(4) * C),
         job(6, 3, two, three, one, capacity, two * C)},
    };

    build_prefix_instances(fam, MarketBounds{one, two, one, two});
    return fam;
}

YaoFamily gen_theorem5(int m, int n, std::int64_t capacity)
{
    if (m < 1 || n < 1) throw std::invalid_argument("theorem5 family needs m, n >= 1");
    if (capacity < 2 || capacity % 2 != 0) throw std::invalid_argument("theorem5 family needs an even capacity");
    if (2 * n + 1 > 62 || n + m + 1 > 52) throw std::invalid_argument("theorem5 parameters too large");

    YaoFamily fam;
    fam.kind = FamilyKind::theorem5;
    fam.capacity = capacity;
    fam.n = n;
    fam.m = m;

    const Rational C(capacity);
    const std::int64_t half = capacity / 2 + 1;
    const Rational two_n = pow2(n);
    const int total = n + m + 2;

    for (int i = 1; i <= n; ++i) {
        fam.bundles.push_back(
            {job(i, 1, two_n - pow2(i - 1), two_n + pow2(i - 1), pow2(i), half, pow2(i - 1) * (C + Rational(2)))});
    }
    for (int i = n + 1; i <= n + m; ++i) {
        fam.bundles.push_back({job(i, 1, pow2(n - 1), two_n + pow2(n - 1), two_n, half, pow2(i - 1) * (C + Rational(2)))});
    }
    {
        const int i = n + m + 1;
        fam.bundles.push_back({job(i, 1, pow2(n - 1), two_n + pow2(n - 1), two_n, capacity, pow2(i - 1) * C)});
    }
    {
        const int i = total;
        fam.bundles.push_back({job(i, 1, Rational(0), two_n, two_n, capacity, pow2(i - 2) * C),
                               job(i, 2, two_n, pow2(2 * n), two_n, capacity, pow2(i - 2) * C)});
    }

    MarketBounds bounds{Rational(1), pow2(m), Rational(2), two_n};
    build_prefix_instances(fam, bounds);
    return fam;
}

std::vector<Rational> GridRange::points() const
{
    if (!step.is_positive()) throw std::invalid_argument("grid step must be positive");
    if (max < min) throw std::invalid_argument("grid max below min");
    std::vector<Rational> out;
    for (Rational x = min; x <= max; x += step) out.push_back(x);
    return out;
}

Instance gen_random(const RandomWorkloadSpec& spec)
{
    const auto arrivals = spec.arrival.points();
    const auto slacks = spec.slack.points();
    const auto lengths = spec.length.points();
    const auto densities = spec.density.points();
    if (spec.capacity < 1) throw std::invalid_argument("capacity must be positive");
    if (spec.demand_min < 1 || spec.demand_max < spec.demand_min) throw std::invalid_argument("bad demand range");
    if (slacks.front().is_negative()) throw std::invalid_argument("slack must be non-negative");
    if (lengths.front() < spec.bounds.t_min || spec.bounds.t_max < lengths.back()) {
        throw std::invalid_argument("length range leaves [t_min, t_max]");
    }
    if (densities.front() < spec.bounds.rho_min || spec.bounds.rho_max < densities.back()) {
        throw std::invalid_argument("density range leaves [rho_min, rho_max]");
    }

    std::mt19937_64 rng(spec.seed);
    auto pick = [&rng](const std::vector<Rational>& xs) {
        return xs[std::uniform_int_distribution<std::size_t>(0, xs.size() - 1)(rng)];
    };

    Instance inst{spec.capacity, spec.bounds, {}};
    inst.jobs.reserve(spec.job_count);
    for (std::size_t k = 0; k < spec.job_count; ++k) {
        Reservation j;
        j.id = "j" + std::to_string(k + 1);
        j.arrival = pick(arrivals);
        j.length = pick(lengths);
        j.deadline = j.arrival + j.length + pick(slacks);
        j.demand = std::uniform_int_distribution<std::int64_t>(spec.demand_min, spec.demand_max)(rng);
        j.value = pick(densities) * Rational(j.demand) * j.length;
        inst.jobs.push_back(std::move(j));
    }
    return inst;
}

} // namespace resv
