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

#include <resv/timeline.hpp>

#include <algorithm>
#include <iterator>
#include <string>

namespace resv {

namespace {

std::shared_ptr<const CapacityTimeline::Levels> empty_levels()
{
    static const auto empty = std::make_shared<const CapacityTimeline::Levels>();
    return empty;
}

} // namespace

CapacityTimeline::CapacityTimeline(std::int64_t capacity)
    : capacity_(capacity), levels_(empty_levels())
{
    if (capacity < 1) throw std::invalid_argument("CapacityTimeline: capacity must be positive");
}

CapacityTimeline::CapacityTimeline(std::int64_t capacity, std::shared_ptr<const Levels> levels)
    : capacity_(capacity), levels_(std::move(levels))
{
}

std::int64_t CapacityTimeline::usage(const Time& at) const
{
    auto it = levels_->upper_bound(at);
    if (it == levels_->begin()) return 0;
    return std::prev(it)->second;
}

std::int64_t CapacityTimeline::max_usage(const Time& from, const Time& to) const
{
    if (!(from < to)) return 0;
    std::int64_t peak = usage(from);
    for (auto it = levels_->upper_bound(from); it != levels_->end() && it->first < to; ++it) {
        peak = std::max(peak, it->second);
    }
    return peak;
}

bool CapacityTimeline::fits(const Time& start, const Time& length, std::int64_t demand) const
{
    return max_usage(start, start + length) + demand <= capacity_;
}

std::optional<Time> CapacityTimeline::earliest_feasible_start(const Reservation& job) const
{
    if (job.demand > capacity_) return std::nullopt;
    const Time latest = job.deadline - job.length;
    if (latest < job.arrival) return std::nullopt;

    if (fits(job.arrival, job.length, job.demand)) return job.arrival;
    for (auto it = levels_->upper_bound(job.arrival); it != levels_->end() && it->first <= latest; ++it) {
        if (fits(it->first, job.length, job.demand)) return it->first;
    }
    return std::nullopt;
}

CapacityTimeline CapacityTimeline::commit(const Reservation& job, const Time& start) const
{
    return commit(start, job.length, job.demand);
}

CapacityTimeline CapacityTimeline::commit(const Time& start, const Time& length, std::int64_t demand) const
{
    if (!length.is_positive()) throw std::invalid_argument("CapacityTimeline::commit: non-positive length");
    if (demand < 0) throw std::invalid_argument("CapacityTimeline::commit: negative demand");
    const Time end = start + length;

    Levels next = *levels_;
    // Pin the levels at both ends before shifting the interior.
    next.emplace(end, usage(end));
    next.emplace(start, usage(start));
    for (auto it = next.find(start); it != next.end() && it->first < end; ++it) {
        it->second += demand;
        if (it->second > capacity_) {
            throw CapacityExceeded("commit exceeds capacity " + std::to_string(capacity_) + " at time " +
                                   it->first.str());
        }
    }

    std::int64_t prev = 0;
    for (auto it = next.begin(); it != next.end();) {
        if (it->second == prev) {
            it = next.erase(it);
        } else {
            prev = it->second;
            ++it;
        }
    }
    return CapacityTimeline(capacity_, std::make_shared<const Levels>(std::move(next)));
}

} // namespace resv
