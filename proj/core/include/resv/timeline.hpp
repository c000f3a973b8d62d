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

#ifndef RESV_TIMELINE_HPP
#define RESV_TIMELINE_HPP

#include <resv/model.hpp>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>

namespace resv {

/// A commit that would push usage above capacity; always a caller bug.
class CapacityExceeded : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

/**
 * \brief Piecewise-constant usage profile over half-open segments.
 *
 * Each breakpoint maps to the usage level active on [breakpoint, next breakpoint).
 * Usage is zero before the first and from the last breakpoint on, and adjacent
 * levels always differ. Values are immutable: commit() returns a new timeline
 * and shares nothing mutable with the original.
 */
class CapacityTimeline
{
public:
    using Levels = std::map<Time, std::int64_t>;

    explicit CapacityTimeline(std::int64_t capacity);

    [[nodiscard]] std::int64_t capacity() const noexcept { return capacity_; }
    [[nodiscard]] const Levels& levels() const noexcept { return *levels_; }

    [[nodiscard]] std::int64_t usage(const Time& at) const;
    [[nodiscard]] std::int64_t residual_capacity(const Time& at) const { return capacity_ - usage(at); }

    /// Peak usage on [from, to); zero for an empty interval.
    [[nodiscard]] std::int64_t max_usage(const Time& from, const Time& to) const;

    /// True when \p demand more units fit throughout [start, start + length).
    [[nodiscard]] bool fits(const Time& start, const Time& length, std::int64_t demand) const;

    /**
     * Minimum s in [a, d - t] such that c units are free throughout [s, s + t).
     * Only a and the breakpoints inside the window are candidates; usage is
     * constant between breakpoints so feasibility can only begin at one of them.
     */
    [[nodiscard]] std::optional<Time> earliest_feasible_start(const Reservation& job) const;

    /// Usage raised by job.demand on [start, start + job.length).
    [[nodiscard]] CapacityTimeline commit(const Reservation& job, const Time& start) const;
    [[nodiscard]] CapacityTimeline commit(const Time& start, const Time& length, std::int64_t demand) const;

private:
    CapacityTimeline(std::int64_t capacity, std::shared_ptr<const Levels> levels);

    std::int64_t capacity_;
    std::shared_ptr<const Levels> levels_;
};

} // namespace resv

#endif // RESV_TIMELINE_HPP
