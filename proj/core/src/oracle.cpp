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

#include <resv/oracle.hpp>
#include <resv/timeline.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

namespace resv {

namespace {

constexpr std::size_t kMaxCandidateTimes = 200'000;

class NodeBudget
{
public:
    explicit NodeBudget(std::uint64_t cap) : cap_(cap) {}

    void tick()
    {
        if (++count_ > cap_) {
            throw OracleCapExceeded("oracle node budget of " + std::to_string(cap_) + " exhausted", count_);
        }
    }

    [[nodiscard]] std::uint64_t count() const noexcept { return count_; }

private:
    std::uint64_t cap_;
    std::uint64_t count_{0};
};

// Releases plus any sum of job lengths, up to the latest admissible start.
std::vector<Time> left_shift_times(const Instance& inst, std::span<const std::size_t> subset, NodeBudget& budget)
{
    std::set<Time> lengths;
    Time horizon;
    bool first = true;
    for (auto idx : subset) {
        const auto& j = inst.jobs[idx];
        lengths.insert(j.length);
        const Time latest = j.deadline - j.length;
        if (first || horizon < latest) horizon = latest;
        first = false;
    }

    std::set<Time> seen;
    std::vector<Time> frontier;
    for (auto idx : subset) {
        const auto& a = inst.jobs[idx].arrival;
        if (a <= horizon && seen.insert(a).second) frontier.push_back(a);
    }
    while (!frontier.empty()) {
        const Time x = frontier.back();
        frontier.pop_back();
        for (const auto& t : lengths) {
            const Time y = x + t;
            if (horizon < y) break;
            if (seen.insert(y).second) {
                frontier.push_back(y);
                if (seen.size() > kMaxCandidateTimes) {
                    throw OracleCapExceeded("too many candidate start times", budget.count());
                }
            }
        }
    }
    return {seen.begin(), seen.end()};
}

class FeasibilitySearch
{
public:
    FeasibilitySearch(const Instance& inst, std::span<const std::size_t> subset, NodeBudget& budget)
        : inst_(inst), order_(subset.begin(), subset.end()), budget_(budget)
    {
        std::sort(order_.begin(), order_.end(), [&](std::size_t x, std::size_t y) {
            const auto& jx = inst.jobs[x];
            const auto& jy = inst.jobs[y];
            if (jx.deadline != jy.deadline) return jx.deadline < jy.deadline;
            if (jx.arrival != jy.arrival) return jx.arrival < jy.arrival;
            return x < y;
        });
        const auto times = left_shift_times(inst, subset, budget);
        candidates_.reserve(order_.size());
        for (auto idx : order_) {
            const auto& j = inst.jobs[idx];
            const Time latest = j.deadline - j.length;
            std::vector<Time> c;
            for (auto it = std::lower_bound(times.begin(), times.end(), j.arrival); it != times.end() && *it <= latest; ++it) {
                c.push_back(*it);
            }
            candidates_.push_back(std::move(c));
        }
        starts_.resize(order_.size());
    }

    std::optional<std::vector<Placement>> run()
    {
        for (std::size_t k = 0; k < order_.size(); ++k) {
            if (candidates_[k].empty() || inst_.jobs[order_[k]].demand > inst_.capacity) return std::nullopt;
        }
        if (!dfs(0, CapacityTimeline(inst_.capacity))) return std::nullopt;

        std::vector<std::pair<std::size_t, Time>> placed;
        for (std::size_t k = 0; k < order_.size(); ++k) placed.emplace_back(order_[k], starts_[k]);
        std::sort(placed.begin(), placed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        std::vector<Placement> out;
        for (auto& [idx, s] : placed) out.push_back({inst_.jobs[idx].id, s});
        return out;
    }

private:
    bool dfs(std::size_t k, const CapacityTimeline& tl)
    {
        budget_.tick();
        if (k == order_.size()) return true;
        const auto& job = inst_.jobs[order_[k]];
        for (const auto& s : candidates_[k]) {
            if (!tl.fits(s, job.length, job.demand)) continue;
            starts_[k] = s;
            if (dfs(k + 1, tl.commit(job, s))) return true;
        }
        return false;
    }

    const Instance& inst_;
    std::vector<std::size_t> order_;
    NodeBudget& budget_;
    std::vector<std::vector<Time>> candidates_;
    std::vector<Time> starts_;
};

std::optional<std::vector<Placement>> feasible_with_budget(const Instance& inst, std::span<const std::size_t> subset,
                                                           const OracleLimits& limits, NodeBudget& budget)
{
    if (subset.size() > limits.max_jobs) {
        throw OracleCapExceeded("subset of " + std::to_string(subset.size()) + " jobs exceeds search cap of " +
                                    std::to_string(limits.max_jobs),
                                budget.count());
    }
    for (auto idx : subset) {
        if (idx >= inst.jobs.size()) throw std::out_of_range("subset_feasible: job index out of range");
    }
    if (subset.empty()) return std::vector<Placement>{};
    return FeasibilitySearch(inst, subset, budget).run();
}

class BranchAndBound
{
public:
    BranchAndBound(const Instance& inst, const OracleLimits& limits)
        : inst_(inst), limits_(limits), budget_(limits.max_nodes)
    {
        for (std::size_t i = 0; i < inst.jobs.size(); ++i) {
            const auto& j = inst.jobs[i];
            if (j.demand <= inst.capacity && j.length <= j.deadline - j.arrival) order_.push_back(i);
        }
        std::stable_sort(order_.begin(), order_.end(),
                         [&](std::size_t x, std::size_t y) { return inst.jobs[y].value < inst.jobs[x].value; });
        suffix_.assign(order_.size() + 1, Money(0));
        for (std::size_t k = order_.size(); k-- > 0;) suffix_[k] = suffix_[k + 1] + inst.jobs[order_[k]].value;
    }

    OracleResult solve()
    {
        std::vector<std::size_t> chosen;
        std::unordered_map<std::string, Time> starts;
        descend(0, chosen, starts, CapacityTimeline(inst_.capacity), Money(0));

        OracleResult r;
        r.opt_welfare = best_;
        for (const auto& j : inst_.jobs) {
            if (auto it = best_starts_.find(j.id); it != best_starts_.end()) r.witness.push_back({j.id, it->second});
        }
        r.explored_nodes = budget_.count();
        return r;
    }

private:
    void descend(std::size_t pos, std::vector<std::size_t>& chosen, const std::unordered_map<std::string, Time>& starts,
                 const CapacityTimeline& tl, const Money& value)
    {
        budget_.tick();
        if (best_ < value) {
            best_ = value;
            best_starts_ = starts;
        }
        if (pos == order_.size() || value + suffix_[pos] <= best_) return;

        const auto idx = order_[pos];
        const auto& job = inst_.jobs[idx];

        chosen.push_back(idx);
        if (auto s = tl.earliest_feasible_start(job)) {
            auto next = starts;
            next.emplace(job.id, *s);
            descend(pos + 1, chosen, next, tl.commit(job, *s), value + job.value);
        } else if (auto witness = feasible_with_budget(inst_, chosen, limits_, budget_)) {
            std::unordered_map<std::string, Time> next;
            CapacityTimeline rebuilt(inst_.capacity);
            for (const auto& p : *witness) {
                next.emplace(p.job_id, p.start);
                rebuilt = rebuilt.commit(lookup(p.job_id), p.start);
            }
            descend(pos + 1, chosen, next, rebuilt, value + job.value);
        }
        chosen.pop_back();

        descend(pos + 1, chosen, starts, tl, value);
    }

    const Reservation& lookup(const std::string& id) const
    {
        for (const auto& j : inst_.jobs) {
            if (j.id == id) return j;
        }
        throw std::logic_error("oracle: witness names unknown job " + id);
    }

    const Instance& inst_;
    const OracleLimits& limits_;
    NodeBudget budget_;
    std::vector<std::size_t> order_;
    std::vector<Money> suffix_;
    Money best_{0};
    std::unordered_map<std::string, Time> best_starts_;
};

} // namespace

std::optional<std::vector<Placement>> subset_feasible(const Instance& inst, std::span<const std::size_t> subset,
                                                      const OracleLimits& limits)
{
    NodeBudget budget(limits.max_nodes);
    return feasible_with_budget(inst, subset, limits, budget);
}

std::optional<std::vector<Placement>> subset_feasible(const Instance& inst, const std::vector<std::string>& ids,
                                                      const OracleLimits& limits)
{
    std::vector<std::size_t> subset;
    for (const auto& id : ids) {
        auto it = std::find_if(inst.jobs.begin(), inst.jobs.end(), [&](const Reservation& j) { return j.id == id; });
        if (it == inst.jobs.end()) throw std::invalid_argument("subset_feasible: unknown job id " + id);
        subset.push_back(static_cast<std::size_t>(it - inst.jobs.begin()));
    }
    return subset_feasible(inst, std::span<const std::size_t>(subset), limits);
}

OracleResult optimal_welfare(const Instance& inst, const OracleLimits& limits)
{
    if (inst.jobs.size() > limits.max_jobs) {
        throw OracleCapExceeded("instance of " + std::to_string(inst.jobs.size()) + " jobs exceeds search cap of " +
                                    std::to_string(limits.max_jobs),
                                0);
    }
    return BranchAndBound(inst, limits).solve();
}

bool verify_witness(const Instance& inst, const std::vector<Placement>& witness)
{
    CapacityTimeline tl(inst.capacity);
    std::set<std::string> used;
    for (const auto& p : witness) {
        auto it = std::find_if(inst.jobs.begin(), inst.jobs.end(), [&](const Reservation& j) { return j.id == p.job_id; });
        if (it == inst.jobs.end() || !used.insert(p.job_id).second) return false;
        if (p.start < it->arrival || it->deadline < p.start + it->length) return false;
        if (!tl.fits(p.start, it->length, it->demand)) return false;
        tl = tl.commit(*it, p.start);
    }
    return true;
}

} // namespace resv
