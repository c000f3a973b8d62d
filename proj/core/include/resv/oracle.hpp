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

#ifndef RESV_ORACLE_HPP
#define RESV_ORACLE_HPP

#include <resv/model.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace resv {

struct Placement
{
    std::string job_id;
    Time start;

    friend bool operator==(const Placement&, const Placement&) = default;
};

struct OracleLimits
{
    std::size_t max_jobs{12};
    std::uint64_t max_nodes{1'000'000};
};

/// The instance or subset is beyond what the exact search is allowed to explore.
class OracleCapExceeded : public std::runtime_error
{
public:
    OracleCapExceeded(const std::string& what, std::uint64_t explored)
        : std::runtime_error(what), explored_nodes(explored)
    {
    }

    std::uint64_t explored_nodes;
};

struct OracleResult
{
    Money opt_welfare{0};
    std::vector<Placement> witness; ///< instance order
    std::uint64_t explored_nodes{0};
};

/**
 * \brief Exact feasibility of running every job in \p subset (indices into inst.jobs).
 *
 * Starts are drawn from releases plus sums of subset job lengths, clipped to
 * each window. That set contains a left-shifted schedule whenever any
 * feasible schedule exists, so exhausting it by depth-first search (jobs in
 * deadline order) is exact.
 */
[[nodiscard]] std::optional<std::vector<Placement>> subset_feasible(const Instance& inst,
                                                                    std::span<const std::size_t> subset,
                                                                    const OracleLimits& limits = {});

/// Same, addressing jobs by id; unknown ids raise std::invalid_argument.
[[nodiscard]] std::optional<std::vector<Placement>> subset_feasible(const Instance& inst,
                                                                    const std::vector<std::string>& ids,
                                                                    const OracleLimits& limits = {});

/// Maximum total value over feasible subsets, by branch-and-bound on value-sorted jobs.
[[nodiscard]] OracleResult optimal_welfare(const Instance& inst, const OracleLimits& limits = {});

/// Replays \p witness on an empty timeline; false on any window or capacity violation.
[[nodiscard]] bool verify_witness(const Instance& inst, const std::vector<Placement>& witness);

} // namespace resv

#endif // RESV_ORACLE_HPP
