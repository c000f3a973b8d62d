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

#ifndef RESV_IO_HPP
#define RESV_IO_HPP

#include <resv/adversary.hpp>
#include <resv/harness.hpp>
#include <resv/model.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace resv {

inline constexpr int kFormatVersion = 1;

/// Malformed or unsupported input document.
class FormatError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/*
 * Instance document (JSON):
 *   { "version": 1, "capacity": 8,
 *     "bounds": { "rho_min": "1", "rho_max": "2", "t_min": "1", "t_max": "2" },
 *     "jobs": [ { "id": "j1", "a": "0", "d": "5/2", "t": "2", "c": 3, "v": "6" }, ... ] }
 * Rationals are "num/den" strings ("n" for integers); job order is arrival order.
 */
[[nodiscard]] std::string instance_to_json(const Instance& inst);
[[nodiscard]] Instance instance_from_json(std::string_view text);

/*
 * Random workload spec:
 *   { "version": 1, "job_count": 8, "capacity": 8, "bounds": {...},
 *     "arrival": {"min","max","step"}, "slack": {...}, "length": {...}, "density": {...},
 *     "demand": { "min": 1, "max": 8 }, "seed": 7 }
 */
[[nodiscard]] RandomWorkloadSpec workload_spec_from_json(std::string_view text);
[[nodiscard]] std::string workload_spec_to_json(const RandomWorkloadSpec& spec);

/*
 * Deviation grid:
 *   { "version": 1, "time_step": "1/2", "points": 5, "demand_step": 1,
 *     "value_factors": ["1/2", "1", "3/2", "2", "4"] }
 */
[[nodiscard]] DeviationGrid grid_from_json(std::string_view text);

[[nodiscard]] std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

[[nodiscard]] Instance load_instance(const std::filesystem::path& path);
void save_instance(const std::filesystem::path& path, const Instance& inst);

/// Writes family.json (kind, parameters, instance file list) and I1.json..IN.json into \p dir.
void save_family(const std::filesystem::path& dir, const YaoFamily& family);

/// Reads a family directory; bundles are recovered as the jobs each I_i adds to I_(i-1).
[[nodiscard]] YaoFamily load_family(const std::filesystem::path& dir);

} // namespace resv

#endif // RESV_IO_HPP
