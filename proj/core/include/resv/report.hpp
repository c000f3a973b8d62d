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

#ifndef RESV_REPORT_HPP
#define RESV_REPORT_HPP

#include <resv/harness.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace resv {

/// Header plus one row per report: instance, mechanism, coins, welfare, revenue,
/// opt, welfare_ratio, revenue_ratio, bound, satisfied. Rationals as "num/den".
[[nodiscard]] std::string ratio_csv(const std::vector<RatioReport>& reports);

/// Per-report fields with every rational as {exact, decimal}, plus worst-case ratios.
[[nodiscard]] std::string ratio_summary_json(const std::vector<RatioReport>& reports);

/// Writes ratio_csv to \p csv_path and ratio_summary_json to \p json_path.
void emit_results(const std::vector<RatioReport>& reports, const std::filesystem::path& csv_path,
                  const std::filesystem::path& json_path);

[[nodiscard]] std::string outcome_json(const Instance& inst, const Outcome& out);
[[nodiscard]] std::string outcome_csv(const Instance& inst, const Outcome& out);

[[nodiscard]] std::string oracle_json(const OracleResult& r);
[[nodiscard]] std::string oracle_csv(const OracleResult& r);

[[nodiscard]] std::string yao_json(const YaoReport& r);
[[nodiscard]] std::string yao_csv(const YaoReport& r);

[[nodiscard]] std::string audit_json(const AuditReport& r);
[[nodiscard]] std::string audit_csv(const AuditReport& r);

} // namespace resv

#endif // RESV_REPORT_HPP
