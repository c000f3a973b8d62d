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

#include <resv/model.hpp>

#include <set>
#include <sstream>

namespace resv {

namespace {

std::string describe(const std::vector<Violation>& vs)
{
    std::ostringstream os;
    os << "invalid instance:";
    for (const auto& v : vs) {
        os << ' ' << (v.job_id.empty() ? std::string("<instance>") : v.job_id) << ": " << v.predicate << ';';
    }
    return os.str();
}

} // namespace

InvalidInstance::InvalidInstance(std::vector<Violation> violations)
    : std::invalid_argument(describe(violations)), violations_(std::move(violations))
{
}

std::vector<Violation> validate_instance(const Instance& inst)
{
    std::vector<Violation> out;
    const auto& b = inst.bounds;

    if (inst.capacity < 1) out.push_back({"", "capacity must be positive"});
    if (!b.rho_min.is_positive()) out.push_back({"", "rho_min must be positive"});
    if (!b.t_min.is_positive()) out.push_back({"", "t_min must be positive"});
    if (b.rho_max < b.rho_min) out.push_back({"", "rho_min exceeds rho_max"});
    if (b.t_max < b.t_min) out.push_back({"", "t_min exceeds t_max"});

    std::set<std::string> seen;
    for (const auto& j : inst.jobs) {
        auto flag = [&](const char* what) { out.push_back({j.id, what}); };
        if (!seen.insert(j.id).second) flag("duplicate id");
        if (!j.length.is_positive()) flag("length must be positive");
        if (j.demand < 1) flag("demand must be at least 1");
        if (!j.value.is_positive()) flag("value must be positive");
        if (j.length > j.deadline - j.arrival) flag("length exceeds window");
        if (j.length < b.t_min || j.length > b.t_max) flag("length outside [t_min, t_max]");
        if (j.length.is_positive() && j.demand >= 1) {
            const auto rho = j.density();
            if (rho < b.rho_min || rho > b.rho_max) flag("density outside [rho_min, rho_max]");
        }
    }
    return out;
}

MarketBounds realized_bounds(const Instance& inst)
{
    if (inst.jobs.empty()) return inst.bounds;
    MarketBounds r;
    r.rho_min = r.rho_max = inst.jobs.front().density();
    r.t_min = r.t_max = inst.jobs.front().length;
    for (const auto& j : inst.jobs) {
        const auto rho = j.density();
        r.rho_min = min(r.rho_min, rho);
        r.rho_max = max(r.rho_max, rho);
        r.t_min = min(r.t_min, j.length);
        r.t_max = max(r.t_max, j.length);
    }
    return r;
}

std::string Coins::str() const
{
    std::string s = "i=" + std::to_string(i);
    if (u) s += ";u=" + std::to_string(*u);
    if (v) s += ";v=" + std::to_string(*v);
    return s;
}

} // namespace resv
