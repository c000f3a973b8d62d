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

#include <resv/io.hpp>
#include <resv/report.hpp>

#include <nlohmann/json.hpp>

#include <sstream>

namespace resv {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json num(const Rational& r)
{
    return {{"exact", r.str()}, {"decimal", r.decimal(15)}};
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

template <typename... Fields>
void csv_row(std::ostringstream& os, const Fields&... fields)
{
    bool first = true;
    ((os << (first ? "" : ",") << csv_field(fields), first = false), ...);
    os << '\n';
}

std::string rational_list(const std::vector<Rational>& xs)
{
    std::string s;
    for (const auto& x : xs) s += (s.empty() ? "" : ";") + x.str();
    return s;
}

ordered_json row_json(const StrategyRow& row)
{
    ordered_json ratios = ordered_json::array();
    for (const auto& r : row.ratios) ratios.push_back(num(r));
    return {{"strategy", row.label}, {"accepted", row.accepted}, {"ratios", ratios},
            {"expected_ratio", num(row.expected_ratio)}};
}

} // namespace

std::string ratio_csv(const std::vector<RatioReport>& reports)
{
    std::ostringstream os;
    os << "instance,mechanism,coins,welfare,revenue,opt,welfare_ratio,revenue_ratio,bound,satisfied\n";
    for (const auto& r : reports) {
        csv_row(os, r.instance_id, std::string(to_string(r.mechanism)), "all:" + std::to_string(r.coin_count),
                r.expected_welfare.str(), r.expected_revenue.str(), r.opt_welfare.str(), r.welfare_ratio.str(),
                r.revenue_ratio.str(), r.bound_claimed.str(), std::string(r.bound_satisfied ? "true" : "false"));
    }
    return os.str();
}

std::string ratio_summary_json(const std::vector<RatioReport>& reports)
{
    ordered_json rows = ordered_json::array();
    bool all = true;
    std::optional<Rational> worst_w, worst_r;
    for (const auto& r : reports) {
        rows.push_back({{"instance", r.instance_id},
                        {"mechanism", std::string(to_string(r.mechanism))},
                        {"coin_tuples", r.coin_count},
                        {"expected_welfare", num(r.expected_welfare)},
                        {"expected_revenue", num(r.expected_revenue)},
                        {"opt_welfare", num(r.opt_welfare)},
                        {"welfare_ratio", num(r.welfare_ratio)},
                        {"revenue_ratio", num(r.revenue_ratio)},
                        {"bound_claimed", num(r.bound_claimed)},
                        {"bound_satisfied", r.bound_satisfied}});
        all = all && r.bound_satisfied;
        worst_w = worst_w ? min(*worst_w, r.welfare_ratio) : r.welfare_ratio;
        worst_r = worst_r ? min(*worst_r, r.revenue_ratio) : r.revenue_ratio;
    }
    ordered_json doc = {{"version", kFormatVersion}, {"reports", rows}, {"all_satisfied", all}};
    doc["min_welfare_ratio"] = worst_w ? num(*worst_w) : ordered_json(nullptr);
    doc["min_revenue_ratio"] = worst_r ? num(*worst_r) : ordered_json(nullptr);
    return doc.dump(2) + "\n";
}

void emit_results(const std::vector<RatioReport>& reports, const std::filesystem::path& csv_path,
                  const std::filesystem::path& json_path)
{
    write_text(csv_path, ratio_csv(reports));
    write_text(json_path, ratio_summary_json(reports));
}

std::string outcome_json(const Instance& inst, const Outcome& out)
{
    ordered_json decisions = ordered_json::array();
    for (std::size_t k = 0; k < out.decisions.size(); ++k) {
        const auto& d = out.decisions[k];
        ordered_json e = {{"id", inst.jobs[k].id}, {"accepted", d.accepted}};
        if (d.accepted) {
            e["price"] = d.price->str();
            e["start"] = d.start->str();
        }
        decisions.push_back(e);
    }
    ordered_json coins = {{"i", out.coins.i}};
    if (out.coins.u) coins["u"] = *out.coins.u;
    if (out.coins.v) coins["v"] = *out.coins.v;
    ordered_json doc = {{"version", kFormatVersion}, {"coins", coins}, {"decisions", decisions},
                        {"welfare", num(out.welfare)}, {"revenue", num(out.revenue)}};
    return doc.dump(2) + "\n";
}

std::string outcome_csv(const Instance& inst, const Outcome& out)
{
    std::ostringstream os;
    os << "id,accepted,price,start,coins\n";
    for (std::size_t k = 0; k < out.decisions.size(); ++k) {
        const auto& d = out.decisions[k];
        csv_row(os, inst.jobs[k].id, std::string(d.accepted ? "true" : "false"), d.accepted ? d.price->str() : "",
                d.accepted ? d.start->str() : "", out.coins.str());
    }
    return os.str();
}

std::string oracle_json(const OracleResult& r)
{
    ordered_json witness = ordered_json::array();
    for (const auto& p : r.witness) witness.push_back({{"id", p.job_id}, {"start", p.start.str()}});
    ordered_json doc = {{"version", kFormatVersion}, {"opt_welfare", num(r.opt_welfare)}, {"witness", witness},
                        {"explored_nodes", r.explored_nodes}};
    return doc.dump(2) + "\n";
}

std::string oracle_csv(const OracleResult& r)
{
    std::ostringstream os;
    os << "opt_welfare,explored_nodes,id,start\n";
    const auto opt = r.opt_welfare.str();
    const auto nodes = std::to_string(r.explored_nodes);
    if (r.witness.empty()) csv_row(os, opt, nodes, std::string(), std::string());
    for (const auto& p : r.witness) csv_row(os, opt, nodes, p.job_id, p.start.str());
    return os.str();
}

std::string yao_json(const YaoReport& r)
{
    ordered_json rows = ordered_json::array();
    for (const auto& row : r.rows) rows.push_back(row_json(row));
    ordered_json opt = ordered_json::array();
    for (const auto& o : r.opt) opt.push_back(num(o));
    ordered_json pairs = ordered_json::array();
    for (const auto& [x, y] : r.compatible_cross_pairs) pairs.push_back({x, y});

    ordered_json doc = {{"version", kFormatVersion},
                        {"kind", std::string(to_string(r.kind))},
                        {"opt", opt},
                        {"strategies", rows},
                        {"best_strategy", r.best_label},
                        {"best_expected_ratio", num(r.best_expected_ratio)},
                        {"exhaustive_best", row_json(r.exhaustive_best)},
                        {"patterns_cover_exhaustive", r.patterns_cover_exhaustive},
                        {"analytic_limit", num(r.analytic_limit)},
                        {"compatible_cross_bundle_pairs", pairs}};
    if (r.kind == FamilyKind::theorem5) {
        ordered_json ideal = ordered_json::array();
        for (const auto& row : r.idealized_rows) ideal.push_back(row_json(row));
        ordered_json closed = ordered_json::array();
        for (const auto& c : r.closed_form) closed.push_back(num(c));
        doc["idealized_strategies"] = ideal;
        doc["idealized_best"] = num(r.idealized_best);
        doc["closed_form"] = closed;
        doc["log2_8kT"] = r.log2_8kT ? ordered_json(*r.log2_8kT) : ordered_json(nullptr);
        doc["upper_bound"] = num(r.upper_bound);
    }
    return doc.dump(2) + "\n";
}

std::string yao_csv(const YaoReport& r)
{
    std::ostringstream os;
    os << "table,strategy,accepted,ratios,expected_ratio,expected_ratio_decimal\n";
    auto emit = [&](const char* table, const StrategyRow& row) {
        std::string ids;
        for (const auto& id : row.accepted) ids += (ids.empty() ? "" : ";") + id;
        csv_row(os, std::string(table), row.label, ids, rational_list(row.ratios), row.expected_ratio.str(),
                row.expected_ratio.decimal(15));
    };
    for (const auto& row : r.rows) emit("pattern", row);
    for (const auto& row : r.idealized_rows) emit("idealized", row);
    emit("exhaustive", r.exhaustive_best);
    auto value = [&](const char* name, const Rational& x) {
        csv_row(os, std::string("summary"), std::string(name), std::string(), std::string(), x.str(), x.decimal(15));
    };
    value("analytic_limit", r.analytic_limit);
    if (r.kind == FamilyKind::theorem5) {
        value("idealized_best", r.idealized_best);
        if (r.log2_8kT) value("upper_bound", r.upper_bound);
    }
    return os.str();
}

std::string audit_json(const AuditReport& r)
{
    ordered_json prof = ordered_json::array();
    for (const auto& p : r.profitable) {
        prof.push_back({{"id", p.job_id},
                        {"a", p.misreport.arrival.str()},
                        {"d", p.misreport.deadline.str()},
                        {"t", p.misreport.length.str()},
                        {"c", p.misreport.demand},
                        {"v", p.misreport.value.str()},
                        {"gain", num(p.gain)}});
    }
    ordered_json doc = {{"version", kFormatVersion},
                        {"instance", r.instance_id},
                        {"mechanism", std::string(to_string(r.mechanism))},
                        {"coins", r.coins.str()},
                        {"deviations_tested", r.deviations_tested},
                        {"profitable_deviations", prof}};
    return doc.dump(2) + "\n";
}

std::string audit_csv(const AuditReport& r)
{
    std::ostringstream os;
    os << "instance,mechanism,coins,deviations_tested,job,a,d,t,c,v,gain\n";
    if (r.profitable.empty()) {
        csv_row(os, r.instance_id, std::string(to_string(r.mechanism)), r.coins.str(),
                std::to_string(r.deviations_tested), "", "", "", "", "", "", "");
    }
    for (const auto& p : r.profitable) {
        csv_row(os, r.instance_id, std::string(to_string(r.mechanism)), r.coins.str(),
                std::to_string(r.deviations_tested), p.job_id, p.misreport.arrival.str(), p.misreport.deadline.str(),
                p.misreport.length.str(), std::to_string(p.misreport.demand), p.misreport.value.str(), p.gain.str());
    }
    return os.str();
}

} // namespace resv
