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

#include <nlohmann/json.hpp>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <sstream>

namespace resv {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

Rational rational_field(const json& j, const char* key)
{
    if (!j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
    const auto& v = j.at(key);
    try {
        if (v.is_string()) return Rational::parse(v.get<std::string>());
        if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("field '") + key + "': " + e.what());
    }
    throw FormatError(std::string("field '") + key + "' must be a \"num/den\" string");
}

std::int64_t int_field(const json& j, const char* key)
{
    if (!j.contains(key) || !j.at(key).is_number_integer()) {
        throw FormatError(std::string("field '") + key + "' must be an integer");
    }
    return j.at(key).get<std::int64_t>();
}

void check_version(const json& j)
{
    if (!j.contains("version") || !j.at("version").is_number_integer()) throw FormatError("missing 'version'");
    if (j.at("version").get<int>() != kFormatVersion) {
        throw FormatError("unsupported version " + std::to_string(j.at("version").get<int>()));
    }
}

json parse_document(std::string_view text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("malformed JSON: ") + e.what());
    }
}

json bounds_json(const MarketBounds& b)
{
    return {{"rho_min", b.rho_min.str()}, {"rho_max", b.rho_max.str()}, {"t_min", b.t_min.str()}, {"t_max", b.t_max.str()}};
}

MarketBounds bounds_from(const json& j)
{
    if (!j.is_object()) throw FormatError("'bounds' must be an object");
    return {rational_field(j, "rho_min"), rational_field(j, "rho_max"), rational_field(j, "t_min"),
            rational_field(j, "t_max")};
}

GridRange range_from(const json& parent, const char* key)
{
    if (!parent.contains(key) || !parent.at(key).is_object()) {
        throw FormatError(std::string("missing range '") + key + "'");
    }
    const auto& j = parent.at(key);
    GridRange r{rational_field(j, "min"), rational_field(j, "max"), Rational(1)};
    if (j.contains("step")) r.step = rational_field(j, "step");
    return r;
}

json range_json(const GridRange& r)
{
    return {{"min", r.min.str()}, {"max", r.max.str()}, {"step", r.step.str()}};
}

} // namespace

std::string instance_to_json(const Instance& inst)
{
    json jobs = json::array();
    for (const auto& j : inst.jobs) {
        jobs.push_back({{"id", j.id},
                        {"a", j.arrival.str()},
                        {"d", j.deadline.str()},
                        {"t", j.length.str()},
                        {"c", j.demand},
                        {"v", j.value.str()}});
    }
    json doc = {{"version", kFormatVersion}, {"capacity", inst.capacity}, {"bounds", bounds_json(inst.bounds)},
                {"jobs", jobs}};
    return doc.dump(2) + "\n";
}

Instance instance_from_json(std::string_view text)
{
    const json doc = parse_document(text);
    check_version(doc);
    Instance inst;
    inst.capacity = int_field(doc, "capacity");
    if (!doc.contains("bounds")) throw FormatError("missing 'bounds'");
    inst.bounds = bounds_from(doc.at("bounds"));
    if (!doc.contains("jobs") || !doc.at("jobs").is_array()) throw FormatError("'jobs' must be an array");
    for (const auto& j : doc.at("jobs")) {
        Reservation r;
        if (!j.contains("id")) throw FormatError("job without 'id'");
        r.id = j.at("id").is_string() ? j.at("id").get<std::string>() : j.at("id").dump();
        r.arrival = rational_field(j, "a");
        r.deadline = rational_field(j, "d");
        r.length = rational_field(j, "t");
        r.demand = int_field(j, "c");
        r.value = rational_field(j, "v");
        inst.jobs.push_back(std::move(r));
    }
    return inst;
}

RandomWorkloadSpec workload_spec_from_json(std::string_view text)
{
    const json doc = parse_document(text);
    check_version(doc);
    RandomWorkloadSpec s;
    s.job_count = static_cast<std::size_t>(int_field(doc, "job_count"));
    s.capacity = int_field(doc, "capacity");
    if (!doc.contains("bounds")) throw FormatError("missing 'bounds'");
    s.bounds = bounds_from(doc.at("bounds"));
    s.arrival = range_from(doc, "arrival");
    s.slack = range_from(doc, "slack");
    s.length = range_from(doc, "length");
    s.density = range_from(doc, "density");
    if (!doc.contains("demand")) throw FormatError("missing 'demand'");
    s.demand_min = int_field(doc.at("demand"), "min");
    s.demand_max = int_field(doc.at("demand"), "max");
    if (doc.contains("seed")) s.seed = doc.at("seed").get<std::uint64_t>();
    return s;
}

std::string workload_spec_to_json(const RandomWorkloadSpec& s)
{
    json doc = {{"version", kFormatVersion},
                {"job_count", s.job_count},
                {"capacity", s.capacity},
                {"bounds", bounds_json(s.bounds)},
                {"arrival", range_json(s.arrival)},
                {"slack", range_json(s.slack)},
                {"length", range_json(s.length)},
                {"density", range_json(s.density)},
                {"demand", {{"min", s.demand_min}, {"max", s.demand_max}}},
                {"seed", s.seed}};
    return doc.dump(2) + "\n";
}

DeviationGrid grid_from_json(std::string_view text)
{
    const json doc = parse_document(text);
    check_version(doc);
    DeviationGrid g;
    if (doc.contains("time_step")) g.time_step = rational_field(doc, "time_step");
    if (doc.contains("points")) g.points = static_cast<int>(int_field(doc, "points"));
    if (doc.contains("demand_step")) g.demand_step = int_field(doc, "demand_step");
    if (doc.contains("value_factors")) {
        g.value_factors.clear();
        for (const auto& f : doc.at("value_factors")) {
            try {
                g.value_factors.push_back(f.is_string() ? Rational::parse(f.get<std::string>())
                                                        : Rational(f.get<std::int64_t>()));
            } catch (const std::exception& e) {
                throw FormatError(std::string("value_factors: ") + e.what());
            }
        }
    }
    return g;
}

std::string read_text(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error(path.string() + ": " + std::strerror(errno));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const fs::path& path, std::string_view text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error(path.string() + ": " + std::strerror(errno));
    out << text;
    out.flush();
    if (!out) throw std::runtime_error(path.string() + ": " + std::strerror(errno));
}

Instance load_instance(const fs::path& path)
{
    return instance_from_json(read_text(path));
}

void save_instance(const fs::path& path, const Instance& inst)
{
    write_text(path, instance_to_json(inst));
}

void save_family(const fs::path& dir, const YaoFamily& family)
{
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw std::runtime_error(dir.string() + ": " + ec.message());

    json files = json::array();
    for (std::size_t i = 0; i < family.instances.size(); ++i) {
        const auto name = "I" + std::to_string(i + 1) + ".json";
        save_instance(dir / name, family.instances[i]);
        files.push_back(name);
    }
    json doc = {{"version", kFormatVersion},
                {"kind", std::string(to_string(family.kind))},
                {"capacity", family.capacity},
                {"instances", files}};
    if (family.kind == FamilyKind::theorem3) {
        doc["epsilon"] = family.epsilon.str();
    } else {
        doc["n"] = family.n;
        doc["m"] = family.m;
    }
    write_text(dir / "family.json", doc.dump(2) + "\n");
}

YaoFamily load_family(const fs::path& dir)
{
    const json doc = parse_document(read_text(dir / "family.json"));
    check_version(doc);
    YaoFamily fam;
    if (!doc.contains("kind") || !doc.at("kind").is_string()) throw FormatError("family: missing 'kind'");
    try {
        fam.kind = parse_family_kind(doc.at("kind").get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
    fam.capacity = int_field(doc, "capacity");
    if (fam.kind == FamilyKind::theorem3) {
        fam.epsilon = rational_field(doc, "epsilon");
    } else {
        fam.n = static_cast<int>(int_field(doc, "n"));
        fam.m = static_cast<int>(int_field(doc, "m"));
    }
    if (!doc.contains("instances") || !doc.at("instances").is_array()) throw FormatError("family: missing 'instances'");

    std::size_t previous = 0;
    for (const auto& name : doc.at("instances")) {
        auto inst = load_instance(dir / name.get<std::string>());
        if (inst.jobs.size() <= previous) throw FormatError("family: instance does not extend its predecessor");
        if (!fam.instances.empty()) {
            const auto& prev = fam.instances.back().jobs;
            if (!std::equal(prev.begin(), prev.end(), inst.jobs.begin())) {
                throw FormatError("family: instance does not extend its predecessor");
            }
        }
        fam.bundles.emplace_back(inst.jobs.begin() + static_cast<std::ptrdiff_t>(previous), inst.jobs.end());
        previous = inst.jobs.size();
        fam.instances.push_back(std::move(inst));
    }
    return fam;
}

} // namespace resv
