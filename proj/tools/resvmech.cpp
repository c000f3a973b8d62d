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

// resvmech: generate instances, run the posted-price mechanisms, and check
// their guarantees from the command line.
//
// Exit status: 0 when every claimed bound holds (or no profitable deviation
// exists), 1 when one fails, 2 on bad input.

#include <resv/adversary.hpp>
#include <resv/harness.hpp>
#include <resv/io.hpp>
#include <resv/mechanism.hpp>
#include <resv/oracle.hpp>
#include <resv/report.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace resv;

enum class Format
{
    json,
    csv,
};

const std::map<std::string, Format> kFormats{{"json", Format::json}, {"csv", Format::csv}};

struct Options
{
    Format format{Format::json};
    std::string mechanism;
    std::vector<std::string> instances;
    std::string family;
    std::string grid;
    std::string spec;
    std::string out;
    std::string alpha;
    std::string epsilon{"1/10"};
    std::uint64_t seed{0};
    std::int64_t capacity{8};
    int n{2};
    int m{1};
};

Instance load_valid(const std::string& path)
{
    auto inst = load_instance(path);
    if (auto v = validate_instance(inst); !v.empty()) throw InvalidInstance(std::move(v));
    return inst;
}

std::optional<Rational> parse_alpha(const std::string& text)
{
    if (text.empty()) return std::nullopt;
    return Rational::parse(text);
}

void print(const Options& o, const std::string& json, const std::string& csv)
{
    std::cout << (o.format == Format::json ? json : csv);
}

int cmd_run(const Options& o)
{
    const auto inst = load_valid(o.instances.front());
    const auto config = make_config(parse_mechanism(o.mechanism), inst, parse_alpha(o.alpha));
    const auto out = run_sequence(config, draw_coins(config, o.seed), inst);
    print(o, outcome_json(inst, out), outcome_csv(inst, out));
    return 0;
}

int cmd_expect(const Options& o)
{
    const auto kind = parse_mechanism(o.mechanism);
    std::vector<RatioReport> reports;
    for (const auto& path : o.instances) {
        const auto inst = load_valid(path);
        const auto config = make_config(kind, inst, parse_alpha(o.alpha));
        reports.push_back(exact_expectation(config, inst, std::filesystem::path(path).stem().string()));
    }
    print(o, ratio_summary_json(reports), ratio_csv(reports));
    for (const auto& r : reports) {
        if (!r.bound_satisfied) return 1;
    }
    return 0;
}

int cmd_oracle(const Options& o)
{
    const auto r = optimal_welfare(load_valid(o.instances.front()));
    print(o, oracle_json(r), oracle_csv(r));
    return 0;
}

int cmd_yao(const Options& o)
{
    const auto r = yao_evaluate(load_family(o.family));
    print(o, yao_json(r), yao_csv(r));
    bool ok = r.patterns_cover_exhaustive;
    if (r.kind == FamilyKind::theorem5) ok = ok && r.log2_8kT && r.idealized_best <= r.upper_bound;
    return ok ? 0 : 1;
}

int cmd_audit(const Options& o)
{
    const auto inst = load_valid(o.instances.front());
    const auto config = make_config(parse_mechanism(o.mechanism), inst, parse_alpha(o.alpha));
    const auto grid = o.grid.empty() ? DeviationGrid{} : grid_from_json(read_text(o.grid));
    const auto r = truthfulness_audit(config, draw_coins(config, o.seed), inst, grid,
                                      std::filesystem::path(o.instances.front()).stem().string());
    print(o, audit_json(r), audit_csv(r));
    return r.profitable.empty() ? 0 : 1;
}

int cmd_gen_theorem3(const Options& o)
{
    save_family(o.out, gen_theorem3(o.capacity, Rational::parse(o.epsilon)));
    return 0;
}

int cmd_gen_theorem5(const Options& o)
{
    save_family(o.out, gen_theorem5(o.m, o.n, o.capacity));
    return 0;
}

int cmd_gen_random(const Options& o)
{
    auto spec = workload_spec_from_json(read_text(o.spec));
    spec.seed = o.seed;
    save_instance(o.out, gen_random(spec));
    return 0;
}

void add_format(CLI::App* cmd, Options& o)
{
    cmd->add_option("--format", o.format, "output format")->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

void add_mechanism(CLI::App* cmd, Options& o)
{
    cmd->add_option("--mechanism", o.mechanism, "random-pricing | greedy | binary-filter | bounded-binary-filter")
        ->required();
    cmd->add_option("--alpha", o.alpha, "demand cap c/C as p/q");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Posted-price mechanisms for reserved cloud instances"};
    app.require_subcommand(1);
    Options o;
    int (*action)(const Options&) = nullptr;

    auto* gen = app.add_subcommand("gen", "generate instances");
    gen->require_subcommand(1);

    auto* t3 = gen->add_subcommand("theorem3", "six-bundle family for k = T = 2");
    t3->add_option("--capacity", o.capacity, "even capacity >= 4")->required();
    t3->add_option("--epsilon", o.epsilon, "0 < epsilon < 1/4, as p/q");
    t3->add_option("--out", o.out, "output directory")->required();
    t3->callback([&] { action = cmd_gen_theorem3; });

    auto* t5 = gen->add_subcommand("theorem5", "(n + m + 2)-bundle family");
    t5->add_option("--n", o.n)->required();
    t5->add_option("--m", o.m)->required();
    t5->add_option("--capacity", o.capacity, "even capacity")->required();
    t5->add_option("--out", o.out, "output directory")->required();
    t5->callback([&] { action = cmd_gen_theorem5; });

    auto* rnd = gen->add_subcommand("random", "random workload from a spec file");
    rnd->add_option("--spec", o.spec)->required()->check(CLI::ExistingFile);
    rnd->add_option("--seed", o.seed)->required();
    rnd->add_option("--out", o.out, "output instance file")->required();
    rnd->callback([&] { action = cmd_gen_random; });

    auto* run = app.add_subcommand("run", "one run with seeded coins");
    add_mechanism(run, o);
    run->add_option("--instance", o.instances)->required()->expected(1)->check(CLI::ExistingFile);
    run->add_option("--seed", o.seed)->required();
    add_format(run, o);
    run->callback([&] { action = cmd_run; });

    auto* expect = app.add_subcommand("expect", "exact expectation over every coin tuple");
    add_mechanism(expect, o);
    expect->add_option("--instance", o.instances, "one or more instance files")->required()->check(CLI::ExistingFile);
    add_format(expect, o);
    expect->callback([&] { action = cmd_expect; });

    auto* oracle = app.add_subcommand("oracle", "offline optimal welfare");
    oracle->add_option("--instance", o.instances)->required()->expected(1)->check(CLI::ExistingFile);
    add_format(oracle, o);
    oracle->callback([&] { action = cmd_oracle; });

    auto* yao = app.add_subcommand("yao", "strategy table for a generated family");
    yao->add_option("--family", o.family, "directory written by gen theorem3|theorem5")
        ->required()
        ->check(CLI::ExistingDirectory);
    add_format(yao, o);
    yao->callback([&] { action = cmd_yao; });

    auto* audit = app.add_subcommand("audit", "search a misreport grid for profitable deviations");
    add_mechanism(audit, o);
    audit->add_option("--instance", o.instances)->required()->expected(1)->check(CLI::ExistingFile);
    audit->add_option("--seed", o.seed)->required();
    audit->add_option("--grid", o.grid, "deviation grid file (default: 5 points per dimension)")
        ->check(CLI::ExistingFile);
    add_format(audit, o);
    audit->callback([&] { action = cmd_audit; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        return action(o);
    } catch (const InvalidInstance& e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const OracleCapExceeded& e) {
        std::cerr << "error: " << e.what() << " (explored " << e.explored_nodes << " nodes)\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
    }
    return 2;
}
