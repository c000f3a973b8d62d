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

#include <resv/adversary.hpp>
#include <resv/io.hpp>
#include <resv/model.hpp>

#include "../support/workloads.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>

namespace resv {
namespace {

Instance unit_instance(std::vector<Reservation> jobs)
{
    return Instance{8, MarketBounds{Rational(1), Rational(2), Rational(1), Rational(3)}, std::move(jobs)};
}

bool has(const std::vector<Violation>& vs, const std::string& id, const std::string& what)
{
    return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.job_id == id && v.predicate == what; });
}

TEST(ValidateInstance, LengthExceedingWindow)
{
    const auto inst = unit_instance({{"j", Rational(0), Rational(2), Rational(3), 1, Rational(3)}});
    const auto vs = validate_instance(inst);
    EXPECT_TRUE(has(vs, "j", "length exceeds window"));
}

TEST(ValidateInstance, DensityOnLowerBoundaryIsAccepted)
{
    const auto inst = unit_instance({{"j", Rational(0), Rational(4), Rational(2), 3, Rational(6)}});
    EXPECT_EQ(inst.jobs[0].density(), Rational(1));
    EXPECT_TRUE(validate_instance(inst).empty());
}

TEST(ValidateInstance, SixBundleFirstInstanceIsValid)
{
    const auto fam = gen_theorem3(8, Rational(1, 10));
    EXPECT_TRUE(validate_instance(fam.instances.front()).empty());
}

TEST(ValidateInstance, ReportsEveryBrokenPredicate)
{
    auto inst = unit_instance({
        {"a", Rational(0), Rational(5), Rational(0), 1, Rational(1)},
        {"b", Rational(0), Rational(5), Rational(1), 0, Rational(1)},
        {"c", Rational(0), Rational(5), Rational(1), 1, Rational(-1)},
        {"d", Rational(0), Rational(5), Rational(1), 1, Rational(5)},
        {"d", Rational(0), Rational(9), Rational(4), 1, Rational(4)},
    });
    inst.bounds.rho_max = Rational(1, 2);
    const auto vs = validate_instance(inst);
    EXPECT_TRUE(has(vs, "a", "length must be positive"));
    EXPECT_TRUE(has(vs, "b", "demand must be at least 1"));
    EXPECT_TRUE(has(vs, "c", "value must be positive"));
    EXPECT_TRUE(has(vs, "d", "duplicate id"));
    EXPECT_TRUE(has(vs, "d", "length outside [t_min, t_max]"));
    EXPECT_TRUE(has(vs, "", "rho_min exceeds rho_max"));
}

TEST(RealizedBounds, TightestEnclosingBounds)
{
    const auto inst = unit_instance({
        {"x", Rational(0), Rational(4), Rational(2), 1, Rational(3)},
        {"y", Rational(0), Rational(4), Rational(3, 2), 2, Rational(6)},
    });
    const auto b = realized_bounds(inst);
    EXPECT_EQ(b.rho_min, Rational(3, 2));
    EXPECT_EQ(b.rho_max, Rational(2));
    EXPECT_EQ(b.t_min, Rational(3, 2));
    EXPECT_EQ(b.t_max, Rational(2));
}

TEST(InstanceFormat, ReadsIntegerShorthandAndFractions)
{
    const auto inst = instance_from_json(R"({
      "version": 1, "capacity": 8,
      "bounds": {"rho_min": "1", "rho_max": "2", "t_min": "1", "t_max": "2"},
      "jobs": [{"id": "B1.1", "a": "19/10", "d": "31/10", "t": "6/5", "c": 5, "v": "6"}]
    })");
    ASSERT_EQ(inst.jobs.size(), 1U);
    EXPECT_EQ(inst.jobs[0].arrival, Rational(19, 10));
    EXPECT_EQ(inst.jobs[0].length, Rational(12, 10));
    EXPECT_EQ(inst.jobs[0].value, Rational(6));
    EXPECT_EQ(inst, gen_theorem3(8, Rational(1, 10)).instances.front());
}

TEST(InstanceFormat, RejectsMalformedDocuments)
{
    EXPECT_THROW((void)instance_from_json("{"), FormatError);
    EXPECT_THROW((void)instance_from_json(R"({"version": 2, "capacity": 1, "bounds": {}, "jobs": []})"), FormatError);
    EXPECT_THROW((void)instance_from_json(R"({"version": 1, "capacity": 1, "jobs": []})"), FormatError);
    EXPECT_THROW((void)instance_from_json(R"({"version": 1, "capacity": 1,
        "bounds": {"rho_min": "1", "rho_max": "2", "t_min": "1", "t_max": "2"},
        "jobs": [{"id": "x", "a": "0", "d": "1/0", "t": "1", "c": 1, "v": "1"}]})"),
                 FormatError);
}

TEST(InstanceFormatProperty, RoundTripsGeneratedInstances)
{
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto inst = testing::narrow_workload(seed);
        ASSERT_EQ(instance_from_json(instance_to_json(inst)), inst) << "seed " << seed;
    }
    const auto fam = gen_theorem5(2, 3, 64);
    ASSERT_EQ(instance_from_json(instance_to_json(fam.instances.back())), fam.instances.back());
}

TEST(FamilyFiles, SaveThenLoadRecoversBundles)
{
    const auto dir = std::filesystem::temp_directory_path() / "resv_family_roundtrip";
    std::filesystem::remove_all(dir);
    const auto fam = gen_theorem3(8, Rational(1, 10));
    save_family(dir, fam);
    const auto back = load_family(dir);
    EXPECT_EQ(back.kind, FamilyKind::theorem3);
    EXPECT_EQ(back.epsilon, Rational(1, 10));
    ASSERT_EQ(back.bundles.size(), 6U);
    EXPECT_EQ(back.bundles, fam.bundles);
    EXPECT_EQ(back.instances, fam.instances);
    std::filesystem::remove_all(dir);
}

TEST(FamilyFiles, MissingDirectoryFaultsWithPath)
{
    try {
        (void)load_family("/nonexistent/resv/family");
        FAIL() << "expected an error";
    } catch (const std::runtime_error& e) {
        EXPECT_NE(std::string(e.what()).find("/nonexistent/resv/family"), std::string::npos);
    }
}

} // namespace
} // namespace resv
