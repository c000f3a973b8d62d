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

#include <resv/harness.hpp>

#include <algorithm>
#include <map>

namespace resv {

namespace {

struct JobRef
{
    std::size_t bundle; // zero-based
    Money value;
};

class FamilyView
{
public:
    FamilyView(const YaoFamily& fam, const OracleLimits& limits) : fam_(fam)
    {
        for (std::size_t b = 0; b < fam.bundles.size(); ++b) {
            for (const auto& j : fam.bundles[b]) refs_.emplace(j.id, JobRef{b, j.value});
        }
        for (const auto& inst : fam.instances) opt_.push_back(optimal_welfare(inst, limits).opt_welfare);
    }

    [[nodiscard]] const std::vector<Money>& opt() const noexcept { return opt_; }
    [[nodiscard]] const Instance& full() const { return fam_.instances.back(); }

    /// Value collected on I_1..I_N by a policy that accepts \p ids whenever they arrive.
    [[nodiscard]] std::vector<Money> collected(const std::vector<std::string>& ids) const
    {
        std::vector<Money> out(opt_.size(), Money(0));
        for (const auto& id : ids) {
            const auto& ref = refs_.at(id);
            for (std::size_t i = ref.bundle; i < out.size(); ++i) out[i] += ref.value;
        }
        return out;
    }

    [[nodiscard]] StrategyRow row(std::string label, std::vector<std::string> ids) const
    {
        StrategyRow r;
        r.label = std::move(label);
        const auto got = collected(ids);
        r.accepted = std::move(ids);
        Rational sum(0);
        for (std::size_t i = 0; i < got.size(); ++i) {
            r.ratios.push_back(got[i] / opt_[i]);
            sum += r.ratios.back();
        }
        r.expected_ratio = sum / Rational(static_cast<std::int64_t>(got.size()));
        return r;
    }

    [[nodiscard]] std::size_t bundle_of(const std::string& id) const { return refs_.at(id).bundle; }

private:
    const YaoFamily& fam_;
    std::map<std::string, JobRef> refs_;
    std::vector<Money> opt_;
};

std::vector<std::string> bundle_ids(const YaoFamily& fam, std::size_t b)
{
    std::vector<std::string> ids;
    for (const auto& j : fam.bundles[b]) ids.push_back(j.id);
    return ids;
}

bool weakly_dominates(const StrategyRow& a, const StrategyRow& b)
{
    for (std::size_t i = 0; i < a.ratios.size(); ++i) {
        if (a.ratios[i] < b.ratios[i]) return false;
    }
    return true;
}

bool feasible(const Instance& inst, const std::vector<std::string>& ids, const OracleLimits& limits)
{
    return subset_feasible(inst, ids, limits).has_value();
}

// Pattern 2: two compatible jobs from the last three bundles, collapsed to
// distinct ratio signatures that no other pair weakly dominates.
std::vector<StrategyRow> pair_patterns(const YaoFamily& fam, const FamilyView& view,
                                       const std::vector<StrategyRow>& singles, const OracleLimits& limits)
{
    std::vector<std::string> pool;
    for (std::size_t b = 3; b < 6; ++b) {
        for (const auto& j : fam.bundles[b]) pool.push_back(j.id);
    }

    std::vector<StrategyRow> pairs;
    for (std::size_t x = 0; x < pool.size(); ++x) {
        for (std::size_t y = x + 1; y < pool.size(); ++y) {
            std::vector<std::string> ids{pool[x], pool[y]};
            if (!feasible(view.full(), ids, limits)) continue;
            auto r = view.row("B" + std::to_string(view.bundle_of(pool[x]) + 1) + "+B" +
                                  std::to_string(view.bundle_of(pool[y]) + 1),
                              ids);
            // a pair that is a whole bundle is already a pattern-1 row
            const auto same = [&](const StrategyRow& p) { return p.ratios == r.ratios; };
            if (std::none_of(pairs.begin(), pairs.end(), same) && std::none_of(singles.begin(), singles.end(), same)) {
                pairs.push_back(std::move(r));
            }
        }
    }

    std::vector<StrategyRow> kept;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        bool dominated = false;
        for (std::size_t q = 0; q < pairs.size() && !dominated; ++q) {
            dominated = q != p && weakly_dominates(pairs[q], pairs[p]);
        }
        if (!dominated) kept.push_back(pairs[p]);
    }
    return kept;
}

StrategyRow exhaustive(const FamilyView& view, const OracleLimits& limits)
{
    const auto& jobs = view.full().jobs;
    if (jobs.size() > limits.max_jobs || jobs.size() >= 31) {
        throw OracleCapExceeded("family too large for exhaustive policy enumeration", 0);
    }
    StrategyRow best = view.row("none", {});
    for (std::uint32_t mask = 1; mask < (1U << jobs.size()); ++mask) {
        std::vector<std::string> ids;
        for (std::size_t k = 0; k < jobs.size(); ++k) {
            if (mask & (1U << k)) ids.push_back(jobs[k].id);
        }
        if (!feasible(view.full(), ids, limits)) continue;
        auto r = view.row("", ids);
        if (best.expected_ratio < r.expected_ratio) {
            std::string label;
            for (const auto& id : r.accepted) label += (label.empty() ? "" : "+") + id;
            r.label = label;
            best = std::move(r);
        }
    }
    return best;
}

std::vector<std::pair<std::string, std::string>> cross_pairs(const FamilyView& view, const OracleLimits& limits)
{
    std::vector<std::pair<std::string, std::string>> out;
    const auto& jobs = view.full().jobs;
    for (std::size_t x = 0; x < jobs.size(); ++x) {
        for (std::size_t y = x + 1; y < jobs.size(); ++y) {
            if (view.bundle_of(jobs[x].id) == view.bundle_of(jobs[y].id)) continue;
            if (feasible(view.full(), {jobs[x].id, jobs[y].id}, limits)) out.emplace_back(jobs[x].id, jobs[y].id);
        }
    }
    return out;
}

} // namespace

YaoReport yao_evaluate(const YaoFamily& family, const OracleLimits& limits)
{
    if (family.instances.empty() || family.instances.size() != family.bundles.size()) {
        throw std::invalid_argument("yao_evaluate: malformed family");
    }
    const FamilyView view(family, limits);
    const auto N = family.bundles.size();

    YaoReport rep;
    rep.kind = family.kind;
    rep.opt = view.opt();

    for (std::size_t b = 0; b < N; ++b) rep.rows.push_back(view.row("B" + std::to_string(b + 1), bundle_ids(family, b)));
    if (family.kind == FamilyKind::theorem3) {
        auto pairs = pair_patterns(family, view, rep.rows, limits);
        rep.rows.insert(rep.rows.end(), pairs.begin(), pairs.end());
    }

    const auto best = std::max_element(rep.rows.begin(), rep.rows.end(), [](const auto& a, const auto& b) {
        return a.expected_ratio < b.expected_ratio;
    });
    rep.best_label = best->label;
    rep.best_expected_ratio = best->expected_ratio;

    rep.exhaustive_best = exhaustive(view, limits);
    rep.patterns_cover_exhaustive = rep.exhaustive_best.expected_ratio == rep.best_expected_ratio;
    rep.compatible_cross_pairs = cross_pairs(view, limits);

    if (family.kind == FamilyKind::theorem3) {
        rep.analytic_limit = (Rational(1) + Rational(1, 2) + Rational(1, 4) + Rational(1, 8) + Rational(1, 16) +
                              Rational(1, 20)) /
                             Rational(6);
        return rep;
    }

    // Values are affine in C, so the C -> infinity ratio of two of them is the
    // ratio of their slopes, read off a second family at capacity 2C.
    const auto doubled = gen_theorem5(family.m, family.n, 2 * family.capacity);
    const FamilyView view2(doubled, limits);
    const Rational total(static_cast<std::int64_t>(N));
    for (const auto& row : rep.rows) {
        StrategyRow ideal;
        ideal.label = row.label;
        ideal.accepted = row.accepted;
        const auto lo = view.collected(row.accepted);
        const auto hi = view2.collected(row.accepted);
        Rational sum(0);
        for (std::size_t i = 0; i < N; ++i) {
            ideal.ratios.push_back((hi[i] - lo[i]) / (view2.opt()[i] - view.opt()[i]));
            sum += ideal.ratios.back();
        }
        ideal.expected_ratio = sum / total;
        rep.idealized_rows.push_back(std::move(ideal));
    }
    rep.idealized_best = std::max_element(rep.idealized_rows.begin(), rep.idealized_rows.end(),
                                          [](const auto& a, const auto& b) { return a.expected_ratio < b.expected_ratio; })
                             ->expected_ratio;

    for (std::size_t j = 1; j <= N; ++j) {
        rep.closed_form.push_back((Rational(2) - Rational(1) / pow2(static_cast<int>(N - j))) / total);
    }
    rep.analytic_limit = rep.closed_form.front();

    const auto realized = realized_bounds(family.instances.back());
    rep.log2_8kT = exact_log2(Rational(8) * realized.k() * realized.T());
    if (rep.log2_8kT) rep.upper_bound = Rational(2, *rep.log2_8kT);
    return rep;
}

} // namespace resv
