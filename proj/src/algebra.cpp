/*
 * Copyright (C) 2026 The devs-scc Authors
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
#include "devs_scc/algebra.hpp"

#include "devs_scc/parallel.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace devs_scc {

namespace {

PredPtr conj_opt(const PredPtr& a, const PredPtr& b)
{
    if (!a)
        return b ? normalize(b) : nullptr;
    if (!b)
        return normalize(a);
    return normalize(Pred::conj(a, b));
}

std::string ids_label(const std::vector<int>& ids)
{
    std::string s;
    for (int i : ids)
        s += (s.empty() ? "SCC_" : " & SCC_") + std::to_string(i);
    return s;
}

} // namespace

Scc intersect(const Scc& a, const Scc& b)
{
    Scc r;
    r.ini_st = normalize(Pred::conj(a.ini_st, b.ini_st));
    r.in_pairs = normalize(Pred::conj(a.in_pairs, b.in_pairs));
    r.link = conj_opt(a.link, b.link);
    std::set<int> ids;
    for (int i : a.ancestry())
        ids.insert(i);
    for (int i : b.ancestry())
        ids.insert(i);
    r.combined_from.assign(ids.begin(), ids.end());
    r.provenance = {"combination", ids_label(r.combined_from)};
    return r;
}

CombinationPlan all_pairs(const std::vector<int>& ids)
{
    CombinationPlan p;
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            p.groups.push_back({ids[i], ids[j]});
    p.budget = std::max<std::size_t>(p.budget, p.groups.size());
    return p;
}

void check_plan(const CombinationPlan& plan, const std::vector<Scc>& base)
{
    if (plan.max_arity < 2)
        throw PlanError("max_arity must be at least 2");
    std::set<int> known;
    for (const auto& s : base)
        known.insert(s.id);
    for (const auto& g : plan.groups) {
        if (g.size() < 2)
            throw PlanError("combination group needs at least two classes");
        if (g.size() > plan.max_arity)
            throw PlanError("group " + ids_label(g) + " exceeds max_arity " + std::to_string(plan.max_arity));
        for (int id : g)
            if (!known.count(id))
                throw PlanError("unknown SCC id " + std::to_string(id));
    }
}

CombineResult combine_and_prune(const std::vector<Scc>& base, const CombinationPlan& plan, const Domains& d,
                                unsigned jobs)
{
    check_plan(plan, base);
    std::map<int, const Scc*> by_id;
    int next = 1;
    for (const auto& s : base) {
        by_id[s.id] = &s;
        next = std::max(next, s.id + 1);
    }
    CombineResult out;
    out.catalog = base;
    std::size_t n = std::min(plan.groups.size(), plan.budget);
    out.report.partial = n < plan.groups.size();

    std::vector<Scc> combined(n);
    std::vector<SatStatus> status(n, SatStatus::Unknown);
    parallel_for(n, jobs, [&](std::size_t i) {
        const auto& g = plan.groups[i];
        Scc acc = *by_id.at(g[0]);
        for (std::size_t k = 1; k < g.size(); ++k)
            acc = intersect(acc, *by_id.at(g[k]));
        auto j = acc.joint();
        status[i] = satisfiable(j, d, search_order(j, d)).status;
        combined[i] = std::move(acc);
    });
    for (std::size_t i = 0; i < n; ++i) {
        CombinationOutcome o{plan.groups[i], status[i], 0};
        if (status[i] == SatStatus::Unsat) {
            ++out.report.dropped;
        } else {
            if (status[i] == SatStatus::Unknown)
                ++out.report.unknown;
            ++out.report.kept;
            combined[i].id = next++;
            o.id = combined[i].id;
            out.catalog.push_back(std::move(combined[i]));
        }
        out.report.outcomes.push_back(std::move(o));
    }
    return out;
}

} // namespace devs_scc
