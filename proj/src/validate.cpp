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
#include "devs_scc/validate.hpp"

#include "devs_scc/symbolic.hpp"

#include <algorithm>
#include <set>

namespace devs_scc {

std::string Finding::to_string() const { return where.empty() ? message : where + ": " + message; }

std::string ValidationReport::summary() const
{
    return std::to_string(dext_cases) + "/" + std::to_string(dint_cases) + "/" + std::to_string(lambda_cases) + " cases";
}

namespace {

std::string case_label(FnKind k, const GuardedCase& c)
{
    return std::string(fn_name(k)) + " case " + std::to_string(c.id);
}

std::size_t leaf_count(const Sort& s)
{
    if (s.kind() != Sort::Kind::Tuple)
        return 1;
    std::size_t n = 0;
    for (const auto& i : s.items())
        n += leaf_count(*i);
    return n;
}

void collect_leaf_sorts(const SortPtr& s, std::vector<SortPtr>& out)
{
    if (s->kind() != Sort::Kind::Tuple) {
        out.push_back(s);
        return;
    }
    for (const auto& i : s->items())
        collect_leaf_sorts(i, out);
}

class Checker {
public:
    Checker(const Model& m, ValidationReport& r) : m_(m), r_(r) {}

    void run()
    {
        check_state();
        if (!m_.input)
            error("model", "missing input sort");
        if (!m_.output)
            error("model", "missing output sort");
        if (!m_.ta)
            error("ta", "missing ta");
        else
            check_ta();
        check_function(FnKind::Dext);
        check_function(FnKind::Dint);
        check_function(FnKind::Lambda);
        suggest_time_vars();
        r_.dext_cases = m_.dext.cases.size();
        r_.dint_cases = m_.dint.cases.size();
        r_.lambda_cases = m_.lambda.cases.size();
    }

private:
    void error(std::string where, std::string msg) { r_.errors.push_back({std::move(where), std::move(msg)}); }
    void warn(std::string where, std::string msg) { r_.warnings.push_back({std::move(where), std::move(msg)}); }

    void check_state()
    {
        std::set<Symbol> seen;
        for (const auto& v : m_.state) {
            if (!seen.insert(v.name).second)
                error("state", "duplicate state variable " + v.name.str());
            if (v.time_var && v.sort->kind() != Sort::Kind::Time)
                error("state", "@time variable " + v.name.str() + " must have sort time");
        }
        if (m_.state.empty())
            error("state", "empty state");
    }

    // Free variables allowed: state, constants, locals; x and e only where enabled.
    void check_names(const std::string& where, const std::map<Symbol, VarRole>& fv, bool allow_input)
    {
        for (const auto& [name, role] : fv) {
            switch (role) {
            case VarRole::State:
                if (!m_.state_index(name))
                    error(where, "unbound variable " + name.str());
                break;
            case VarRole::Const:
                if (!m_.constant(name))
                    error(where, "unbound variable " + name.str());
                break;
            case VarRole::Input:
            case VarRole::Elapsed:
                if (!allow_input)
                    error(where, std::string(role_name(role)) + " " + name.str() + " is not available here");
                break;
            case VarRole::Time:
                error(where, "time t is not available here");
                break;
            case VarRole::Local:
            case VarRole::Param:
                break;
            }
        }
    }

    void check_ta()
    {
        check_names("ta", free_vars(*m_.ta), false);
        if (m_.ta->sort && !m_.ta->sort->is_numeric())
            error("ta", "ta must yield time, not " + m_.ta->sort->to_string());
    }

    void check_function(FnKind k)
    {
        const auto& fn = m_.function(k);
        const bool ext = k == FnKind::Dext;
        std::set<int> ids;
        int otherwise = 0;
        for (std::size_t i = 0; i < fn.cases.size(); ++i) {
            const auto& c = fn.cases[i];
            auto where = case_label(k, c);
            if (!ids.insert(c.id).second)
                error(where, "duplicate case id " + std::to_string(c.id));
            if (c.otherwise) {
                ++otherwise;
                if (i + 1 != fn.cases.size())
                    error(where, "otherwise must be the last case");
            }
            if (c.guard) {
                auto g = inlined_guard(fn, c);
                check_names(where, free_vars(*g), ext);
            }
            if (!c.result) {
                error(where, "missing result");
                continue;
            }
            auto fv = free_vars(*c.result);
            if (!fn.lets.empty())
                fv = free_vars(*substitute(c.result, let_substitution(fn)));
            check_names(where, fv, ext);
            check_result(k, where, c.result);
        }
        if (otherwise > 1)
            error(std::string(fn_name(k)), "more than one otherwise case");
        if (fn.cases.empty() && k != FnKind::Dext)
            warn(fn_name(k), "no cases");
    }

    void check_result(FnKind k, const std::string& where, const ExprPtr& result)
    {
        if (!result->sort)
            return;
        SortPtr target = k == FnKind::Lambda ? m_.output : m_.state_sort();
        if (!target)
            return;
        std::size_t want = leaf_count(*target);
        std::size_t got = leaf_count(*result->sort);
        if (want != got) {
            error(where, "result has " + std::to_string(got) + " components, expected " + std::to_string(want));
            return;
        }
        std::vector<SortPtr> ws, gs;
        collect_leaf_sorts(target, ws);
        collect_leaf_sorts(result->sort, gs);
        for (std::size_t i = 0; i < ws.size(); ++i)
            if (!sorts_overlap(*gs[i], *ws[i]))
                error(where, "component " + std::to_string(i + 1) + " has sort " + gs[i]->to_string() + ", expected "
                                 + ws[i]->to_string());
    }

    void suggest_time_vars()
    {
        std::set<Symbol> candidates;
        if (m_.ta)
            for (const auto& [n, role] : free_vars(*m_.ta))
                if (role == VarRole::State)
                    candidates.insert(n);
        for (const auto& l : m_.dext.lets) {
            auto fv = free_vars(*l.expr);
            if (!fv.count(Symbol("e")))
                continue;
            for (const auto& [n, role] : fv)
                if (role == VarRole::State)
                    candidates.insert(n);
        }
        for (const auto& v : m_.state)
            if (candidates.count(v.name) && !v.time_var) {
                r_.suggested_time_vars.push_back(v.name);
                r_.notes.push_back({"state", v.name.str() + " interacts with time; consider @time"});
            }
    }

    const Model& m_;
    ValidationReport& r_;
};

// Bounded overlap and gap detection between guards of one function.
void check_guards(const Model& m, FnKind k, const Domains& d, ValidationReport& r)
{
    const auto& fn = m.function(k);
    std::vector<std::pair<const GuardedCase*, PredPtr>> guards;
    for (const auto* c : fn.proper_cases())
        guards.emplace_back(c, inlined_guard(fn, *c));
    const std::size_t budget = 200'000;
    for (std::size_t i = 0; i < guards.size(); ++i)
        for (std::size_t j = i + 1; j < guards.size(); ++j) {
            auto both = Pred::conj(guards[i].second, guards[j].second);
            auto res = satisfiable(both, d, search_order(both, d), nullptr, budget);
            if (res.status == SatStatus::Sat)
                r.warnings.push_back({case_label(k, *guards[i].first),
                                      "overlaps " + case_label(k, *guards[j].first) + " within bounds"});
        }
    if (fn.has_otherwise() || guards.empty())
        return;
    std::vector<PredPtr> all;
    for (const auto& g : guards)
        all.push_back(g.second);
    auto gap = Pred::negation(Pred::disj(all));
    if (k == FnKind::Dext)  // external transitions never see tau
        gap = Pred::conj(Pred::compare(CmpOp::Ne, m.input_var(), Expr::constant(Value::tau())), gap);
    auto res = satisfiable(gap, d, search_order(gap, d), nullptr, budget);
    if (res.status == SatStatus::Sat) {
        std::string w;
        for (const auto& [n, v] : res.witness.entries())
            w += (w.empty() ? "" : ", ") + n.str() + "=" + v.to_string();
        r.warnings.push_back({fn_name(k), "not exhaustive within bounds, e.g. " + w});
    }
}

} // namespace

ValidationReport validate_model(const Model& m, const Bounds* bounds)
{
    ValidationReport r;
    Checker(m, r).run();
    if (bounds && r.usable()) {
        try {
            auto d = make_domains(m, *bounds);
            check_guards(m, FnKind::Dext, d, r);
            check_guards(m, FnKind::Dint, d, r);
            check_guards(m, FnKind::Lambda, d, r);
        } catch (const DomainError& e) {
            r.warnings.push_back({"bounds", e.what()});
        }
    }
    return r;
}

} // namespace devs_scc
