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
#include "devs_scc/symbolic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <unordered_map>

namespace devs_scc {

PredPtr DnfClause::to_pred() const
{
    if (literals.empty())
        return Pred::truth();
    if (literals.size() == 1)
        return literals[0];
    return Pred::conj(literals);
}

const char* sat_status_name(SatStatus s)
{
    switch (s) {
    case SatStatus::Sat:
        return "sat";
    case SatStatus::Unsat:
        return "unsat-within-bounds";
    case SatStatus::Unknown:
        return "unknown";
    }
    return "?";
}

// ---- normal forms ------------------------------------------------------------

PredPtr to_nnf(const PredPtr& p)
{
    switch (p->kind) {
    case PredKind::And:
    case PredKind::Or: {
        std::vector<PredPtr> cs;
        for (const auto& c : p->children)
            cs.push_back(to_nnf(c));
        return p->kind == PredKind::And ? Pred::conj(std::move(cs)) : Pred::disj(std::move(cs));
    }
    case PredKind::Implies:
        return Pred::disj(to_nnf(Pred::negation(p->children[0])), to_nnf(p->children[1]));
    case PredKind::Not: {
        const PredPtr& c = p->children[0];
        switch (c->kind) {
        case PredKind::True:
            return Pred::falsity();
        case PredKind::False:
            return Pred::truth();
        case PredKind::Not:
            return to_nnf(c->children[0]);
        case PredKind::And:
        case PredKind::Or: {
            std::vector<PredPtr> cs;
            for (const auto& g : c->children)
                cs.push_back(to_nnf(Pred::negation(g)));
            return c->kind == PredKind::And ? Pred::disj(std::move(cs)) : Pred::conj(std::move(cs));
        }
        case PredKind::Implies:
            return Pred::conj(to_nnf(c->children[0]), to_nnf(Pred::negation(c->children[1])));
        default:
            return p;
        }
    }
    default:
        return p;
    }
}

namespace {

bool is_negation_of(const PredPtr& a, const PredPtr& b)
{
    return a->kind == PredKind::Not && structurally_equal(*a->children[0], *b);
}

// Returns false when the clause is contradictory.
bool tidy_clause(DnfClause& c)
{
    std::vector<PredPtr> out;
    for (const auto& l : c.literals) {
        if (l->kind == PredKind::True)
            continue;
        if (l->kind == PredKind::False)
            return false;
        bool dup = false;
        for (const auto& o : out) {
            if (structurally_equal(*o, *l)) {
                dup = true;
                break;
            }
            if (is_negation_of(o, l) || is_negation_of(l, o))
                return false;
        }
        if (!dup)
            out.push_back(l);
    }
    c.literals = std::move(out);
    return true;
}

class DnfBuilder {
public:
    explicit DnfBuilder(std::size_t cap) : cap_(cap) {}

    std::vector<DnfClause> run(const PredPtr& p)
    {
        std::string key = to_string(*p);
        auto it = memo_.find(key);
        if (it != memo_.end())
            return it->second;
        std::vector<DnfClause> out;
        switch (p->kind) {
        case PredKind::True:
            out.push_back(DnfClause{});
            break;
        case PredKind::False:
            break;
        case PredKind::Or:
            for (const auto& c : p->children) {
                auto sub = run(c);
                out.insert(out.end(), sub.begin(), sub.end());
                check(out.size(), p);
            }
            break;
        case PredKind::And: {
            out.push_back(DnfClause{});
            for (const auto& c : p->children) {
                auto sub = run(c);
                std::vector<DnfClause> next;
                check(out.size() * sub.size(), c);
                for (const auto& a : out) {
                    for (const auto& b : sub) {
                        DnfClause m = a;
                        m.literals.insert(m.literals.end(), b.literals.begin(), b.literals.end());
                        if (tidy_clause(m))
                            next.push_back(std::move(m));
                    }
                }
                out = std::move(next);
            }
            break;
        }
        default: {
            DnfClause c{{p}};
            if (tidy_clause(c))
                out.push_back(std::move(c));
            break;
        }
        }
        memo_[key] = out;
        return out;
    }

private:
    void check(std::size_t n, const PredPtr& where) const
    {
        if (n > cap_)
            throw DnfCapExceeded("DNF clause cap " + std::to_string(cap_) + " exceeded at subformula " + to_string(*where));
    }

    std::size_t cap_;
    std::unordered_map<std::string, std::vector<DnfClause>> memo_;
};

} // namespace

std::vector<DnfClause> to_dnf(const PredPtr& p, std::size_t cap)
{
    return DnfBuilder(cap).run(to_nnf(p));
}

PredPtr from_dnf(const std::vector<DnfClause>& clauses)
{
    if (clauses.empty())
        return Pred::falsity();
    std::vector<PredPtr> cs;
    for (const auto& c : clauses)
        cs.push_back(c.to_pred());
    return cs.size() == 1 ? cs[0] : Pred::disj(std::move(cs));
}

// ---- bounded search ----------------------------------------------------------

std::vector<Symbol> search_order(const PredPtr& p, const Domains& d, const std::vector<Symbol>& preferred)
{
    auto fv = free_vars(*p);
    std::vector<Symbol> order;
    for (const auto& s : preferred)
        if (fv.count(s))
            order.push_back(s);
    for (const auto& dom : d.all())
        if (fv.count(dom.name) && std::find(order.begin(), order.end(), dom.name) == order.end())
            order.push_back(dom.name);
    for (const auto& [name, role] : fv) {
        if (role == VarRole::Const || role == VarRole::Local)
            continue;
        if (std::find(order.begin(), order.end(), name) == order.end())
            throw DomainError("no enumeration domain for variable " + name.str());
    }
    return order;
}

namespace {

struct BudgetExhausted {};

class Searcher {
public:
    Searcher(const PredPtr& p, const Domains& d, std::vector<Symbol> order, const Env* fixed, std::size_t budget)
        : p_(p), order_(std::move(order)), budget_(budget)
    {
        if (fixed)
            env_ = *fixed;
        std::vector<Symbol> kept;
        for (const auto& s : order_) {
            if (env_.contains(s))
                continue;
            const auto* dom = d.values(s);
            if (!dom)
                throw DomainError("no enumeration domain for variable " + s.str());
            kept.push_back(s);
            doms_.push_back(dom);
        }
        order_ = std::move(kept);
        ctx_.env = &env_;
        ctx_.globals = &d.constants();
        ctx_.domains = d.fn();
    }

    /// offsets rotate the value order per level; empty means natural order
    bool run(const std::vector<std::size_t>& offsets = {})
    {
        offsets_ = offsets;
        return dfs(0);
    }

    const Env& env() const { return env_; }
    std::size_t explored() const { return explored_; }

private:
    bool dfs(std::size_t level)
    {
        if (++explored_ > budget_)
            throw BudgetExhausted{};
        Tri t = kleene(*p_, ctx_);
        if (t == Tri::False)
            return false;
        if (t == Tri::True) {
            // every extension satisfies; complete with first values
            std::size_t pushed = 0;
            for (std::size_t l = level; l < order_.size(); ++l) {
                if (doms_[l]->empty())
                    return false;
                env_.set(order_[l], (*doms_[l])[offset(l) % doms_[l]->size()]);
                ++pushed;
            }
            if (kleene(*p_, ctx_) == Tri::True)
                return true;
            for (std::size_t k = 0; k < pushed; ++k)
                env_.pop_back();
            if (level == order_.size())
                return false;
        }
        if (level == order_.size())
            return false;
        const auto& dom = *doms_[level];
        if (dom.empty())
            return false;
        std::size_t start = offset(level) % dom.size();
        env_.set(order_[level], dom[start]);
        for (std::size_t i = 0; i < dom.size(); ++i) {
            env_.set(order_[level], dom[(start + i) % dom.size()]);
            if (dfs(level + 1))
                return true;
        }
        env_.pop_back();
        return false;
    }

    std::size_t offset(std::size_t level) const { return level < offsets_.size() ? offsets_[level] : 0; }

    PredPtr p_;
    std::vector<Symbol> order_;
    std::vector<const std::vector<Value>*> doms_;
    std::vector<std::size_t> offsets_;
    Env env_;
    EvalContext ctx_;
    std::size_t budget_;
    std::size_t explored_ = 0;
};

} // namespace

SatResult satisfiable(const PredPtr& p, const Domains& d, const std::vector<Symbol>& order, const Env* fixed,
                      std::size_t budget)
{
    SatResult r;
    Searcher s(p, d, order, fixed, budget ? budget : d.budget);
    try {
        bool ok = s.run();
        r.status = ok ? SatStatus::Sat : SatStatus::Unsat;
        if (ok)
            r.witness = s.env();
    } catch (const BudgetExhausted&) {
        r.status = SatStatus::Unknown;
    }
    r.explored = s.explored();
    return r;
}

std::vector<Env> sample_witnesses(const PredPtr& p, const Domains& d, const std::vector<Symbol>& order, std::size_t k,
                                  std::uint64_t seed)
{
    constexpr double kPhi = 0.6180339887498949;
    constexpr double kPlastic = 0.7548776662466927;
    std::vector<Env> out;
    std::set<std::string> seen;
    std::vector<const std::vector<Value>*> doms;
    for (const auto& s : order)
        doms.push_back(d.values(s));
    for (std::size_t j = 0; j < 4 * k + 4 && out.size() < k; ++j) {
        std::vector<std::size_t> offsets;
        for (std::size_t i = 0; i < order.size(); ++i) {
            double u = static_cast<double>(seed + 1) * kPlastic + static_cast<double>(j) * kPhi * static_cast<double>(i + 1);
            u -= std::floor(u);
            std::size_t n = doms[i] ? doms[i]->size() : 1;
            offsets.push_back(j == 0 ? 0 : static_cast<std::size_t>(u * static_cast<double>(n)));
        }
        Searcher s(p, d, order, nullptr, d.budget);
        bool ok = false;
        try {
            ok = s.run(offsets);
        } catch (const BudgetExhausted&) {
            break;
        }
        if (!ok)
            break;
        std::string key;
        for (const auto& [name, v] : s.env().entries())
            key += name.str() + "=" + v.to_string() + ";";
        if (seen.insert(key).second)
            out.push_back(s.env());
    }
    return out;
}

// ---- projection --------------------------------------------------------------

namespace {

std::set<Symbol> names_in(const PredPtr& p)
{
    std::set<Symbol> out;
    for (const auto& [n, r] : free_vars(*p))
        if (r != VarRole::Const && r != VarRole::Local)
            out.insert(n);
    return out;
}

// Bounded check of "for all free, exists bound: body".
std::optional<bool> holds_everywhere(const PredPtr& body, const std::vector<Symbol>& bound, const std::vector<Symbol>& free,
                                     const Domains& d)
{
    std::vector<const std::vector<Value>*> doms;
    std::size_t total = 1;
    for (const auto& f : free) {
        const auto* dom = d.values(f);
        if (!dom || dom->empty())
            return std::nullopt;
        doms.push_back(dom);
        total *= dom->size();
        if (total > 10000)
            return std::nullopt;
    }
    std::vector<std::size_t> idx(free.size(), 0);
    Env fixed;
    while (true) {
        for (std::size_t i = 0; i < free.size(); ++i)
            fixed.set(free[i], (*doms[i])[idx[i]]);
        auto r = satisfiable(body, d, bound, &fixed);
        if (r.status == SatStatus::Unknown)
            return std::nullopt;
        if (r.status == SatStatus::Unsat)
            return false;
        std::size_t k = free.size();
        bool done = true;
        while (k > 0) {
            --k;
            if (++idx[k] < doms[k]->size()) {
                done = false;
                break;
            }
            idx[k] = 0;
        }
        if (done)
            return true;
    }
}

} // namespace

PredPtr project_exists(const PredPtr& p, const std::vector<ExprPtr>& drop, const Domains& d)
{
    std::set<Symbol> present = names_in(p);
    std::vector<ExprPtr> bound;
    std::set<Symbol> bound_names;
    for (const auto& v : drop)
        if (present.count(v->name) && bound_names.insert(v->name).second)
            bound.push_back(v);
    if (bound.empty())
        return normalize(p);

    std::vector<PredPtr> cs = conjuncts(p);
    std::vector<std::set<Symbol>> uses;
    for (const auto& c : cs) {
        std::set<Symbol> u;
        for (const auto& n : names_in(c))
            if (bound_names.count(n))
                u.insert(n);
        uses.push_back(std::move(u));
    }
    // union-find over conjuncts sharing a bound variable
    std::vector<std::size_t> parent(cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i)
        parent[i] = i;
    auto find = [&](std::size_t i) {
        while (parent[i] != i)
            i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j)
            for (const auto& n : uses[i])
                if (uses[j].count(n)) {
                    parent[find(i)] = find(j);
                    break;
                }

    std::vector<PredPtr> out;
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (uses[i].empty())
            out.push_back(cs[i]);
        else
            groups[find(i)].push_back(i);
    }
    // keep groups in order of their first conjunct
    std::vector<std::vector<std::size_t>> ordered;
    for (auto& [root, members] : groups)
        ordered.push_back(members);
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });

    for (const auto& members : ordered) {
        std::vector<PredPtr> parts;
        std::set<Symbol> gb;
        for (auto i : members) {
            parts.push_back(cs[i]);
            gb.insert(uses[i].begin(), uses[i].end());
        }
        PredPtr body = parts.size() == 1 ? parts[0] : Pred::conj(parts);
        std::vector<Symbol> border;
        std::vector<ExprPtr> bvars;
        for (const auto& v : bound)
            if (gb.count(v->name)) {
                border.push_back(v->name);
                bvars.push_back(v);
            }
        std::vector<Symbol> free;
        for (const auto& n : names_in(body))
            if (!gb.count(n))
                free.push_back(n);
        // free vars in domain declaration order
        std::vector<Symbol> free_sorted;
        for (const auto& dom : d.all())
            if (std::find(free.begin(), free.end(), dom.name) != free.end())
                free_sorted.push_back(dom.name);
        if (free_sorted.size() != free.size()) {
            out.push_back(Pred::exists(bvars, body));
            continue;
        }
        if (free.empty()) {
            auto r = satisfiable(body, d, border);
            if (r.status == SatStatus::Sat)
                continue;
            if (r.status == SatStatus::Unsat)
                return Pred::falsity();
            out.push_back(Pred::exists(bvars, body));
            continue;
        }
        auto everywhere = holds_everywhere(body, border, free_sorted, d);
        if (everywhere && *everywhere)
            continue;
        out.push_back(Pred::exists(bvars, body));
    }
    if (out.empty())
        return Pred::truth();
    return normalize(out.size() == 1 ? out[0] : Pred::conj(out));
}

std::optional<Env> find_difference(const PredPtr& a, const PredPtr& b, const Domains& d, std::size_t limit)
{
    std::vector<Symbol> order = search_order(Pred::conj(a, b), d);
    std::vector<const std::vector<Value>*> doms;
    for (const auto& s : order)
        doms.push_back(d.values(s));
    Env env;
    EvalContext ctx;
    ctx.env = &env;
    ctx.globals = &d.constants();
    ctx.domains = d.fn();
    std::vector<std::size_t> idx(order.size(), 0);
    for (const auto* dom : doms)
        if (dom->empty())
            return std::nullopt;
    for (std::size_t n = 0; n < limit; ++n) {
        for (std::size_t i = 0; i < order.size(); ++i)
            env.set(order[i], (*doms[i])[idx[i]]);
        if (kleene(*a, ctx) != kleene(*b, ctx))
            return env;
        std::size_t k = order.size();
        bool done = true;
        while (k > 0) {
            --k;
            if (++idx[k] < doms[k]->size()) {
                done = false;
                break;
            }
            idx[k] = 0;
        }
        if (done)
            break;
    }
    return std::nullopt;
}

} // namespace devs_scc
