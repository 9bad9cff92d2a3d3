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
#include "devs_scc/criteria.hpp"

#include "devs_scc/symbolic.hpp"

#include <algorithm>
#include <set>

namespace devs_scc {

namespace {

struct Shape {
    PredPtr ini;
    PredPtr pairs;
    PredPtr link;
};

bool is_pair_var(VarRole r) { return r == VarRole::Input || r == VarRole::Time || r == VarRole::Elapsed; }

// Some conjunct mentions both a state variable and x, e or t.
bool ties_state_to_pair(const PredPtr& p)
{
    for (const auto& c : conjuncts(p)) {
        bool state = false, pair = false;
        for (const auto& [n, r] : free_vars(*c)) {
            state |= r == VarRole::State;
            pair |= is_pair_var(r);
        }
        if (state && pair)
            return true;
    }
    return false;
}

std::vector<ExprPtr> pair_vars(const Model& m) { return {m.input_var(), m.elapsed_var(), m.time_var()}; }

Shape split_joint(const Model& m, const Domains& d, const PredPtr& joint)
{
    Shape s;
    s.ini = project_exists(joint, pair_vars(m), d);
    s.pairs = project_exists(joint, m.state_exprs(), d);
    if (ties_state_to_pair(joint))
        s.link = normalize(joint);
    return s;
}

Shape shape_of_guard(const Model& m, const Domains& d, FnKind k, const PredPtr& guard)
{
    if (k != FnKind::Dext)
        return {normalize(guard), tau_pairs(m), nullptr};
    // the pair's time is the elapsed time at injection
    return split_joint(m, d, substitute(guard, elapsed_to_time(m)));
}

// Guard of a case as it fires under first-match: an otherwise case holds where no other does.
PredPtr effective_guard(const TransitionFn& fn, const GuardedCase& c)
{
    if (!c.otherwise)
        return inlined_guard(fn, c);
    std::vector<PredPtr> others;
    for (const auto* o : fn.proper_cases())
        others.push_back(inlined_guard(fn, *o));
    if (others.empty())
        return Pred::truth();
    return to_nnf(Pred::negation(Pred::disj(std::move(others))));
}

void add_unique(CriterionResult& r, Scc s)
{
    for (const auto& prev : r.sccs)
        if (same_class(prev, s)) {
            ++r.duplicates;
            r.notes.push_back(s.provenance.target + " duplicates " + prev.provenance.target);
            return;
        }
    r.sccs.push_back(std::move(s));
}

Scc make_scc(const Shape& sh, std::string criterion, std::string target)
{
    Scc s;
    s.ini_st = sh.ini;
    s.in_pairs = sh.pairs;
    s.link = sh.link;
    s.provenance = {std::move(criterion), std::move(target)};
    return s;
}

std::string case_name(FnKind k, int id) { return std::string(fn_name(k)) + " case " + std::to_string(id); }

} // namespace

// ---- cases -------------------------------------------------------------------

CriterionResult cases_criterion(const Model& m, const Domains& d, bool include_otherwise)
{
    CriterionResult r;
    r.criterion = "cases";
    r.target = include_otherwise ? "dext, dint with otherwise" : "dext, dint";
    for (FnKind k : {FnKind::Dext, FnKind::Dint}) {
        const auto& fn = m.function(k);
        for (const auto& c : fn.cases) {
            if (c.otherwise && !include_otherwise)
                continue;
            auto sh = shape_of_guard(m, d, k, effective_guard(fn, c));
            add_unique(r, make_scc(sh, "cases", case_name(k, c.id)));
        }
    }
    return r;
}

// ---- extensional -------------------------------------------------------------

namespace {

void element_classes(const Sort& s, const ExprPtr& v, std::vector<PredPtr>& out)
{
    switch (s.kind()) {
    case Sort::Kind::Enum:
        for (const auto& lit : s.literals())
            out.push_back(Pred::compare(CmpOp::Eq, v, Expr::constant(lit)));
        return;
    case Sort::Kind::Extended:
        element_classes(*s.base(), v, out);
        out.push_back(Pred::compare(CmpOp::Eq, v, Expr::constant(Value::literal(s.bottom()))));
        return;
    case Sort::Kind::Nat:
        out.push_back(Pred::member_of_sort(v, Sort::nat()));
        return;
    case Sort::Kind::Int:
        out.push_back(Pred::member_of_sort(v, Sort::integer()));
        return;
    case Sort::Kind::Rational:
        out.push_back(Pred::member_of_sort(v, Sort::rational()));
        return;
    case Sort::Kind::Time:
        out.push_back(Pred::member_of_sort(v, Sort::time()));
        return;
    case Sort::Kind::Tuple:
        break;
    }
    throw CriterionError("extensional criterion requires enumerated set");
}

} // namespace

CriterionResult extensional_criterion(const Model& m, const std::vector<Symbol>& targets)
{
    CriterionResult r;
    r.criterion = "extensional";
    for (const auto& t : targets)
        r.target += (r.target.empty() ? "" : ", ") + t.str();
    for (const auto& t : targets) {
        const bool input = t == Symbol("x");
        SortPtr sort;
        ExprPtr var;
        if (input) {
            sort = m.input;
            var = m.input_var();
        } else if (auto i = m.state_index(t)) {
            sort = m.state[*i].sort;
            var = m.state_expr(*i);
        } else {
            throw CriterionError("unknown extensional target " + t.str());
        }
        if (sort->kind() != Sort::Kind::Enum && sort->kind() != Sort::Kind::Extended)
            throw CriterionError("extensional criterion requires enumerated set: " + t.str() + " : "
                                 + sort->to_string());
        std::vector<PredPtr> classes;
        element_classes(*sort, var, classes);
        for (const auto& c : classes) {
            Shape sh = input ? Shape{Pred::truth(), c, nullptr} : Shape{c, Pred::truth(), nullptr};
            add_unique(r, make_scc(sh, "extensional", to_string(c)));
        }
    }
    return r;
}

// ---- intentional -------------------------------------------------------------

CriterionResult intentional_criterion(const Model& m, const Domains& d, const PredPtr& comprehension)
{
    CriterionResult r;
    r.criterion = "intentional";
    r.target = to_string(comprehension);
    std::vector<DnfClause> clauses;
    try {
        clauses = to_dnf(comprehension);
    } catch (const DnfCapExceeded& e) {
        throw CriterionError(e.what());
    }
    for (const auto& c : clauses) {
        auto p = c.to_pred();
        add_unique(r, make_scc(split_joint(m, d, p), "intentional", to_string(p)));
    }
    return r;
}

// ---- standard partitions -----------------------------------------------------

std::vector<PredPtr> StandardPartition::instantiate(const std::vector<ExprPtr>& operands) const
{
    if (operands.size() != params.size())
        throw CriterionError("partition " + name + " has arity " + std::to_string(params.size()) + ", occurrence has "
                             + std::to_string(operands.size()) + " operands");
    Substitution s;
    for (std::size_t i = 0; i < params.size(); ++i)
        s[params[i]->name] = operands[i];
    std::vector<PredPtr> out;
    for (const auto& c : cells)
        out.push_back(substitute(c, s));
    return out;
}

namespace {

ExprPtr param(const char* name) { return Expr::var(Symbol(name), VarRole::Param, Sort::rational()); }

PredPtr cmp(CmpOp op, const ExprPtr& a, const ExprPtr& b) { return Pred::compare(op, a, b); }

StandardPartition sign_table(std::string name)
{
    StandardPartition sp;
    sp.name = std::move(name);
    auto a = param("a"), b = param("b");
    auto zero = Expr::constant(Value::integer(0));
    sp.params = {a, b};
    for (CmpOp oa : {CmpOp::Lt, CmpOp::Eq, CmpOp::Gt})
        for (CmpOp ob : {CmpOp::Lt, CmpOp::Eq, CmpOp::Gt})
            sp.cells.push_back(Pred::conj(cmp(oa, a, zero), cmp(ob, b, zero)));
    return sp;
}

StandardPartition order_table(std::string name)
{
    StandardPartition sp;
    sp.name = std::move(name);
    auto a = param("a"), b = param("b");
    sp.params = {a, b};
    sp.cells = {cmp(CmpOp::Lt, a, b), cmp(CmpOp::Eq, a, b), cmp(CmpOp::Gt, a, b)};
    return sp;
}

} // namespace

const std::vector<StandardPartition>& builtin_partitions()
{
    static const std::vector<StandardPartition> tables = [] {
        std::vector<StandardPartition> t;
        for (const char* op : {"<", "<=", ">", ">=", "=", "!=", "+", "-", "*", "/", "div"})
            t.push_back(sign_table(op));
        t.push_back(order_table("min"));
        t.push_back(order_table("max"));
        return t;
    }();
    return tables;
}

const StandardPartition* PartitionRegistry::find(std::string_view name) const
{
    for (const auto& p : user)
        if (p.name == name)
            return &p;
    for (const auto& p : builtin_partitions())
        if (p.name == name)
            return &p;
    return nullptr;
}

namespace {

bool holds_quietly(const PredPtr& p, const Env& env)
{
    try {
        return holds(*p, env);
    } catch (const EvalError&) {
        return false;
    }
}

} // namespace

PartitionHealth check_partition(const StandardPartition& sp, const std::vector<Value>& grid)
{
    PartitionHealth h;
    if (grid.empty())
        return h;
    const std::size_t n = sp.arity();
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        Env env;
        for (std::size_t i = 0; i < n; ++i)
            env.set(sp.params[i]->name, grid[idx[i]]);
        ++h.points;
        std::size_t hits = 0;
        for (const auto& c : sp.cells)
            hits += holds_quietly(c, env) ? 1 : 0;
        if (hits == 0 && h.exhaustive) {
            h.exhaustive = false;
            h.gap = env;
        }
        if (hits > 1 && h.disjoint) {
            h.disjoint = false;
            h.overlap = env;
        }
        std::size_t k = n;
        bool done = true;
        while (k > 0) {
            --k;
            if (++idx[k] < grid.size()) {
                done = false;
                break;
            }
            idx[k] = 0;
        }
        if (done)
            break;
    }
    return h;
}

std::string OccurrenceRef::to_string() const
{
    std::string s = op + " at " + case_name(fn, case_id);
    if (nth != 1)
        s += " #" + std::to_string(nth);
    return s;
}

namespace {

bool is_relation(const std::string& op)
{
    return op == "=" || op == "!=" || op == "<" || op == "<=" || op == ">" || op == ">=" || op == "in";
}

} // namespace

CriterionResult standard_partition_criterion(const Model& m, const Domains& d, const OccurrenceRef& where,
                                             const StandardPartition& table)
{
    CriterionResult r;
    r.criterion = "standard";
    r.target = where.to_string() + " using " + table.name;
    const auto& fn = m.function(where.fn);
    const auto* c = fn.find(where.case_id);
    if (!c)
        throw CriterionError("no " + case_name(where.fn, where.case_id));
    PredPtr guard = effective_guard(fn, *c);
    std::vector<Occurrence> occ;
    collect_occurrences(guard, occ);
    ExprPtr result = fn.lets.empty() ? c->result : substitute(c->result, let_substitution(fn));
    collect_occurrences(result, nullptr, occ);
    std::size_t seen = 0;
    const Occurrence* hit = nullptr;
    for (const auto& o : occ)
        if (o.op == where.op && ++seen == where.nth) {
            hit = &o;
            break;
        }
    if (!hit)
        throw CriterionError("no occurrence " + where.to_string());

    auto cells = table.instantiate(hit->operands);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        PredPtr g;
        if (hit->atom && is_relation(hit->op))
            g = replace_node(guard, hit->atom, cells[i]);
        else
            g = Pred::conj(guard, cells[i]);
        auto sh = shape_of_guard(m, d, where.fn, g);
        Scc s = make_scc(sh, "standard", where.to_string() + " cell " + std::to_string(i + 1) + ": " + to_string(cells[i]));
        auto j = s.joint();
        auto res = satisfiable(j, d, search_order(j, d));
        if (res.status == SatStatus::Unsat) {
            ++r.infeasible;
            continue;
        }
        if (res.status == SatStatus::Unknown)
            r.notes.push_back("cell " + std::to_string(i + 1) + " kept, emptiness unknown within budget");
        add_unique(r, std::move(s));
    }
    if (r.infeasible)
        r.notes.push_back(std::to_string(r.infeasible) + " infeasible cells dropped");
    return r;
}

StandardPartition domain_propagation(const StandardPartition& outer, const StandardPartition& inner,
                                     std::size_t operand, const ExprPtr& composed, const std::vector<Value>* prune_grid)
{
    if (operand >= outer.arity())
        throw CriterionError("operand index out of range for " + outer.name);
    StandardPartition out;
    out.name = outer.name + "(" + inner.name + ")";
    out.params = inner.params;
    std::set<Symbol> taken;
    for (const auto& p : inner.params)
        taken.insert(p->name);
    Substitution s;
    s[outer.params[operand]->name] = composed;
    for (std::size_t i = 0; i < outer.arity(); ++i) {
        if (i == operand)
            continue;
        auto p = outer.params[i];
        std::string n = p->name.str();
        while (taken.count(Symbol(n)))
            n += "'";
        auto fresh = Expr::var(Symbol(n), VarRole::Param, p->sort);
        taken.insert(fresh->name);
        s[p->name] = fresh;
        out.params.push_back(fresh);
    }
    Domains grid;
    if (prune_grid)
        for (const auto& p : out.params)
            grid.add(p->name, VarRole::Param, *prune_grid);
    for (const auto& ic : inner.cells)
        for (const auto& oc : outer.cells) {
            auto cell = Pred::conj(ic, substitute(oc, s));
            if (prune_grid) {
                auto res = satisfiable(cell, grid, search_order(cell, grid));
                if (res.status == SatStatus::Unsat)
                    continue;
            }
            out.cells.push_back(cell);
        }
    return out;
}

// ---- time --------------------------------------------------------------------

namespace {

struct Endpoint {
    Value value;
    ExprPtr expr;
};

Value endpoint_value(const ExprPtr& e, const Env& constants)
{
    Env none;
    Value v = eval(*e, none, &constants);
    if (!v.is_number())
        throw CriterionError("time endpoint " + to_string(e) + " must be a finite number");
    return v;
}

std::vector<Endpoint> endpoints(const TimeSpec& spec, const Env& constants)
{
    std::vector<Endpoint> pts;
    auto add = [&](const ExprPtr& e) {
        Value v = endpoint_value(e, constants);
        for (const auto& p : pts)
            if (p.value == v)
                return;
        pts.push_back({v, e});
    };
    for (const auto& [a, b] : spec.intervals) {
        Value va = endpoint_value(a, constants), vb = endpoint_value(b, constants);
        if (!(va.number() < vb.number()))
            throw CriterionError("empty time interval [" + to_string(a) + ", " + to_string(b) + "]");
        add(a);
        add(b);
    }
    for (const auto& p : spec.points)
        add(p);
    std::sort(pts.begin(), pts.end(), [](const Endpoint& x, const Endpoint& y) { return x.value.number() < y.value.number(); });
    return pts;
}

} // namespace

std::vector<PredPtr> time_conditions(const TimeSpec& spec, const ExprPtr& t, const Env& constants)
{
    auto pts = endpoints(spec, constants);
    std::vector<PredPtr> out;
    if (pts.empty())
        return out;
    out.push_back(cmp(CmpOp::Lt, t, pts.front().expr));
    for (std::size_t i = 0; i < pts.size(); ++i) {
        out.push_back(cmp(CmpOp::Eq, t, pts[i].expr));
        if (i + 1 < pts.size())
            out.push_back(Pred::conj(cmp(CmpOp::Lt, pts[i].expr, t), cmp(CmpOp::Lt, t, pts[i + 1].expr)));
    }
    out.push_back(cmp(CmpOp::Gt, t, pts.back().expr));
    return out;
}

CriterionResult time_partition_criterion(const Model& m, const Domains& d, const TimeSpec& spec)
{
    CriterionResult r;
    r.criterion = "time";
    for (const auto& [a, b] : spec.intervals)
        r.target += (r.target.empty() ? "[" : ", [") + to_string(a) + ", " + to_string(b) + "]";
    for (const auto& p : spec.points)
        r.target += (r.target.empty() ? "" : ", ") + to_string(p);
    auto pts = endpoints(spec, d.constants());
    auto conds = time_conditions(spec, m.time_var(), d.constants());
    // condition 2i+1 is the point pts[i]; even ones are the open gaps around it
    auto zero = Value::integer(0).number();
    for (std::size_t i = 0; i < conds.size(); ++i) {
        bool feasible;
        if (i % 2 == 1)
            feasible = pts[i / 2].value.number() >= zero;
        else if (i / 2 < pts.size())
            feasible = pts[i / 2].value.number() > zero;  // upper bound of the gap
        else
            feasible = true;
        if (!feasible) {
            ++r.infeasible;
            r.notes.push_back(to_string(conds[i]) + " dropped: t is nonnegative");
            continue;
        }
        add_unique(r, make_scc({Pred::truth(), conds[i], nullptr}, "time", to_string(conds[i])));
    }
    return r;
}

} // namespace devs_scc
