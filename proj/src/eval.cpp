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
#include "devs_scc/eval.hpp"

#include <algorithm>

namespace devs_scc {

void Env::set(Symbol name, Value v)
{
    for (auto& s : slots_) {
        if (s.first == name) {
            s.second = std::move(v);
            return;
        }
    }
    slots_.emplace_back(name, std::move(v));
}

const Value* Env::find(Symbol name) const
{
    for (auto it = slots_.rbegin(); it != slots_.rend(); ++it)
        if (it->first == name)
            return &it->second;
    return nullptr;
}

void Env::erase(Symbol name)
{
    slots_.erase(std::remove_if(slots_.begin(), slots_.end(), [&](const auto& s) { return s.first == name; }),
                 slots_.end());
}

namespace {

const Value* lookup(Symbol name, VarRole role, const EvalContext& ctx)
{
    if (role == VarRole::Const) {
        if (ctx.globals)
            if (const Value* v = ctx.globals->find(name))
                return v;
    }
    if (ctx.env)
        if (const Value* v = ctx.env->find(name))
            return v;
    if (ctx.globals)
        return ctx.globals->find(name);
    return nullptr;
}

const Number& number_of(const Value& v, const Expr& where)
{
    if (!v.is_number())
        throw EvalError("expected a number in " + to_string(where) + ", got " + v.to_string());
    return v.number();
}

void require_ordered(const Value& v, const Expr& where)
{
    if (!v.is_ordered())
        throw EvalError("expected a number in " + to_string(where) + ", got " + v.to_string());
}

bool nonneg_sort(const Expr& e)
{
    auto k = e.sort->kind();
    return k == Sort::Kind::Nat || k == Sort::Kind::Time;
}

Number floor_div(const Number& a, const Number& b)
{
    // floor(a / b) for exact rationals
    Number q = a / b;
    std::int64_t n = q.numerator();
    std::int64_t d = q.denominator();
    std::int64_t f = n / d;
    if ((n % d != 0) && (n < 0))
        --f;
    return Number(f);
}

Value apply_op(const OpDef& op, std::vector<Value> args, const EvalContext& outer);

Value eval_impl(const Expr& e, const EvalContext& ctx)
{
    switch (e.kind) {
    case ExprKind::Const:
        return e.value;
    case ExprKind::Var: {
        if (e.role == VarRole::Local && ctx.lets) {
            for (const auto& l : *ctx.lets)
                if (l.name == e.name)
                    return eval_impl(*l.expr, ctx);
        }
        const Value* v = lookup(e.name, e.role, ctx);
        if (!v)
            throw EvalError("unbound variable " + e.name.str());
        return *v;
    }
    case ExprKind::Neg: {
        Value a = eval_impl(*e.args[0], ctx);
        return Value(-number_of(a, e));
    }
    case ExprKind::Add: {
        Value a = eval_impl(*e.args[0], ctx), b = eval_impl(*e.args[1], ctx);
        require_ordered(a, e);
        require_ordered(b, e);
        if (a.is_infinity() || b.is_infinity())
            return Value::infinity();
        return Value(a.number() + b.number());
    }
    case ExprKind::Sub: {
        Value a = eval_impl(*e.args[0], ctx), b = eval_impl(*e.args[1], ctx);
        require_ordered(a, e);
        require_ordered(b, e);
        if (b.is_infinity())
            throw EvalError("subtracting infinity in " + to_string(e));
        if (a.is_infinity())
            return a;
        Number r = a.number() - b.number();
        if (r < 0 && nonneg_sort(e))
            throw EvalError("subtraction below zero in " + to_string(e) + " (" + a.to_string() + " - " + b.to_string()
                            + ")");
        return Value(r);
    }
    case ExprKind::Mul: {
        Value a = eval_impl(*e.args[0], ctx), b = eval_impl(*e.args[1], ctx);
        require_ordered(a, e);
        require_ordered(b, e);
        if (a.is_infinity() || b.is_infinity()) {
            const Value& other = a.is_infinity() ? b : a;
            if (other.is_infinity() || other.number() > 0)
                return Value::infinity();
            throw EvalError("undefined product with infinity in " + to_string(e));
        }
        return Value(a.number() * b.number());
    }
    case ExprKind::Div:
    case ExprKind::FloorDiv: {
        Value a = eval_impl(*e.args[0], ctx), b = eval_impl(*e.args[1], ctx);
        require_ordered(a, e);
        require_ordered(b, e);
        if (b.is_number() && b.number() == Number{0})
            throw EvalError("division by zero in " + to_string(e));
        if (a.is_infinity() || b.is_infinity()) {
            if (e.kind == ExprKind::Div && a.is_infinity() && b.is_number() && b.number() > 0)
                return a;
            if (e.kind == ExprKind::Div && a.is_number() && b.is_infinity())
                return Value::integer(0);
            throw EvalError("undefined division with infinity in " + to_string(e));
        }
        if (e.kind == ExprKind::Div)
            return Value(a.number() / b.number());
        return Value(floor_div(a.number(), b.number()));
    }
    case ExprKind::Min:
    case ExprKind::Max: {
        Value best = eval_impl(*e.args[0], ctx);
        require_ordered(best, e);
        for (std::size_t i = 1; i < e.args.size(); ++i) {
            Value v = eval_impl(*e.args[i], ctx);
            require_ordered(v, e);
            int c = *compare_ordered(v, best);
            if ((e.kind == ExprKind::Min && c < 0) || (e.kind == ExprKind::Max && c > 0))
                best = std::move(v);
        }
        return best;
    }
    case ExprKind::Tuple: {
        std::vector<Value> items;
        items.reserve(e.args.size());
        for (const auto& a : e.args)
            items.push_back(eval_impl(*a, ctx));
        return Value::tuple(std::move(items));
    }
    case ExprKind::Proj: {
        Value a = eval_impl(*e.args[0], ctx);
        if (!a.is_tuple() || e.index < 1 || e.index > a.items().size())
            throw EvalError("bad projection in " + to_string(e));
        return a.items()[e.index - 1];
    }
    case ExprKind::Call: {
        std::vector<Value> args;
        args.reserve(e.args.size());
        for (const auto& a : e.args)
            args.push_back(eval_impl(*a, ctx));
        return apply_op(*e.op, std::move(args), ctx);
    }
    }
    throw EvalError("unknown expression kind");
}

Value apply_op(const OpDef& op, std::vector<Value> args, const EvalContext& outer)
{
    Env env;
    for (std::size_t i = 0; i < op.params.size(); ++i) {
        if (!op.params[i].sort->contains(args[i]))
            throw EvalError("argument " + args[i].to_string() + " of " + op.name.str() + " is not in "
                            + op.params[i].sort->to_string());
        env.set(op.params[i].name, std::move(args[i]));
    }
    EvalContext ctx;
    ctx.env = &env;
    ctx.globals = outer.globals;
    ctx.lets = &op.lets;
    ctx.domains = outer.domains;
    for (const auto& c : op.cases) {
        if (c.otherwise || holds(*c.guard, ctx)) {
            Value r = eval_impl(*c.result, ctx);
            if (!op.result->contains(r))
                throw EvalError("result " + r.to_string() + " of " + op.name.str() + " is not in "
                                + op.result->to_string());
            return r;
        }
    }
    throw EvalError("no case of operator " + op.name.str() + " applies");
}

} // namespace

Value eval(const Expr& e, const EvalContext& ctx)
{
    return eval_impl(e, ctx);
}

bool holds(const Pred& p, const EvalContext& ctx)
{
    switch (p.kind) {
    case PredKind::True:
        return true;
    case PredKind::False:
        return false;
    case PredKind::Cmp:
        return compare_values(p.cmp, eval(*p.operands[0], ctx), eval(*p.operands[1], ctx));
    case PredKind::Member: {
        Value v = eval(*p.operands[0], ctx);
        if (p.member_sort)
            return p.member_sort->contains(v);
        return std::find(p.members.begin(), p.members.end(), v) != p.members.end();
    }
    case PredKind::And:
        for (const auto& c : p.children)
            if (!holds(*c, ctx))
                return false;
        return true;
    case PredKind::Or:
        for (const auto& c : p.children)
            if (holds(*c, ctx))
                return true;
        return false;
    case PredKind::Not:
        return !holds(*p.children[0], ctx);
    case PredKind::Implies:
        return !holds(*p.children[0], ctx) || holds(*p.children[1], ctx);
    case PredKind::Exists: {
        if (!ctx.domains)
            throw EvalError("quantifier without enumeration domains: " + to_string(p));
        Env env = ctx.env ? *ctx.env : Env{};
        std::vector<const std::vector<Value>*> doms;
        for (const auto& b : p.bound) {
            const auto* d = ctx.domains(b->name);
            if (!d)
                throw EvalError("no domain for bound variable " + b->name.str());
            doms.push_back(d);
            env.erase(b->name);
        }
        EvalContext inner = ctx;
        inner.env = &env;
        // odometer over the bound variables
        std::vector<std::size_t> idx(doms.size(), 0);
        for (const auto* d : doms)
            if (d->empty())
                return false;
        for (std::size_t i = 0; i < doms.size(); ++i)
            env.set(p.bound[i]->name, (*doms[i])[0]);
        while (true) {
            if (holds(*p.children[0], inner))
                return true;
            std::size_t k = doms.size();
            while (k > 0) {
                --k;
                if (++idx[k] < doms[k]->size()) {
                    env.set(p.bound[k]->name, (*doms[k])[idx[k]]);
                    break;
                }
                idx[k] = 0;
                env.set(p.bound[k]->name, (*doms[k])[0]);
                if (k == 0)
                    return false;
            }
            if (doms.empty())
                return false;
        }
    }
    }
    return false;
}

// ---- three-valued evaluation ---------------------------------------------------

Tri tri_not(Tri a)
{
    if (a == Tri::Unknown)
        return a;
    return a == Tri::True ? Tri::False : Tri::True;
}

namespace {

// Range of an expression over the remaining assignments. `pure` is false when
// the expression might also take a non-numeric value.
struct Range {
    Value lo;
    Value hi;
    bool pure = true;
};

bool all_bound(const Expr& e, const EvalContext& ctx)
{
    if (e.kind == ExprKind::Var) {
        if (e.role == VarRole::Local)
            return true;
        return lookup(e.name, e.role, ctx) != nullptr;
    }
    for (const auto& a : e.args)
        if (!all_bound(*a, ctx))
            return false;
    return true;
}

bool all_bound(const Pred& p, const EvalContext& ctx, std::vector<Symbol>& shadow)
{
    if (p.kind == PredKind::Exists) {
        std::size_t n = shadow.size();
        for (const auto& b : p.bound)
            shadow.push_back(b->name);
        bool r = all_bound(*p.children[0], ctx, shadow);
        shadow.resize(n);
        return r;
    }
    auto bound_expr = [&](const Expr& e) {
        std::map<Symbol, VarRole> fv;
        collect_free_vars(e, fv);
        for (const auto& [name, role] : fv) {
            if (role == VarRole::Local)
                continue;
            if (std::find(shadow.begin(), shadow.end(), name) != shadow.end())
                continue;
            if (!lookup(name, role, ctx))
                return false;
        }
        return true;
    };
    for (const auto& o : p.operands)
        if (!bound_expr(*o))
            return false;
    for (const auto& c : p.children)
        if (!all_bound(*c, ctx, shadow))
            return false;
    return true;
}

const Value& vmin(const Value& a, const Value& b)
{
    return *compare_ordered(a, b) <= 0 ? a : b;
}

const Value& vmax(const Value& a, const Value& b)
{
    return *compare_ordered(a, b) >= 0 ? a : b;
}

std::optional<Value> add_bound(const Value& a, const Value& b)
{
    if (a.is_infinity() || b.is_infinity())
        return Value::infinity();
    return Value(a.number() + b.number());
}

std::optional<Range> range_of(const Expr& e, const EvalContext& ctx)
{
    switch (e.kind) {
    case ExprKind::Const:
        if (!e.value.is_ordered())
            return std::nullopt;
        return Range{e.value, e.value, true};
    case ExprKind::Var: {
        if (e.role == VarRole::Local)
            return std::nullopt;
        if (const Value* v = lookup(e.name, e.role, ctx)) {
            if (!v->is_ordered())
                return std::nullopt;
            return Range{*v, *v, true};
        }
        if (!ctx.domains)
            return std::nullopt;
        const auto* dom = ctx.domains(e.name);
        if (!dom)
            return std::nullopt;
        std::optional<Value> lo, hi;
        bool pure = true;
        for (const auto& v : *dom) {
            if (!v.is_ordered()) {
                pure = false;
                continue;
            }
            lo = lo ? vmin(*lo, v) : v;
            hi = hi ? vmax(*hi, v) : v;
        }
        if (!lo)
            return std::nullopt;
        return Range{*lo, *hi, pure};
    }
    case ExprKind::Add:
    case ExprKind::Sub: {
        auto a = range_of(*e.args[0], ctx);
        auto b = range_of(*e.args[1], ctx);
        if (!a || !b)
            return std::nullopt;
        if (e.kind == ExprKind::Add)
            return Range{*add_bound(a->lo, b->lo), *add_bound(a->hi, b->hi), a->pure && b->pure};
        // lo = a.lo - b.hi, hi = a.hi - b.lo
        if (b->hi.is_infinity() || b->lo.is_infinity())
            return std::nullopt;
        Value lo = a->lo.is_infinity() ? a->lo : Value(a->lo.number() - b->hi.number());
        Value hi = a->hi.is_infinity() ? a->hi : Value(a->hi.number() - b->lo.number());
        return Range{lo, hi, a->pure && b->pure};
    }
    case ExprKind::Min:
    case ExprKind::Max: {
        std::optional<Range> acc;
        for (const auto& arg : e.args) {
            auto r = range_of(*arg, ctx);
            if (!r)
                return std::nullopt;
            if (!acc) {
                acc = r;
                continue;
            }
            if (e.kind == ExprKind::Min)
                acc = Range{vmin(acc->lo, r->lo), vmin(acc->hi, r->hi), acc->pure && r->pure};
            else
                acc = Range{vmax(acc->lo, r->lo), vmax(acc->hi, r->hi), acc->pure && r->pure};
        }
        return acc;
    }
    default:
        return std::nullopt;
    }
}

Tri decide_by_range(const Pred& p, const EvalContext& ctx)
{
    auto a = range_of(*p.operands[0], ctx);
    auto b = range_of(*p.operands[1], ctx);
    if (!a || !b)
        return Tri::Unknown;
    auto cmp = [](const Value& x, const Value& y) { return *compare_ordered(x, y); };
    bool pure = a->pure && b->pure;
    switch (p.cmp) {
    case CmpOp::Lt:
        if (cmp(a->lo, b->hi) >= 0)
            return Tri::False;
        if (pure && cmp(a->hi, b->lo) < 0)
            return Tri::True;
        break;
    case CmpOp::Le:
        if (cmp(a->lo, b->hi) > 0)
            return Tri::False;
        if (pure && cmp(a->hi, b->lo) <= 0)
            return Tri::True;
        break;
    case CmpOp::Gt:
        if (cmp(a->hi, b->lo) <= 0)
            return Tri::False;
        if (pure && cmp(a->lo, b->hi) > 0)
            return Tri::True;
        break;
    case CmpOp::Ge:
        if (cmp(a->hi, b->lo) < 0)
            return Tri::False;
        if (pure && cmp(a->lo, b->hi) >= 0)
            return Tri::True;
        break;
    case CmpOp::Eq:
    case CmpOp::Ne: {
        bool disjoint = cmp(a->hi, b->lo) < 0 || cmp(b->hi, a->lo) < 0;
        if (disjoint && (a->pure || b->pure))
            return p.cmp == CmpOp::Eq ? Tri::False : Tri::True;
        break;
    }
    }
    return Tri::Unknown;
}

Tri atom_value(const Pred& p, const EvalContext& ctx)
{
    try {
        return holds(p, ctx) ? Tri::True : Tri::False;
    } catch (const EvalError&) {
        return Tri::False;
    }
}

} // namespace

Tri kleene(const Pred& p, const EvalContext& ctx)
{
    switch (p.kind) {
    case PredKind::True:
        return Tri::True;
    case PredKind::False:
        return Tri::False;
    case PredKind::Cmp:
    case PredKind::Member: {
        std::vector<Symbol> shadow;
        if (all_bound(p, ctx, shadow))
            return atom_value(p, ctx);
        if (p.kind == PredKind::Cmp)
            return decide_by_range(p, ctx);
        return Tri::Unknown;
    }
    case PredKind::And: {
        Tri r = Tri::True;
        for (const auto& c : p.children) {
            Tri v = kleene(*c, ctx);
            if (v == Tri::False)
                return Tri::False;
            if (v == Tri::Unknown)
                r = Tri::Unknown;
        }
        return r;
    }
    case PredKind::Or: {
        Tri r = Tri::False;
        for (const auto& c : p.children) {
            Tri v = kleene(*c, ctx);
            if (v == Tri::True)
                return Tri::True;
            if (v == Tri::Unknown)
                r = Tri::Unknown;
        }
        return r;
    }
    case PredKind::Not:
        return tri_not(kleene(*p.children[0], ctx));
    case PredKind::Implies: {
        Tri a = kleene(*p.children[0], ctx);
        if (a == Tri::False)
            return Tri::True;
        Tri b = kleene(*p.children[1], ctx);
        if (b == Tri::True)
            return Tri::True;
        if (a == Tri::True)
            return b;
        return Tri::Unknown;
    }
    case PredKind::Exists: {
        std::vector<Symbol> shadow;
        if (all_bound(p, ctx, shadow))
            return atom_value(p, ctx);
        return Tri::Unknown;
    }
    }
    return Tri::Unknown;
}

} // namespace devs_scc
