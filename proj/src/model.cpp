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
#include "devs_scc/model.hpp"

namespace devs_scc {

const GuardedCase* TransitionFn::find(int id) const
{
    for (const auto& c : cases)
        if (c.id == id)
            return &c;
    return nullptr;
}

bool TransitionFn::has_otherwise() const
{
    for (const auto& c : cases)
        if (c.otherwise)
            return true;
    return false;
}

std::vector<const GuardedCase*> TransitionFn::proper_cases() const
{
    std::vector<const GuardedCase*> out;
    for (const auto& c : cases)
        if (!c.otherwise)
            out.push_back(&c);
    return out;
}

const char* fn_name(FnKind k)
{
    switch (k) {
    case FnKind::Dext:
        return "dext";
    case FnKind::Dint:
        return "dint";
    case FnKind::Lambda:
        return "lambda";
    }
    return "?";
}

std::optional<FnKind> fn_from_name(std::string_view s)
{
    if (s == "dext")
        return FnKind::Dext;
    if (s == "dint")
        return FnKind::Dint;
    if (s == "lambda")
        return FnKind::Lambda;
    return std::nullopt;
}

std::optional<std::size_t> Model::state_index(Symbol name) const
{
    for (std::size_t i = 0; i < state.size(); ++i)
        if (state[i].name == name)
            return i;
    return std::nullopt;
}

const Constant* Model::constant(Symbol name) const
{
    for (const auto& c : constants)
        if (c.name == name)
            return &c;
    return nullptr;
}

const StateGroup* Model::group(Symbol name) const
{
    for (const auto& g : groups)
        if (g.name == name)
            return &g;
    return nullptr;
}

ExprPtr Model::state_expr(std::size_t i) const
{
    return Expr::var(state[i].name, VarRole::State, state[i].sort);
}

std::vector<ExprPtr> Model::state_exprs() const
{
    std::vector<ExprPtr> out;
    for (std::size_t i = 0; i < state.size(); ++i)
        out.push_back(state_expr(i));
    return out;
}

SortPtr Model::input_or_tau() const
{
    return Sort::extended(input, Symbol("tau"));
}

ExprPtr Model::input_var() const
{
    return Expr::var(Symbol("x"), VarRole::Input, input_or_tau());
}

ExprPtr Model::elapsed_var() const
{
    return Expr::var(Symbol("e"), VarRole::Elapsed, Sort::time());
}

ExprPtr Model::time_var() const
{
    return Expr::var(Symbol("t"), VarRole::Time, Sort::time());
}

SortPtr Model::state_sort() const
{
    std::vector<SortPtr> items;
    for (const auto& v : state)
        items.push_back(v.sort);
    return Sort::tuple(std::move(items));
}

const TransitionFn& Model::function(FnKind k) const
{
    switch (k) {
    case FnKind::Dext:
        return dext;
    case FnKind::Dint:
        return dint;
    case FnKind::Lambda:
        return lambda;
    }
    return dext;
}

TransitionFn& Model::function(FnKind k)
{
    return const_cast<TransitionFn&>(static_cast<const Model*>(this)->function(k));
}

namespace {

bool fn_equal(const TransitionFn& a, const TransitionFn& b)
{
    if (a.lets.size() != b.lets.size() || a.cases.size() != b.cases.size())
        return false;
    for (std::size_t i = 0; i < a.lets.size(); ++i)
        if (a.lets[i].name != b.lets[i].name || !structurally_equal(*a.lets[i].expr, *b.lets[i].expr))
            return false;
    for (std::size_t i = 0; i < a.cases.size(); ++i) {
        const auto& x = a.cases[i];
        const auto& y = b.cases[i];
        if (x.id != y.id || x.otherwise != y.otherwise)
            return false;
        if (!x.otherwise && !structurally_equal(*x.guard, *y.guard))
            return false;
        if (!structurally_equal(*x.result, *y.result))
            return false;
    }
    return true;
}

bool op_equal(const OpDef& a, const OpDef& b)
{
    if (a.name != b.name || a.params.size() != b.params.size() || *a.result != *b.result)
        return false;
    for (std::size_t i = 0; i < a.params.size(); ++i)
        if (a.params[i].name != b.params[i].name || *a.params[i].sort != *b.params[i].sort)
            return false;
    TransitionFn fa{a.lets, a.cases};
    TransitionFn fb{b.lets, b.cases};
    return fn_equal(fa, fb);
}

} // namespace

bool models_equal(const Model& a, const Model& b)
{
    if (a.name != b.name || a.aliases.size() != b.aliases.size() || a.constants.size() != b.constants.size()
        || a.state.size() != b.state.size() || a.groups.size() != b.groups.size() || a.ops.size() != b.ops.size())
        return false;
    for (std::size_t i = 0; i < a.aliases.size(); ++i)
        if (a.aliases[i].name != b.aliases[i].name || *a.aliases[i].sort != *b.aliases[i].sort)
            return false;
    for (std::size_t i = 0; i < a.constants.size(); ++i)
        if (a.constants[i].name != b.constants[i].name || *a.constants[i].sort != *b.constants[i].sort
            || a.constants[i].value != b.constants[i].value)
            return false;
    for (std::size_t i = 0; i < a.state.size(); ++i)
        if (a.state[i].name != b.state[i].name || *a.state[i].sort != *b.state[i].sort
            || a.state[i].time_var != b.state[i].time_var)
            return false;
    for (std::size_t i = 0; i < a.groups.size(); ++i)
        if (a.groups[i].name != b.groups[i].name || a.groups[i].first != b.groups[i].first
            || a.groups[i].count != b.groups[i].count)
            return false;
    if ((a.input == nullptr) != (b.input == nullptr) || (a.input && *a.input != *b.input))
        return false;
    if ((a.output == nullptr) != (b.output == nullptr) || (a.output && *a.output != *b.output))
        return false;
    for (std::size_t i = 0; i < a.ops.size(); ++i)
        if (!op_equal(*a.ops[i], *b.ops[i]))
            return false;
    if ((a.ta == nullptr) != (b.ta == nullptr) || (a.ta && !structurally_equal(*a.ta, *b.ta)))
        return false;
    return fn_equal(a.dext, b.dext) && fn_equal(a.dint, b.dint) && fn_equal(a.lambda, b.lambda);
}

Substitution elapsed_to_time(const Model& m)
{
    Substitution s;
    s[Symbol("e")] = m.time_var();
    return s;
}

Substitution let_substitution(const TransitionFn& fn)
{
    Substitution s;
    // later lets may refer to earlier ones
    for (const auto& l : fn.lets)
        s[l.name] = substitute(l.expr, s);
    return s;
}

PredPtr inlined_guard(const TransitionFn& fn, const GuardedCase& c)
{
    if (c.otherwise)
        return Pred::truth();
    if (fn.lets.empty())
        return c.guard;
    return substitute(c.guard, let_substitution(fn));
}

} // namespace devs_scc
