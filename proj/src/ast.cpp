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
#include "devs_scc/ast.hpp"

#include <algorithm>
#include <sstream>

namespace devs_scc {

const char* role_name(VarRole r)
{
    switch (r) {
    case VarRole::State: return "state";
    case VarRole::Input: return "input";
    case VarRole::Elapsed: return "elapsed";
    case VarRole::Time: return "time";
    case VarRole::Const: return "const";
    case VarRole::Local: return "local";
    case VarRole::Param: return "param";
    }
    return "?";
}

const char* cmp_symbol(CmpOp op)
{
    switch (op) {
    case CmpOp::Eq: return "=";
    case CmpOp::Ne: return "!=";
    case CmpOp::Lt: return "<";
    case CmpOp::Le: return "<=";
    case CmpOp::Gt: return ">";
    case CmpOp::Ge: return ">=";
    }
    return "?";
}

CmpOp negate_cmp(CmpOp op)
{
    switch (op) {
    case CmpOp::Eq: return CmpOp::Ne;
    case CmpOp::Ne: return CmpOp::Eq;
    case CmpOp::Lt: return CmpOp::Ge;
    case CmpOp::Le: return CmpOp::Gt;
    case CmpOp::Gt: return CmpOp::Le;
    case CmpOp::Ge: return CmpOp::Lt;
    }
    return op;
}

// ---- static sorts ----------------------------------------------------------

namespace {

// Arithmetic class of an operand. NNRat marks nonnegative rational constants,
// which combine with time values without widening them.
enum class Num { Nat, NNRat, Int, Rat, Time };

Num numeric_class(const Expr& e)
{
    if (e.is_const()) {
        const Value& v = e.value;
        if (v.is_infinity())
            return Num::Time;
        if (!v.is_number())
            throw SortError("arithmetic on non-numeric value " + v.to_string());
        if (v.number() < 0)
            return v.is_integer() ? Num::Int : Num::Rat;
        return v.is_integer() ? Num::Nat : Num::NNRat;
    }
    const Sort& s = e.sort->root();
    switch (s.kind()) {
    case Sort::Kind::Nat: return Num::Nat;
    case Sort::Kind::Int: return Num::Int;
    case Sort::Kind::Rational: return Num::Rat;
    case Sort::Kind::Time: return Num::Time;
    case Sort::Kind::Enum: {
        bool any = false, neg = false, frac = false;
        for (const auto& l : s.literals()) {
            if (!l.is_number())
                continue;
            any = true;
            neg = neg || l.number() < 0;
            frac = frac || !l.is_integer();
        }
        if (!any)
            break;
        if (frac)
            return neg ? Num::Rat : Num::NNRat;
        return neg ? Num::Int : Num::Nat;
    }
    default:
        break;
    }
    throw SortError("arithmetic on non-numeric operand " + to_string(e) + " : " + e.sort->to_string());
}

Num join(Num a, Num b, const char* what)
{
    if (a == b)
        return a == Num::NNRat ? Num::Rat : a;
    if (a > b)
        std::swap(a, b);
    // a < b in enum order Nat < NNRat < Int < Rat < Time
    switch (a) {
    case Num::Nat:
        return b == Num::NNRat ? Num::Rat : b;
    case Num::NNRat:
        return b == Num::Time ? Num::Time : Num::Rat;
    case Num::Int:
        if (b == Num::Rat)
            return Num::Rat;
        break;
    default:
        break;
    }
    throw SortError(std::string("cannot mix time and signed numbers in ") + what);
}

SortPtr sort_of(Num n)
{
    switch (n) {
    case Num::Nat: return Sort::nat();
    case Num::Int: return Sort::integer();
    case Num::Time: return Sort::time();
    default: return Sort::rational();
    }
}

const char* kind_symbol(ExprKind k)
{
    switch (k) {
    case ExprKind::Add: return "+";
    case ExprKind::Sub: return "-";
    case ExprKind::Mul: return "*";
    case ExprKind::Div: return "/";
    case ExprKind::FloorDiv: return "div";
    case ExprKind::Min: return "min";
    case ExprKind::Max: return "max";
    default: return "?";
    }
}

std::shared_ptr<Expr> blank(ExprKind k)
{
    auto e = std::make_shared<Expr>();
    e->kind = k;
    return e;
}

} // namespace

ExprPtr Expr::constant(Value v)
{
    auto e = blank(ExprKind::Const);
    e->sort = sort_of_value(v);
    e->value = std::move(v);
    return e;
}

ExprPtr Expr::var(Symbol name, VarRole role, SortPtr sort)
{
    auto e = blank(ExprKind::Var);
    e->name = name;
    e->role = role;
    e->sort = std::move(sort);
    return e;
}

ExprPtr Expr::neg(ExprPtr a)
{
    if (a->is_const() && a->value.is_number())
        return constant(Value(-a->value.number()));
    Num n = numeric_class(*a);
    if (n == Num::Time)
        throw SortError("cannot negate a time value");
    auto e = blank(ExprKind::Neg);
    e->sort = (n == Num::Nat || n == Num::Int) ? Sort::integer() : Sort::rational();
    e->args = {std::move(a)};
    return e;
}

ExprPtr Expr::binary(ExprKind k, ExprPtr a, ExprPtr b)
{
    if (k == ExprKind::Div && a->is_const() && b->is_const() && a->value.is_number() && b->value.is_number()
        && b->value.number() != Number{0})
        return constant(Value(a->value.number() / b->value.number()));
    Num na = numeric_class(*a);
    Num nb = numeric_class(*b);
    Num r = join(na, nb, kind_symbol(k));
    auto e = blank(k);
    switch (k) {
    case ExprKind::Div:
        e->sort = r == Num::Time ? Sort::time() : Sort::rational();
        break;
    case ExprKind::FloorDiv: {
        auto nonneg = [](Num n) { return n == Num::Nat || n == Num::NNRat || n == Num::Time; };
        e->sort = nonneg(na) && nonneg(nb) ? Sort::nat() : Sort::integer();
        break;
    }
    default:
        e->sort = sort_of(r);
        break;
    }
    e->args = {std::move(a), std::move(b)};
    return e;
}

ExprPtr Expr::minmax(ExprKind k, std::vector<ExprPtr> args)
{
    if (args.empty())
        throw SortError(std::string(kind_symbol(k)) + " needs at least one argument");
    Num r = numeric_class(*args.front());
    if (r == Num::NNRat)
        r = Num::Rat;
    for (std::size_t i = 1; i < args.size(); ++i)
        r = join(r, numeric_class(*args[i]), kind_symbol(k));
    auto e = blank(k);
    e->sort = sort_of(r);
    e->args = std::move(args);
    return e;
}

ExprPtr Expr::tuple(std::vector<ExprPtr> items)
{
    if (std::all_of(items.begin(), items.end(), [](const ExprPtr& i) { return i->is_const(); })) {
        std::vector<Value> vs;
        for (const auto& i : items)
            vs.push_back(i->value);
        return constant(Value::tuple(std::move(vs)));
    }
    auto e = blank(ExprKind::Tuple);
    std::vector<SortPtr> sorts;
    for (const auto& i : items)
        sorts.push_back(i->sort);
    e->sort = Sort::tuple(std::move(sorts));
    e->args = std::move(items);
    return e;
}

ExprPtr Expr::group(Symbol name, std::vector<ExprPtr> items)
{
    auto e = blank(ExprKind::Tuple);
    std::vector<SortPtr> sorts;
    for (const auto& i : items)
        sorts.push_back(i->sort);
    e->sort = Sort::tuple(std::move(sorts));
    e->args = std::move(items);
    e->name = name;
    return e;
}

ExprPtr Expr::proj(ExprPtr a, std::size_t index)
{
    const Sort& s = a->sort->root();
    if (s.kind() != Sort::Kind::Tuple)
        throw SortError("projection ." + std::to_string(index) + " on non-tuple " + to_string(*a));
    if (index < 1 || index > s.items().size())
        throw SortError("projection ." + std::to_string(index) + " out of range for " + s.to_string());
    if (a->is_const())
        return constant(a->value.items()[index - 1]);
    auto e = blank(ExprKind::Proj);
    e->sort = s.items()[index - 1];
    e->index = index;
    e->args = {std::move(a)};
    return e;
}

ExprPtr Expr::call(std::shared_ptr<const OpDef> op, std::vector<ExprPtr> args)
{
    if (args.size() != op->params.size())
        throw SortError("operator " + op->name.str() + " expects " + std::to_string(op->params.size())
                        + " arguments, got " + std::to_string(args.size()));
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (!sorts_overlap(*args[i]->sort, *op->params[i].sort))
            throw SortError("argument " + std::to_string(i + 1) + " of " + op->name.str() + " has sort "
                            + args[i]->sort->to_string() + ", expected " + op->params[i].sort->to_string());
    }
    auto e = blank(ExprKind::Call);
    e->sort = op->result;
    e->op = std::move(op);
    e->args = std::move(args);
    return e;
}

// ---- predicate builders ----------------------------------------------------

namespace {

std::shared_ptr<Pred> blank(PredKind k)
{
    auto p = std::make_shared<Pred>();
    p->kind = k;
    return p;
}

} // namespace

PredPtr Pred::truth()
{
    static const PredPtr t = blank(PredKind::True);
    return t;
}

PredPtr Pred::falsity()
{
    static const PredPtr f = blank(PredKind::False);
    return f;
}

PredPtr Pred::compare(CmpOp op, ExprPtr a, ExprPtr b)
{
    auto p = blank(PredKind::Cmp);
    p->cmp = op;
    p->operands = {std::move(a), std::move(b)};
    return p;
}

PredPtr Pred::conj(std::vector<PredPtr> cs)
{
    if (cs.empty())
        return truth();
    if (cs.size() == 1)
        return cs.front();
    auto p = blank(PredKind::And);
    p->children = std::move(cs);
    return p;
}

PredPtr Pred::disj(std::vector<PredPtr> cs)
{
    if (cs.empty())
        return falsity();
    if (cs.size() == 1)
        return cs.front();
    auto p = blank(PredKind::Or);
    p->children = std::move(cs);
    return p;
}

PredPtr Pred::negation(PredPtr a)
{
    auto p = blank(PredKind::Not);
    p->children = {std::move(a)};
    return p;
}

PredPtr Pred::implies(PredPtr a, PredPtr b)
{
    auto p = blank(PredKind::Implies);
    p->children = {std::move(a), std::move(b)};
    return p;
}

PredPtr Pred::member(ExprPtr a, std::vector<Value> set)
{
    auto p = blank(PredKind::Member);
    p->operands = {std::move(a)};
    p->members = std::move(set);
    return p;
}

PredPtr Pred::member_of_sort(ExprPtr a, SortPtr sort)
{
    auto p = blank(PredKind::Member);
    p->operands = {std::move(a)};
    p->member_sort = std::move(sort);
    return p;
}

PredPtr Pred::exists(std::vector<ExprPtr> vars, PredPtr body)
{
    if (vars.empty())
        return body;
    auto p = blank(PredKind::Exists);
    p->bound = std::move(vars);
    p->children = {std::move(body)};
    return p;
}

// ---- rendering ---------------------------------------------------------------

namespace {

// Expression precedence levels.
constexpr int kPrecAdd = 1;
constexpr int kPrecMul = 2;
constexpr int kPrecUnary = 3;
constexpr int kPrecPostfix = 4;

void render(const Expr& e, int prec, std::string& out);

void render_list(const std::vector<ExprPtr>& xs, std::string& out)
{
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            out += ", ";
        render(*xs[i], 0, out);
    }
}

void render_const(const Value& v, int prec, std::string& out)
{
    if (v.is_number()) {
        std::string s = number_to_string(v.number());
        bool wrap = prec > 0 && (v.number() < 0 || s.find('/') != std::string::npos);
        if (wrap)
            out += "(" + s + ")";
        else
            out += s;
        return;
    }
    if (v.is_tuple()) {
        out += "(";
        for (std::size_t i = 0; i < v.items().size(); ++i) {
            if (i)
                out += ", ";
            render_const(v.items()[i], 0, out);
        }
        out += ")";
        return;
    }
    out += v.to_string();
}

void render(const Expr& e, int prec, std::string& out)
{
    switch (e.kind) {
    case ExprKind::Const:
        render_const(e.value, prec, out);
        return;
    case ExprKind::Var:
        out += e.name.str();
        return;
    case ExprKind::Neg:
        if (prec > 0)
            out += "(";
        out += "-";
        render(*e.args[0], kPrecPostfix, out);
        if (prec > 0)
            out += ")";
        return;
    case ExprKind::Add:
    case ExprKind::Sub:
    case ExprKind::Mul:
    case ExprKind::Div:
    case ExprKind::FloorDiv: {
        int p = (e.kind == ExprKind::Add || e.kind == ExprKind::Sub) ? kPrecAdd : kPrecMul;
        bool wrap = prec > p;
        if (wrap)
            out += "(";
        render(*e.args[0], p, out);
        out += " ";
        out += kind_symbol(e.kind);
        out += " ";
        render(*e.args[1], p + 1, out);
        if (wrap)
            out += ")";
        return;
    }
    case ExprKind::Min:
    case ExprKind::Max:
        out += kind_symbol(e.kind);
        out += "(";
        render_list(e.args, out);
        out += ")";
        return;
    case ExprKind::Tuple:
        if (e.name.valid()) {
            out += e.name.str();
            return;
        }
        out += "(";
        render_list(e.args, out);
        out += ")";
        return;
    case ExprKind::Proj:
        render(*e.args[0], kPrecPostfix, out);
        out += "." + std::to_string(e.index);
        return;
    case ExprKind::Call:
        out += e.op->name.str();
        out += "(";
        render_list(e.args, out);
        out += ")";
        return;
    }
}

// Predicate precedence levels.
constexpr int kPrecImplies = 1;
constexpr int kPrecOr = 2;
constexpr int kPrecAnd = 3;
constexpr int kPrecNot = 4;

void render(const Pred& p, int prec, std::string& out)
{
    switch (p.kind) {
    case PredKind::True:
        out += "true";
        return;
    case PredKind::False:
        out += "false";
        return;
    case PredKind::Cmp:
        render(*p.operands[0], 0, out);
        out += " ";
        out += cmp_symbol(p.cmp);
        out += " ";
        render(*p.operands[1], 0, out);
        return;
    case PredKind::Member:
        render(*p.operands[0], 0, out);
        out += " in ";
        if (p.member_sort) {
            out += p.member_sort->to_string();
        } else {
            out += "{";
            for (std::size_t i = 0; i < p.members.size(); ++i) {
                if (i)
                    out += ", ";
                render_const(p.members[i], 0, out);
            }
            out += "}";
        }
        return;
    case PredKind::And:
    case PredKind::Or: {
        int level = p.kind == PredKind::And ? kPrecAnd : kPrecOr;
        bool wrap = prec > level;
        if (wrap)
            out += "(";
        for (std::size_t i = 0; i < p.children.size(); ++i) {
            if (i)
                out += p.kind == PredKind::And ? " & " : " \\/ ";
            render(*p.children[i], level + 1, out);
        }
        if (wrap)
            out += ")";
        return;
    }
    case PredKind::Not: {
        out += "~";
        const Pred& c = *p.children[0];
        if (c.kind == PredKind::Not || c.kind == PredKind::True || c.kind == PredKind::False) {
            render(c, kPrecNot, out);
        } else {
            out += "(";
            render(c, 0, out);
            out += ")";
        }
        return;
    }
    case PredKind::Implies: {
        bool wrap = prec > kPrecImplies;
        if (wrap)
            out += "(";
        render(*p.children[0], kPrecImplies + 1, out);
        out += " => ";
        render(*p.children[1], kPrecImplies, out);
        if (wrap)
            out += ")";
        return;
    }
    case PredKind::Exists: {
        bool wrap = prec > 0;
        if (wrap)
            out += "(";
        out += "exists(";
        render_list(p.bound, out);
        out += ") ";
        const Pred& body = *p.children[0];
        if (body.kind == PredKind::True || body.kind == PredKind::False) {
            render(body, kPrecNot, out);
        } else {
            out += "(";
            render(body, 0, out);
            out += ")";
        }
        if (wrap)
            out += ")";
        return;
    }
    }
}

} // namespace

std::string to_string(const Expr& e)
{
    std::string out;
    render(e, 0, out);
    return out;
}

std::string to_string(const Pred& p)
{
    std::string out;
    render(p, 0, out);
    return out;
}

bool structurally_equal(const Expr& a, const Expr& b)
{
    if (&a == &b)
        return true;
    if (a.kind != b.kind || a.args.size() != b.args.size())
        return false;
    switch (a.kind) {
    case ExprKind::Const:
        if (a.value != b.value)
            return false;
        break;
    case ExprKind::Var:
        if (a.name != b.name || a.role != b.role)
            return false;
        break;
    case ExprKind::Proj:
        if (a.index != b.index)
            return false;
        break;
    case ExprKind::Call:
        if (a.op->name != b.op->name)
            return false;
        break;
    default:
        break;
    }
    for (std::size_t i = 0; i < a.args.size(); ++i)
        if (!structurally_equal(*a.args[i], *b.args[i]))
            return false;
    return true;
}

bool structurally_equal(const Pred& a, const Pred& b)
{
    if (&a == &b)
        return true;
    if (a.kind != b.kind || a.children.size() != b.children.size() || a.operands.size() != b.operands.size()
        || a.bound.size() != b.bound.size())
        return false;
    if (a.kind == PredKind::Cmp && a.cmp != b.cmp)
        return false;
    if (a.kind == PredKind::Member) {
        if (static_cast<bool>(a.member_sort) != static_cast<bool>(b.member_sort))
            return false;
        if (a.member_sort && *a.member_sort != *b.member_sort)
            return false;
        if (a.members != b.members)
            return false;
    }
    for (std::size_t i = 0; i < a.operands.size(); ++i)
        if (!structurally_equal(*a.operands[i], *b.operands[i]))
            return false;
    for (std::size_t i = 0; i < a.bound.size(); ++i)
        if (!structurally_equal(*a.bound[i], *b.bound[i]))
            return false;
    for (std::size_t i = 0; i < a.children.size(); ++i)
        if (!structurally_equal(*a.children[i], *b.children[i]))
            return false;
    return true;
}

// ---- traversal ---------------------------------------------------------------

void collect_free_vars(const Expr& e, std::map<Symbol, VarRole>& out)
{
    if (e.kind == ExprKind::Var) {
        out.emplace(e.name, e.role);
        return;
    }
    for (const auto& a : e.args)
        collect_free_vars(*a, out);
}

void collect_free_vars(const Pred& p, std::map<Symbol, VarRole>& out)
{
    if (p.kind == PredKind::Exists) {
        std::map<Symbol, VarRole> inner;
        collect_free_vars(*p.children[0], inner);
        for (const auto& b : p.bound)
            inner.erase(b->name);
        out.insert(inner.begin(), inner.end());
        return;
    }
    for (const auto& o : p.operands)
        collect_free_vars(*o, out);
    for (const auto& c : p.children)
        collect_free_vars(*c, out);
}

std::map<Symbol, VarRole> free_vars(const Pred& p)
{
    std::map<Symbol, VarRole> out;
    collect_free_vars(p, out);
    return out;
}

std::map<Symbol, VarRole> free_vars(const Expr& e)
{
    std::map<Symbol, VarRole> out;
    collect_free_vars(e, out);
    return out;
}

ExprPtr substitute(const ExprPtr& e, const Substitution& s)
{
    switch (e->kind) {
    case ExprKind::Const:
        return e;
    case ExprKind::Var: {
        auto it = s.find(e->name);
        return it == s.end() ? e : it->second;
    }
    default:
        break;
    }
    std::vector<ExprPtr> args;
    bool changed = false;
    for (const auto& a : e->args) {
        args.push_back(substitute(a, s));
        changed = changed || args.back() != a;
    }
    if (!changed)
        return e;
    switch (e->kind) {
    case ExprKind::Neg: return Expr::neg(args[0]);
    case ExprKind::Min:
    case ExprKind::Max: return Expr::minmax(e->kind, std::move(args));
    case ExprKind::Tuple: return Expr::tuple(std::move(args));
    case ExprKind::Proj: return Expr::proj(args[0], e->index);
    case ExprKind::Call: return Expr::call(e->op, std::move(args));
    default: return Expr::binary(e->kind, args[0], args[1]);
    }
}

PredPtr substitute(const PredPtr& p, const Substitution& s)
{
    switch (p->kind) {
    case PredKind::True:
    case PredKind::False:
        return p;
    case PredKind::Cmp: {
        auto a = substitute(p->operands[0], s);
        auto b = substitute(p->operands[1], s);
        if (a == p->operands[0] && b == p->operands[1])
            return p;
        return Pred::compare(p->cmp, a, b);
    }
    case PredKind::Member: {
        auto a = substitute(p->operands[0], s);
        if (a == p->operands[0])
            return p;
        return p->member_sort ? Pred::member_of_sort(a, p->member_sort) : Pred::member(a, p->members);
    }
    case PredKind::Exists: {
        Substitution inner = s;
        for (const auto& b : p->bound)
            inner.erase(b->name);
        auto body = substitute(p->children[0], inner);
        if (body == p->children[0])
            return p;
        return Pred::exists(p->bound, body);
    }
    default:
        break;
    }
    std::vector<PredPtr> cs;
    bool changed = false;
    for (const auto& c : p->children) {
        cs.push_back(substitute(c, s));
        changed = changed || cs.back() != c;
    }
    if (!changed)
        return p;
    switch (p->kind) {
    case PredKind::And: return Pred::conj(std::move(cs));
    case PredKind::Or: return Pred::disj(std::move(cs));
    case PredKind::Not: return Pred::negation(cs[0]);
    default: return Pred::implies(cs[0], cs[1]);
    }
}

PredPtr replace_node(const PredPtr& p, const Pred* target, const PredPtr& with)
{
    if (p.get() == target)
        return with;
    if (p->children.empty())
        return p;
    std::vector<PredPtr> cs;
    bool changed = false;
    for (const auto& c : p->children) {
        cs.push_back(replace_node(c, target, with));
        changed = changed || cs.back() != c;
    }
    if (!changed)
        return p;
    switch (p->kind) {
    case PredKind::And: return Pred::conj(std::move(cs));
    case PredKind::Or: return Pred::disj(std::move(cs));
    case PredKind::Not: return Pred::negation(cs[0]);
    case PredKind::Implies: return Pred::implies(cs[0], cs[1]);
    case PredKind::Exists: return Pred::exists(p->bound, cs[0]);
    default: return p;
    }
}

std::vector<PredPtr> conjuncts(const PredPtr& p)
{
    if (p->kind == PredKind::And) {
        std::vector<PredPtr> out;
        for (const auto& c : p->children) {
            auto sub = conjuncts(c);
            out.insert(out.end(), sub.begin(), sub.end());
        }
        return out;
    }
    if (p->kind == PredKind::True)
        return {};
    return {p};
}

void collect_occurrences(const ExprPtr& e, const Pred* atom, std::vector<Occurrence>& out)
{
    switch (e->kind) {
    case ExprKind::Const:
    case ExprKind::Var:
        return;
    case ExprKind::Neg:
        out.push_back({"neg", e->args, atom});
        break;
    case ExprKind::Tuple:
    case ExprKind::Proj:
        break;
    case ExprKind::Call:
        out.push_back({e->op->name.str(), e->args, atom});
        break;
    default:
        out.push_back({kind_symbol(e->kind), e->args, atom});
        break;
    }
    for (const auto& a : e->args)
        collect_occurrences(a, atom, out);
}

void collect_occurrences(const PredPtr& p, std::vector<Occurrence>& out)
{
    switch (p->kind) {
    case PredKind::Cmp:
        out.push_back({cmp_symbol(p->cmp), p->operands, p.get()});
        for (const auto& o : p->operands)
            collect_occurrences(o, p.get(), out);
        return;
    case PredKind::Member:
        out.push_back({"in", p->operands, p.get()});
        collect_occurrences(p->operands[0], p.get(), out);
        return;
    default:
        for (const auto& c : p->children)
            collect_occurrences(c, out);
        return;
    }
}

// ---- canonical form ----------------------------------------------------------

bool compare_values(CmpOp op, const Value& a, const Value& b)
{
    switch (op) {
    case CmpOp::Eq: return a == b;
    case CmpOp::Ne: return a != b;
    default: break;
    }
    auto c = compare_ordered(a, b);
    if (!c)
        return false;
    switch (op) {
    case CmpOp::Lt: return *c < 0;
    case CmpOp::Le: return *c <= 0;
    case CmpOp::Gt: return *c > 0;
    default: return *c >= 0;
    }
}


namespace {

int orientation_rank(const Expr& e)
{
    if (e.kind == ExprKind::Const)
        return 3;
    if (e.kind == ExprKind::Var)
        return e.role == VarRole::Const ? 2 : 0;
    return 1;
}

PredPtr normalize_nary(const Pred& p)
{
    const bool is_and = p.kind == PredKind::And;
    std::vector<PredPtr> flat;
    std::vector<PredPtr> stack;
    for (auto it = p.children.rbegin(); it != p.children.rend(); ++it)
        stack.push_back(normalize(*it));
    while (!stack.empty()) {
        PredPtr c = stack.back();
        stack.pop_back();
        if (c->kind == p.kind) {
            for (auto it = c->children.rbegin(); it != c->children.rend(); ++it)
                stack.push_back(*it);
            continue;
        }
        if (c->kind == (is_and ? PredKind::True : PredKind::False))
            continue;
        if (c->kind == (is_and ? PredKind::False : PredKind::True))
            return c;
        flat.push_back(c);
    }
    std::vector<std::pair<std::string, PredPtr>> keyed;
    for (auto& c : flat)
        keyed.emplace_back(to_string(*c), c);
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    keyed.erase(std::unique(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
                keyed.end());
    std::vector<PredPtr> out;
    for (auto& k : keyed)
        out.push_back(k.second);
    if (out.empty())
        return is_and ? Pred::truth() : Pred::falsity();
    return is_and ? Pred::conj(std::move(out)) : Pred::disj(std::move(out));
}

} // namespace

PredPtr normalize(const PredPtr& p)
{
    switch (p->kind) {
    case PredKind::True:
    case PredKind::False:
        return p;
    case PredKind::Cmp: {
        const auto& a = p->operands[0];
        const auto& b = p->operands[1];
        if (a->is_const() && b->is_const())
            return Pred::boolean(compare_values(p->cmp, a->value, b->value));
        if (p->cmp == CmpOp::Eq || p->cmp == CmpOp::Ne) {
            int ra = orientation_rank(*a), rb = orientation_rank(*b);
            if (ra > rb || (ra == rb && to_string(*b) < to_string(*a)))
                return Pred::compare(p->cmp, b, a);
        }
        return p;
    }
    case PredKind::Member: {
        const auto& a = p->operands[0];
        if (a->is_const()) {
            if (p->member_sort)
                return Pred::boolean(p->member_sort->contains(a->value));
            return Pred::boolean(std::find(p->members.begin(), p->members.end(), a->value) != p->members.end());
        }
        if (p->member_sort)
            return p;
        if (p->members.empty())
            return Pred::falsity();
        std::vector<std::pair<std::string, Value>> keyed;
        for (const auto& v : p->members)
            keyed.emplace_back(v.to_string(), v);
        std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        keyed.erase(std::unique(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first == y.first; }),
                    keyed.end());
        std::vector<Value> ms;
        for (auto& k : keyed)
            ms.push_back(k.second);
        if (ms == p->members)
            return p;
        return Pred::member(a, std::move(ms));
    }
    case PredKind::And:
    case PredKind::Or:
        return normalize_nary(*p);
    case PredKind::Not: {
        auto c = normalize(p->children[0]);
        if (c->kind == PredKind::True)
            return Pred::falsity();
        if (c->kind == PredKind::False)
            return Pred::truth();
        if (c->kind == PredKind::Not)
            return c->children[0];
        return c == p->children[0] ? p : Pred::negation(c);
    }
    case PredKind::Implies: {
        auto a = normalize(p->children[0]);
        auto b = normalize(p->children[1]);
        if (a->kind == PredKind::False || b->kind == PredKind::True)
            return Pred::truth();
        if (a->kind == PredKind::True)
            return b;
        return Pred::implies(a, b);
    }
    case PredKind::Exists: {
        auto body = normalize(p->children[0]);
        if (body->kind == PredKind::True || body->kind == PredKind::False)
            return body;
        auto fv = free_vars(*body);
        std::vector<std::pair<std::string, ExprPtr>> used;
        for (const auto& b : p->bound)
            if (fv.count(b->name))
                used.emplace_back(b->name.str(), b);
        std::sort(used.begin(), used.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        used.erase(std::unique(used.begin(), used.end(), [](const auto& x, const auto& y) { return x.first == y.first; }),
                   used.end());
        std::vector<ExprPtr> vars;
        for (auto& u : used)
            vars.push_back(u.second);
        return Pred::exists(std::move(vars), body);
    }
    }
    return p;
}

} // namespace devs_scc
