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
#include "devs_scc/reader.hpp"

#include <algorithm>
#include <cctype>

namespace devs_scc {

namespace {

bool ident_start(unsigned char c)
{
    return std::isalpha(c) || c == '_';
}

bool ident_char(unsigned char c)
{
    return std::isalnum(c) || c == '_' || c == '\'';
}

struct Mapped {
    std::string_view utf8;
    std::string_view ascii;
    TokKind kind;
};

constexpr Mapped kUnicode[] = {
    {"\xE2\x88\xA7", "&", TokKind::Punct},         // and
    {"\xE2\x88\xA8", "\\/", TokKind::Punct},       // or
    {"\xC2\xAC", "~", TokKind::Punct},             // not
    {"\xE2\x87\x92", "=>", TokKind::Punct},        // implies
    {"\xE2\x89\xA4", "<=", TokKind::Punct},
    {"\xE2\x89\xA5", ">=", TokKind::Punct},
    {"\xE2\x89\xA0", "!=", TokKind::Punct},
    {"\xE2\x86\x92", "->", TokKind::Punct},
    {"\xE2\x88\x9E", "infinity", TokKind::Ident},
    {"\xCF\x84", "tau", TokKind::Ident},
};

constexpr std::string_view kPuncts[] = {"..", "->", "=>", "<=", ">=", "!=", "\\/", "/\\", "(", ")", "{", "}",
                                        "[",  "]",  ",",  ";",  ":",  ".",  "=",  "<",  ">",  "+",  "-",  "*",
                                        "/",  "&",  "|",  "~",  "@",  "#"};

} // namespace

std::vector<Token> tokenize(std::string_view text)
{
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto bump = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            // count UTF-8 lead bytes only
            if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80)
                ++col;
            if (text[i] == '\n') {
                ++line;
                col = 1;
            }
            ++i;
        }
    };
    while (i < text.size()) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (std::isspace(c)) {
            bump(1);
            continue;
        }
        if (text.substr(i, 2) == "--" && !(text.substr(i, 3) == "-->")) {
            while (i < text.size() && text[i] != '\n')
                bump(1);
            continue;
        }
        SourcePos pos{line, col};
        if (ident_start(c)) {
            std::size_t j = i;
            while (j < text.size() && ident_char(static_cast<unsigned char>(text[j])))
                ++j;
            out.push_back({TokKind::Ident, std::string(text.substr(i, j - i)), pos});
            bump(j - i);
            continue;
        }
        if (std::isdigit(c)) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
                ++j;
            bool after_dot = !out.empty() && out.back().kind == TokKind::Punct && out.back().text == ".";
            if (!after_dot && j + 1 < text.size() && text[j] == '.' && std::isdigit(static_cast<unsigned char>(text[j + 1]))) {
                ++j;
                while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
                    ++j;
            }
            out.push_back({TokKind::Number, std::string(text.substr(i, j - i)), pos});
            bump(j - i);
            continue;
        }
        if (c == '"') {
            std::size_t j = i + 1;
            while (j < text.size() && text[j] != '"' && text[j] != '\n')
                ++j;
            if (j >= text.size() || text[j] != '"')
                throw ParseError(pos, "unterminated string");
            out.push_back({TokKind::String, std::string(text.substr(i + 1, j - i - 1)), pos});
            bump(j + 1 - i);
            continue;
        }
        bool matched = false;
        for (const auto& m : kUnicode) {
            if (text.substr(i, m.utf8.size()) == m.utf8) {
                out.push_back({m.kind, std::string(m.ascii), pos});
                bump(m.utf8.size());
                matched = true;
                break;
            }
        }
        if (matched)
            continue;
        for (auto p : kPuncts) {
            if (text.substr(i, p.size()) == p) {
                out.push_back({TokKind::Punct, p == "/\\" ? std::string("&") : std::string(p), pos});
                bump(p.size());
                matched = true;
                break;
            }
        }
        if (!matched)
            throw ParseError(pos, std::string("unexpected character '") + static_cast<char>(c) + "'");
    }
    out.push_back({TokKind::End, "", SourcePos{line, col}});
    return out;
}

Reader::Reader(std::string_view text) : toks_(tokenize(text)) {}

const Token& Reader::peek(std::size_t ahead) const
{
    std::size_t k = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[k];
}

bool Reader::is(std::string_view s, std::size_t ahead) const
{
    const Token& t = peek(ahead);
    return (t.kind == TokKind::Punct || t.kind == TokKind::Ident) && t.text == s;
}

bool Reader::accept(std::string_view s)
{
    if (!is(s))
        return false;
    ++pos_;
    return true;
}

void Reader::expect(std::string_view s)
{
    if (!accept(s))
        fail("expected '" + std::string(s) + "'");
}

Token Reader::advance()
{
    Token t = peek();
    if (pos_ < toks_.size() - 1)
        ++pos_;
    return t;
}

void Reader::fail(const std::string& msg) const
{
    fail_at(peek(), msg);
}

void Reader::fail_at(const Token& t, const std::string& msg) const
{
    std::string found = t.kind == TokKind::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.pos, msg + ", found " + found);
}

Symbol Reader::ident(const char* what)
{
    if (peek().kind != TokKind::Ident)
        fail(std::string("expected ") + what);
    return Symbol(advance().text);
}

std::string Reader::string_literal()
{
    if (peek().kind != TokKind::String)
        fail("expected string");
    return advance().text;
}

std::int64_t Reader::signed_integer()
{
    bool neg = accept("-");
    if (peek().kind != TokKind::Number || peek().text.find('.') != std::string::npos)
        fail("expected integer");
    std::int64_t v = std::stoll(advance().text);
    return neg ? -v : v;
}

// ---- sorts -----------------------------------------------------------------

SortPtr Reader::sort(const Scope& s)
{
    SortPtr base = sort_alt(s);
    while (accept("|")) {
        const Token& t = peek();
        if (t.kind != TokKind::Ident)
            fail("expected literal after '|'");
        base = Sort::extended(base, Symbol(advance().text));
    }
    return base;
}

SortPtr Reader::sort_alt(const Scope& s)
{
    if (accept("nat"))
        return Sort::nat();
    if (accept("int"))
        return Sort::integer();
    if (accept("rational"))
        return Sort::rational();
    if (accept("time"))
        return Sort::time();
    if (accept("enum")) {
        expect("{");
        std::vector<Value> lits;
        do {
            const Token& t = peek();
            Value v;
            if (t.kind == TokKind::Ident)
                v = Value::literal(advance().text);
            else if (t.kind == TokKind::Number || t.text == "-")
                v = Value::integer(signed_integer());
            else
                fail("expected enum literal");
            if (std::find(lits.begin(), lits.end(), v) != lits.end())
                fail_at(toks_[pos_ - 1], "duplicate enum literal " + v.to_string());
            lits.push_back(v);
        } while (accept(","));
        expect("}");
        return Sort::enumeration(std::move(lits));
    }
    if (accept("(")) {
        std::vector<SortPtr> items;
        items.push_back(sort(s));
        while (accept(","))
            items.push_back(sort(s));
        expect(")");
        if (items.size() == 1)
            return items[0];
        return Sort::tuple(std::move(items));
    }
    if (peek().kind == TokKind::Ident) {
        auto it = s.aliases.find(Symbol(peek().text));
        if (it != s.aliases.end()) {
            advance();
            return it->second;
        }
    }
    fail("expected sort");
}

// ---- predicates --------------------------------------------------------------

PredPtr Reader::predicate(const Scope& s)
{
    return implies(s);
}

PredPtr Reader::implies(const Scope& s)
{
    PredPtr a = disjunction(s);
    if (accept("=>"))
        return Pred::implies(a, implies(s));
    return a;
}

PredPtr Reader::disjunction(const Scope& s)
{
    std::vector<PredPtr> cs{conjunction(s)};
    while (accept("\\/"))
        cs.push_back(conjunction(s));
    return cs.size() == 1 ? cs[0] : Pred::disj(std::move(cs));
}

PredPtr Reader::conjunction(const Scope& s)
{
    std::vector<PredPtr> cs{unary_pred(s)};
    while (accept("&"))
        cs.push_back(unary_pred(s));
    return cs.size() == 1 ? cs[0] : Pred::conj(std::move(cs));
}

namespace {

bool continues_expression(const Token& t)
{
    static constexpr std::string_view ops[] = {"+", "-", "*", "/", ".", "<", "<=", ">", ">=", "=", "!=", "in", "div"};
    if (t.kind != TokKind::Punct && t.kind != TokKind::Ident)
        return false;
    return std::find(std::begin(ops), std::end(ops), t.text) != std::end(ops);
}

} // namespace

PredPtr Reader::unary_pred(const Scope& s)
{
    if (accept("~"))
        return Pred::negation(unary_pred(s));
    if (accept("true"))
        return Pred::truth();
    if (accept("false"))
        return Pred::falsity();
    if (is("exists") && is("(", 1)) {
        advance();
        expect("(");
        std::vector<ExprPtr> vars;
        do {
            Token t = peek();
            ident("bound variable");
            ExprPtr v = resolve(t, s);
            if (!v->is_var())
                fail_at(t, "bound name " + t.text + " is not a variable");
            vars.push_back(v);
        } while (accept(","));
        expect(")");
        expect("(");
        PredPtr body = predicate(s);
        expect(")");
        return Pred::exists(std::move(vars), body);
    }
    if (is("(")) {
        std::size_t m = mark();
        std::optional<ParseError> first;
        try {
            advance();
            PredPtr p = predicate(s);
            expect(")");
            if (!continues_expression(peek()))
                return p;
        } catch (const ParseError& e) {
            first = e;
        }
        std::size_t after_pred = pos_;
        reset(m);
        try {
            return atom(s);
        } catch (const ParseError& e) {
            if (first && (first->pos().line > e.pos().line
                          || (first->pos().line == e.pos().line && first->pos().col > e.pos().col)))
                throw *first;
            (void)after_pred;
            throw;
        }
    }
    return atom(s);
}

PredPtr Reader::atom(const Scope& s)
{
    ExprPtr a = expression(s);
    Token op = peek();
    try {
        if (accept("in")) {
            if (accept("{")) {
                std::vector<Value> set;
                if (!is("}")) {
                    do
                        set.push_back(value(s));
                    while (accept(","));
                }
                expect("}");
                return Pred::member(a, std::move(set));
            }
            return Pred::member_of_sort(a, sort(s));
        }
        static const std::pair<std::string_view, CmpOp> cmps[] = {{"=", CmpOp::Eq}, {"!=", CmpOp::Ne},
                                                                 {"<", CmpOp::Lt}, {"<=", CmpOp::Le},
                                                                 {">", CmpOp::Gt}, {">=", CmpOp::Ge}};
        for (const auto& [text, cmp] : cmps) {
            if (accept(text)) {
                ExprPtr b = expression(s);
                return Pred::compare(cmp, a, b);
            }
        }
    } catch (const SortError& e) {
        throw ParseError(op.pos, e.what());
    }
    fail("expected comparison operator");
}

// ---- expressions -------------------------------------------------------------

ExprPtr Reader::expression(const Scope& s)
{
    return additive(s);
}

ExprPtr Reader::additive(const Scope& s)
{
    ExprPtr a = multiplicative(s);
    while (is("+") || is("-")) {
        Token op = advance();
        ExprPtr b = multiplicative(s);
        try {
            a = Expr::binary(op.text == "+" ? ExprKind::Add : ExprKind::Sub, a, b);
        } catch (const SortError& e) {
            throw ParseError(op.pos, e.what());
        }
    }
    return a;
}

ExprPtr Reader::multiplicative(const Scope& s)
{
    ExprPtr a = unary_expr(s);
    while (is("*") || is("/") || is("div")) {
        Token op = advance();
        ExprPtr b = unary_expr(s);
        ExprKind k = op.text == "*" ? ExprKind::Mul : op.text == "/" ? ExprKind::Div : ExprKind::FloorDiv;
        try {
            a = Expr::binary(k, a, b);
        } catch (const SortError& e) {
            throw ParseError(op.pos, e.what());
        }
    }
    return a;
}

ExprPtr Reader::unary_expr(const Scope& s)
{
    if (is("-")) {
        Token op = advance();
        ExprPtr a = unary_expr(s);
        try {
            return Expr::neg(a);
        } catch (const SortError& e) {
            throw ParseError(op.pos, e.what());
        }
    }
    return postfix(s);
}

ExprPtr Reader::postfix(const Scope& s)
{
    ExprPtr a = primary(s);
    while (is(".") && peek(1).kind == TokKind::Number) {
        Token dot = advance();
        Token n = advance();
        try {
            a = Expr::proj(a, std::stoul(n.text));
        } catch (const SortError& e) {
            throw ParseError(dot.pos, e.what());
        }
    }
    return a;
}

std::vector<ExprPtr> Reader::args(const Scope& s)
{
    expect("(");
    std::vector<ExprPtr> out;
    if (!is(")")) {
        do
            out.push_back(expression(s));
        while (accept(","));
    }
    expect(")");
    return out;
}

namespace {

Value parse_number(const std::string& text)
{
    auto dot = text.find('.');
    if (dot == std::string::npos)
        return Value::integer(std::stoll(text));
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i)
        den *= 10;
    std::int64_t num = std::stoll(whole + frac);
    return Value::rational(num, den);
}

} // namespace

ExprPtr Reader::primary(const Scope& s)
{
    const Token t = peek();
    if (t.kind == TokKind::Number) {
        advance();
        return Expr::constant(parse_number(t.text));
    }
    if (accept("(")) {
        std::vector<ExprPtr> items{expression(s)};
        while (accept(","))
            items.push_back(expression(s));
        expect(")");
        if (items.size() == 1)
            return items[0];
        return Expr::tuple(std::move(items));
    }
    if (t.kind != TokKind::Ident)
        fail("expected expression");
    advance();
    if (t.text == "infinity")
        return Expr::constant(Value::infinity());
    if (t.text == "tau")
        return Expr::constant(Value::tau());
    if ((t.text == "min" || t.text == "max") && is("(")) {
        auto as = args(s);
        if (as.empty())
            fail_at(t, t.text + " needs at least one argument");
        try {
            return Expr::minmax(t.text == "min" ? ExprKind::Min : ExprKind::Max, std::move(as));
        } catch (const SortError& e) {
            throw ParseError(t.pos, e.what());
        }
    }
    if (is("(")) {
        std::shared_ptr<const OpDef> op;
        auto it = s.ops.find(Symbol(t.text));
        if (it != s.ops.end())
            op = it->second;
        if (!op)
            fail_at(t, "unknown operator " + t.text);
        auto as = args(s);
        try {
            return Expr::call(op, std::move(as));
        } catch (const SortError& e) {
            throw ParseError(t.pos, e.what());
        }
    }
    return resolve(t, s);
}

ExprPtr Reader::resolve(const Token& t, const Scope& s)
{
    Symbol name(t.text);
    for (auto it = s.locals.rbegin(); it != s.locals.rend(); ++it)
        if (it->first == name)
            return it->second;
    if (s.model) {
        const Model& m = *s.model;
        if (s.allow_state) {
            if (auto i = m.state_index(name))
                return m.state_expr(*i);
            if (const StateGroup* g = m.group(name)) {
                std::vector<ExprPtr> items;
                for (std::size_t k = 0; k < g->count; ++k)
                    items.push_back(m.state_expr(g->first + k));
                return Expr::group(name, std::move(items));
            }
        }
        if (t.text == "x" && s.allow_x)
            return m.input_var();
        if (t.text == "e" && s.allow_e)
            return m.elapsed_var();
        if (t.text == "t" && s.allow_t)
            return m.time_var();
        if (const Constant* c = m.constant(name))
            return Expr::var(name, VarRole::Const, c->sort);
    } else {
        if (t.text == "t" && s.allow_t)
            return Expr::var(name, VarRole::Time, Sort::time());
    }
    if (std::find(s.literals.begin(), s.literals.end(), name) != s.literals.end())
        return Expr::constant(Value::literal(name));
    switch (s.unknown) {
    case Scope::Unknown::ConstVar:
        return Expr::var(name, VarRole::Const, s.unknown_sort ? s.unknown_sort : Sort::time());
    case Scope::Unknown::Literal:
        return Expr::constant(Value::literal(name));
    case Scope::Unknown::Param:
        return Expr::var(name, VarRole::Param, s.unknown_sort ? s.unknown_sort : Sort::rational());
    case Scope::Unknown::Error:
        break;
    }
    throw ParseError(t.pos, "unbound variable " + t.text);
}

Value Reader::value(const Scope& s)
{
    Token t = peek();
    Scope closed = s;
    closed.allow_state = false;
    closed.allow_x = closed.allow_e = closed.allow_t = false;
    if (closed.unknown == Scope::Unknown::Error)
        closed.unknown = Scope::Unknown::Literal;
    ExprPtr e = expression(closed);
    if (!e->is_const())
        fail_at(t, "expected a constant value");
    return e->value;
}

std::vector<Value> Reader::value_set(const Scope& s)
{
    expect("{");
    std::vector<Value> out;
    if (!is("}")) {
        do
            out.push_back(value(s));
        while (accept(","));
    }
    expect("}");
    return out;
}

} // namespace devs_scc
