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
#include "devs_scc/parser.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace devs_scc {

std::string Diagnostic::to_string(std::string_view path) const
{
    std::string out;
    if (!path.empty())
        out += std::string(path) + ":";
    out += std::to_string(pos.line) + ":" + std::to_string(pos.col) + ": ";
    out += severity == Severity::Error ? "error: " : "warning: ";
    return out + message;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

namespace {

void collect_literals(const Sort& s, std::vector<Symbol>& out)
{
    auto add = [&](Symbol n) {
        if (std::find(out.begin(), out.end(), n) == out.end())
            out.push_back(n);
    };
    switch (s.kind()) {
    case Sort::Kind::Enum:
        for (const auto& v : s.literals())
            if (v.is_literal())
                add(v.literal_name());
        break;
    case Sort::Kind::Extended:
        collect_literals(*s.base(), out);
        add(s.bottom());
        break;
    case Sort::Kind::Tuple:
        for (const auto& i : s.items())
            collect_literals(*i, out);
        break;
    default:
        break;
    }
}

class ModelBuilder {
public:
    explicit ModelBuilder(Reader& r) : r_(r) {}

    Model run()
    {
        r_.expect("model");
        m_.name = r_.ident("model name");
        r_.expect("{");
        while (!r_.accept("}")) {
            if (r_.at_end())
                r_.fail("expected '}'");
            item();
        }
        if (!r_.at_end())
            r_.fail("expected end of input");
        return std::move(m_);
    }

private:
    Scope base_scope() const
    {
        Scope s;
        s.model = &m_;
        s.ops = ops_;
        s.aliases = aliases_;
        s.literals = literals_;
        return s;
    }

    SortPtr read_sort()
    {
        SortPtr s = r_.sort(base_scope());
        collect_literals(*s, literals_);
        return s;
    }

    void item()
    {
        const Token t = r_.peek();
        if (r_.accept("sort")) {
            Symbol name = r_.ident("sort name");
            if (aliases_.count(name))
                r_.fail_at(t, "duplicate sort " + name.str());
            r_.expect("=");
            SortPtr s = read_sort();
            r_.expect(";");
            aliases_[name] = s;
            m_.aliases.push_back({name, s});
        } else if (r_.accept("const")) {
            Token nt = r_.peek();
            Symbol name = r_.ident("constant name");
            if (m_.constant(name))
                r_.fail_at(nt, "duplicate constant " + name.str());
            r_.expect(":");
            SortPtr s = read_sort();
            std::optional<Value> v;
            if (r_.accept("=")) {
                Token vt = r_.peek();
                v = r_.value(base_scope());
                if (!s->contains(*v))
                    r_.fail_at(vt, "value " + v->to_string() + " is not in " + s->to_string());
            }
            r_.expect(";");
            m_.constants.push_back({name, s, v});
        } else if (r_.accept("state")) {
            if (state_seen_)
                r_.fail_at(t, "duplicate state block");
            state_seen_ = true;
            r_.expect("{");
            while (!r_.accept("}")) {
                Token nt = r_.peek();
                Symbol name = r_.ident("state variable");
                if (r_.accept("{")) {
                    StateGroup g{name, m_.state.size(), 0};
                    check_fresh(nt, name);
                    while (!r_.accept("}")) {
                        state_var();
                        ++g.count;
                    }
                    if (g.count == 0)
                        r_.fail_at(nt, "empty group " + name.str());
                    m_.groups.push_back(g);
                } else {
                    state_var(nt, name);
                }
            }
        } else if (r_.accept("input")) {
            if (m_.input)
                r_.fail_at(t, "duplicate input declaration");
            m_.input = read_sort();
            r_.expect(";");
        } else if (r_.accept("output")) {
            if (m_.output)
                r_.fail_at(t, "duplicate output declaration");
            m_.output = read_sort();
            r_.expect(";");
        } else if (r_.accept("op")) {
            op_def(t);
        } else if (r_.accept("ta")) {
            if (m_.ta)
                r_.fail_at(t, "duplicate ta");
            header(1);
            r_.expect("=");
            m_.ta = r_.expression(base_scope());
            r_.expect(";");
        } else if (r_.is("dext") || r_.is("dint") || r_.is("lambda")) {
            FnKind k = *fn_from_name(r_.advance().text);
            if (done_[static_cast<int>(k)])
                r_.fail_at(t, std::string("duplicate ") + fn_name(k));
            done_[static_cast<int>(k)] = true;
            Scope s = base_scope();
            if (k == FnKind::Dext) {
                if (!m_.input)
                    r_.fail_at(t, "input must be declared before dext");
                r_.expect("(");
                r_.ident();
                r_.expect(",");
                if (!r_.is("e"))
                    r_.fail("the elapsed time parameter must be named e");
                r_.advance();
                r_.expect(",");
                if (!r_.is("x"))
                    r_.fail("the input parameter must be named x");
                r_.advance();
                r_.expect(")");
                s.allow_e = s.allow_x = true;
            } else {
                header(1);
            }
            block(s, m_.function(k).lets, m_.function(k).cases);
        } else {
            r_.fail("expected model item");
        }
    }

    void header(int n)
    {
        r_.expect("(");
        for (int i = 0; i < n; ++i) {
            if (i)
                r_.expect(",");
            r_.ident();
        }
        r_.expect(")");
    }

    void check_fresh(const Token& t, Symbol name)
    {
        if (m_.state_index(name) || m_.group(name))
            r_.fail_at(t, "duplicate state name " + name.str());
    }

    void state_var()
    {
        Token nt = r_.peek();
        Symbol name = r_.ident("state variable");
        state_var(nt, name);
    }

    void state_var(const Token& nt, Symbol name)
    {
        check_fresh(nt, name);
        r_.expect(":");
        SortPtr s = read_sort();
        bool timed = false;
        if (r_.accept("@")) {
            if (!r_.accept("time"))
                r_.fail("expected 'time' after '@'");
            if (s->kind() != Sort::Kind::Time)
                r_.fail_at(nt, "@time variable " + name.str() + " must have sort time");
            timed = true;
        }
        r_.expect(";");
        m_.state.push_back({name, s, timed});
    }

    void op_def(const Token& t)
    {
        auto op = std::make_shared<OpDef>();
        op->name = r_.ident("operator name");
        if (ops_.count(op->name) || op->name.str() == "min" || op->name.str() == "max")
            r_.fail_at(t, "duplicate operator " + op->name.str());
        Scope s = base_scope();
        s.allow_state = false;
        r_.expect("(");
        if (!r_.is(")")) {
            do {
                Symbol p = r_.ident("parameter");
                r_.expect(":");
                SortPtr ps = read_sort();
                op->params.push_back({p, ps});
                s.locals.emplace_back(p, Expr::var(p, VarRole::Param, ps));
            } while (r_.accept(","));
        }
        r_.expect(")");
        r_.expect(":");
        op->result = read_sort();
        s.literals = literals_;
        if (r_.accept("=")) {
            op->simple = true;
            GuardedCase c;
            c.id = 1;
            c.otherwise = true;
            c.guard = Pred::truth();
            c.result = r_.expression(s);
            r_.expect(";");
            op->cases.push_back(c);
        } else {
            block(s, op->lets, op->cases);
            if (op->cases.empty())
                r_.fail_at(t, "operator " + op->name.str() + " has no cases");
        }
        ops_[op->name] = op;
        m_.ops.push_back(op);
    }

    void block(Scope s, std::vector<LetDef>& lets, std::vector<GuardedCase>& cases)
    {
        r_.expect("{");
        while (r_.accept("let")) {
            Token nt = r_.peek();
            Symbol name = r_.ident("let name");
            for (const auto& l : lets)
                if (l.name == name)
                    r_.fail_at(nt, "duplicate let " + name.str());
            r_.expect("=");
            ExprPtr e = r_.expression(s);
            r_.expect(";");
            lets.push_back({name, e});
            s.locals.emplace_back(name, Expr::var(name, VarRole::Local, e->sort));
        }
        int id = 1;
        bool otherwise = false;
        while (!r_.accept("}")) {
            Token ct = r_.peek();
            if (otherwise)
                r_.fail("no case may follow otherwise");
            GuardedCase c;
            c.id = id++;
            if (r_.accept("otherwise")) {
                otherwise = true;
                c.otherwise = true;
                c.guard = Pred::truth();
            } else {
                if (!r_.accept("case"))
                    r_.fail("expected 'case', 'otherwise' or '}'");
                c.guard = r_.predicate(s);
            }
            r_.expect("->");
            c.result = r_.expression(s);
            r_.expect(";");
            cases.push_back(c);
        }
    }

    Reader& r_;
    Model m_;
    std::map<Symbol, std::shared_ptr<const OpDef>> ops_;
    std::map<Symbol, SortPtr> aliases_;
    std::vector<Symbol> literals_;
    bool state_seen_ = false;
    bool done_[3] = {false, false, false};
};

// ---- rendering ---------------------------------------------------------------

class Renderer {
public:
    explicit Renderer(const Model& m) : m_(m) {}

    std::string run()
    {
        out_ << "model " << m_.name.str() << " {\n";
        for (const auto& a : m_.aliases)
            out_ << "  sort " << a.name.str() << " = " << a.sort->to_string() << ";\n";
        if (!m_.aliases.empty())
            out_ << "\n";
        for (const auto& c : m_.constants) {
            out_ << "  const " << c.name.str() << " : " << sort(*c.sort);
            if (c.value)
                out_ << " = " << c.value->to_string();
            out_ << ";\n";
        }
        if (!m_.constants.empty())
            out_ << "\n";
        out_ << "  state {\n";
        for (std::size_t i = 0; i < m_.state.size(); ++i) {
            const StateGroup* g = group_starting(i);
            if (g) {
                out_ << "    " << g->name.str() << " {\n";
                for (std::size_t k = 0; k < g->count; ++k)
                    state_var(i + k, "      ");
                out_ << "    }\n";
                i += g->count - 1;
                continue;
            }
            state_var(i, "    ");
        }
        out_ << "  }\n\n";
        if (m_.input)
            out_ << "  input " << sort(*m_.input) << ";\n";
        if (m_.output)
            out_ << "  output " << sort(*m_.output) << ";\n";
        out_ << "\n";
        for (const auto& op : m_.ops) {
            out_ << "  op " << op->name.str() << "(";
            for (std::size_t i = 0; i < op->params.size(); ++i) {
                if (i)
                    out_ << ", ";
                out_ << op->params[i].name.str() << " : " << sort(*op->params[i].sort);
            }
            out_ << ") : " << sort(*op->result);
            if (op->simple) {
                out_ << " = " << to_string(*op->cases[0].result) << ";\n\n";
                continue;
            }
            out_ << " ";
            block(op->lets, op->cases);
            out_ << "\n";
        }
        if (m_.ta)
            out_ << "  ta(s) = " << to_string(*m_.ta) << ";\n\n";
        out_ << "  dext(s, e, x) ";
        block(m_.dext.lets, m_.dext.cases);
        out_ << "\n  dint(s) ";
        block(m_.dint.lets, m_.dint.cases);
        out_ << "\n  lambda(s) ";
        block(m_.lambda.lets, m_.lambda.cases);
        out_ << "}\n";
        return out_.str();
    }

private:
    const StateGroup* group_starting(std::size_t i) const
    {
        for (const auto& g : m_.groups)
            if (g.first == i)
                return &g;
        return nullptr;
    }

    std::string sort(const Sort& s) const
    {
        for (const auto& a : m_.aliases)
            if (*a.sort == s)
                return a.name.str();
        return s.to_string();
    }

    void state_var(std::size_t i, const char* indent)
    {
        const auto& v = m_.state[i];
        out_ << indent << v.name.str() << " : " << sort(*v.sort);
        if (v.time_var)
            out_ << " @time";
        out_ << ";\n";
    }

    void block(const std::vector<LetDef>& lets, const std::vector<GuardedCase>& cases)
    {
        out_ << "{\n";
        for (const auto& l : lets)
            out_ << "    let " << l.name.str() << " = " << to_string(*l.expr) << ";\n";
        for (const auto& c : cases) {
            if (c.otherwise)
                out_ << "    otherwise -> ";
            else
                out_ << "    case " << to_string(*c.guard) << "\n      -> ";
            out_ << to_string(*c.result) << ";\n";
        }
        out_ << "  }\n";
    }

    const Model& m_;
    std::ostringstream out_;
};

} // namespace

ModelParse parse_model(std::string_view text)
{
    ModelParse out;
    try {
        Reader r(text);
        ModelBuilder b(r);
        out.model = b.run();
    } catch (const ParseError& e) {
        out.diagnostics.push_back({Diagnostic::Severity::Error, e.pos(), e.bare_message()});
    } catch (const SortError& e) {
        out.diagnostics.push_back({Diagnostic::Severity::Error, SourcePos{}, e.what()});
    }
    return out;
}

Model load_model(std::string_view text)
{
    auto r = parse_model(text);
    if (!r.model)
        throw ParseError(r.diagnostics.front().pos, r.diagnostics.front().message);
    return std::move(*r.model);
}

std::string render_model(const Model& m)
{
    return Renderer(m).run();
}

Scope model_scope(const Model& m, bool with_input, bool with_time)
{
    Scope s;
    s.model = &m;
    s.allow_x = with_input;
    s.allow_t = with_time;
    for (const auto& op : m.ops)
        s.ops[op->name] = op;
    for (const auto& a : m.aliases) {
        s.aliases[a.name] = a.sort;
        collect_literals(*a.sort, s.literals);
    }
    for (const auto& c : m.constants)
        collect_literals(*c.sort, s.literals);
    for (const auto& v : m.state)
        collect_literals(*v.sort, s.literals);
    if (m.input)
        collect_literals(*m.input, s.literals);
    if (m.output)
        collect_literals(*m.output, s.literals);
    for (const auto& op : m.ops) {
        for (const auto& p : op->params)
            collect_literals(*p.sort, s.literals);
        collect_literals(*op->result, s.literals);
    }
    return s;
}

PredPtr parse_predicate(std::string_view text, const Scope& scope)
{
    Reader r(text);
    PredPtr p = r.predicate(scope);
    if (!r.at_end())
        r.fail("unexpected trailing input");
    return p;
}

Bounds parse_bounds(std::string_view text)
{
    Bounds b;
    Reader r(text);
    Scope closed;
    closed.unknown = Scope::Unknown::Literal;
    Scope timeexpr;
    timeexpr.unknown = Scope::Unknown::ConstVar;
    timeexpr.unknown_sort = Sort::time();
    auto range = [&]() {
        IntRange ir;
        ir.lo = r.signed_integer();
        r.expect("..");
        ir.hi = r.signed_integer();
        if (ir.lo > ir.hi)
            r.fail("empty range");
        return ir;
    };
    while (!r.at_end()) {
        if (r.accept("nat")) {
            if (r.accept("=")) {
                b.nat = range();
                if (b.nat.lo < 0)
                    r.fail("nat range must be nonnegative");
            } else {
                Symbol v = r.ident("variable");
                r.expect("=");
                b.nat_override[v] = range();
            }
        } else if (r.accept("int")) {
            r.expect("=");
            b.integer = range();
        } else if (r.accept("rational")) {
            r.expect("=");
            b.rational_num = range();
            r.expect("/");
            b.rational_den = r.signed_integer();
            if (b.rational_den <= 0)
                r.fail("denominator must be positive");
        } else if (r.accept("const")) {
            Symbol name = r.ident("constant");
            r.expect("=");
            b.constants[name] = r.value(closed);
        } else if (r.accept("time")) {
            if (!r.accept("samples"))
                r.fail("expected 'samples'");
            r.expect("=");
            r.expect("{");
            do
                b.time_samples.push_back(r.expression(timeexpr));
            while (r.accept(","));
            r.expect("}");
        } else if (r.accept("var")) {
            Symbol name = r.ident("variable");
            r.expect("=");
            b.var_values[name] = r.value_set(closed);
        } else if (r.accept("budget")) {
            r.expect("=");
            auto n = r.signed_integer();
            if (n <= 0)
                r.fail("budget must be positive");
            b.budget = static_cast<std::size_t>(n);
        } else {
            r.fail("expected bounds entry");
        }
        r.expect(";");
    }
    return b;
}

} // namespace devs_scc
