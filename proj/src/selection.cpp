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
#include "devs_scc/selection.hpp"

#include "devs_scc/parser.hpp"
#include "devs_scc/reader.hpp"

namespace devs_scc {

namespace {

StandardPartition partition_block(Reader& r)
{
    StandardPartition sp;
    sp.name = r.string_literal();
    Scope scope;
    scope.allow_state = false;
    r.expect("(");
    do {
        Symbol p = r.ident("parameter");
        for (const auto& q : sp.params)
            if (q->name == p)
                r.fail("duplicate parameter " + p.str());
        auto v = Expr::var(p, VarRole::Param, Sort::rational());
        sp.params.push_back(v);
        scope.locals.emplace_back(p, v);
    } while (r.accept(","));
    r.expect(")");
    r.expect("{");
    while (!r.accept("}")) {
        sp.cells.push_back(r.predicate(scope));
        r.expect(";");
    }
    if (sp.cells.empty())
        r.fail("partition " + sp.name + " has no cells");
    return sp;
}

OccurrenceRef occurrence(Reader& r)
{
    OccurrenceRef o;
    auto fn_tok = r.peek();
    auto fn = fn_from_name(r.ident("function").str());
    if (!fn)
        r.fail_at(fn_tok, "expected dext, dint or lambda");
    o.fn = *fn;
    r.expect(".");
    o.case_id = static_cast<int>(r.signed_integer());
    o.op = r.string_literal();
    if (r.accept("#")) {
        auto n = r.signed_integer();
        if (n < 1)
            r.fail("occurrence index starts at 1");
        o.nth = static_cast<std::size_t>(n);
    }
    return o;
}

} // namespace

std::vector<StandardPartition> parse_partitions(std::string_view text)
{
    Reader r(text);
    std::vector<StandardPartition> out;
    while (!r.at_end()) {
        if (!r.accept("partition"))
            r.fail("expected 'partition'");
        out.push_back(partition_block(r));
    }
    return out;
}

CriteriaFile parse_criteria(std::string_view text, const Model& m)
{
    Reader r(text);
    CriteriaFile f;
    Scope pred_scope = model_scope(m, true, true);
    Scope time_scope = model_scope(m, false, false);
    time_scope.allow_state = false;
    while (!r.at_end()) {
        if (r.accept("partition")) {
            f.partitions.push_back(partition_block(r));
            continue;
        }
        CriterionSelection s;
        if (r.accept("cases")) {
            s.kind = CriterionSelection::Kind::Cases;
            s.include_otherwise = r.accept("otherwise");
        } else if (r.accept("extensional")) {
            s.kind = CriterionSelection::Kind::Extensional;
            do
                s.targets.push_back(r.ident("variable"));
            while (r.accept(","));
        } else if (r.accept("intentional")) {
            s.kind = CriterionSelection::Kind::Intentional;
            s.comprehension = r.predicate(pred_scope);
        } else if (r.accept("standard")) {
            s.kind = CriterionSelection::Kind::Standard;
            s.occurrence = occurrence(r);
            if (r.accept("using"))
                s.table = r.string_literal();
        } else if (r.accept("time")) {
            s.kind = CriterionSelection::Kind::Time;
            do {
                if (r.accept("[")) {
                    auto a = r.expression(time_scope);
                    r.expect(",");
                    auto b = r.expression(time_scope);
                    r.expect("]");
                    s.time.intervals.emplace_back(a, b);
                } else {
                    s.time.points.push_back(r.expression(time_scope));
                }
            } while (r.accept(","));
        } else {
            r.fail("expected a criterion (cases, extensional, intentional, standard, time) or partition");
        }
        r.expect(";");
        f.selections.push_back(std::move(s));
    }
    return f;
}

CriterionResult apply_selection(const CriterionSelection& sel, const Model& m, const Domains& d,
                                const PartitionRegistry& registry)
{
    switch (sel.kind) {
    case CriterionSelection::Kind::Cases:
        return cases_criterion(m, d, sel.include_otherwise);
    case CriterionSelection::Kind::Extensional:
        return extensional_criterion(m, sel.targets);
    case CriterionSelection::Kind::Intentional:
        return intentional_criterion(m, d, sel.comprehension);
    case CriterionSelection::Kind::Standard: {
        const std::string& name = sel.table.empty() ? sel.occurrence.op : sel.table;
        const auto* table = registry.find(name);
        if (!table)
            throw CriterionError("no standard partition named " + name);
        return standard_partition_criterion(m, d, sel.occurrence, *table);
    }
    case CriterionSelection::Kind::Time:
        return time_partition_criterion(m, d, sel.time);
    }
    throw CriterionError("unknown criterion");
}

const Scc* Catalog::find(int id) const
{
    for (const auto& s : sccs)
        if (s.id == id)
            return &s;
    return nullptr;
}

int Catalog::next_id() const
{
    int n = 0;
    for (const auto& s : sccs)
        n = std::max(n, s.id);
    return n + 1;
}

Catalog build_catalog(std::vector<CriterionResult> results)
{
    Catalog c;
    int next = 1;
    for (auto& r : results) {
        for (auto& s : r.sccs) {
            s.id = next++;
            c.sccs.push_back(s);
        }
        c.applications.push_back(std::move(r));
    }
    return c;
}

} // namespace devs_scc
