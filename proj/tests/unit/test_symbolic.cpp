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
#include "generators.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace devs_scc;
using namespace devs_scc::testing;

namespace {

bool truth(const PredPtr& p, const Env& env)
{
    return holds(*p, env);
}

ExprPtr ivar(const char* n)
{
    return Expr::var(Symbol(n), VarRole::State, Sort::integer());
}

} // namespace

TEST_SUITE("symbolic")
{
    TEST_CASE("implication with a product yields two clauses")
    {
        auto n = ivar("n"), m = ivar("m");
        auto zero = Expr::constant(Value::integer(0));
        auto p = Pred::implies(Pred::compare(CmpOp::Gt, Expr::binary(ExprKind::Mul, n, m), zero),
                               Pred::compare(CmpOp::Gt, n, m));
        auto clauses = to_dnf(p);
        REQUIRE(clauses.size() == 2);
        CHECK(clauses[0].literals.size() == 1);
        CHECK(clauses[1].literals.size() == 1);

        // truth table over [-3, 3]^2, computed from the arithmetic directly
        auto back = from_dnf(clauses);
        for (int i = -3; i <= 3; ++i)
            for (int j = -3; j <= 3; ++j) {
                Env env;
                env.set(Symbol("n"), Value::integer(i));
                env.set(Symbol("m"), Value::integer(j));
                bool expected = !(i * j > 0) || i > j;
                CHECK(truth(back, env) == expected);
            }
    }

    TEST_CASE("property: DNF is equivalent on 200 generated predicates")
    {
        PredGen gen(20260417);
        auto d = PredGen::domains();
        for (int k = 0; k < 200; ++k) {
            auto p = gen.pred(4);
            auto clauses = to_dnf(p, 1 << 16);
            auto back = from_dnf(clauses);
            for (const auto& c : clauses)
                for (const auto& l : c.literals)
                    CHECK((l->is_atom() || (l->kind == PredKind::Not && l->children[0]->is_atom())));
            bool same = true;
            for_each_point(d, [&](const Env& env) { same = same && truth(p, env) == truth(back, env); });
            CAPTURE(to_string(p));
            CHECK(same);
        }
    }

    TEST_CASE("property: normalize keeps meaning and is idempotent")
    {
        PredGen gen(7);
        auto d = PredGen::domains();
        for (int k = 0; k < 200; ++k) {
            auto p = gen.pred(3);
            auto q = normalize(p);
            CHECK(to_string(normalize(q)) == to_string(q));
            bool same = true;
            for_each_point(d, [&](const Env& env) { same = same && truth(p, env) == truth(q, env); });
            CHECK(same);
        }
    }

    TEST_CASE("property: witnesses satisfy the predicate and Unsat means no point")
    {
        PredGen gen(99);
        auto d = PredGen::domains();
        std::vector<Symbol> order{Symbol("a"), Symbol("b"), Symbol("c")};
        for (int k = 0; k < 200; ++k) {
            auto p = gen.pred(3);
            auto r = satisfiable(p, d, order);
            bool any = false;
            std::optional<std::string> first;
            for_each_point(d, [&](const Env& env) {
                if (truth(p, env)) {
                    any = true;
                    if (!first) {
                        // scan order equals the declared order, so the first hit is the least one
                        first = env.find(Symbol("a"))->to_string() + "," + env.find(Symbol("b"))->to_string()
                                + "," + env.find(Symbol("c"))->to_string();
                    }
                }
            });
            CAPTURE(to_string(p));
            REQUIRE(r.status != SatStatus::Unknown);
            CHECK((r.status == SatStatus::Sat) == any);
            if (r.status == SatStatus::Sat) {
                Env full = r.witness;
                for (const auto& v : d.all())
                    if (!full.find(v.name))
                        full.set(v.name, v.values.front());
                CHECK(truth(p, full));
                std::string got = full.find(Symbol("a"))->to_string() + "," + full.find(Symbol("b"))->to_string() + ","
                                  + full.find(Symbol("c"))->to_string();
                CHECK(got == *first);
            }
        }
    }

    TEST_CASE("least witness of the toy class")
    {
        auto l = load_fixture("toy");
        auto p = pred(l.model, "n <= 10 & m = ON");
        auto r = satisfiable(p, l.domains, {Symbol("n"), Symbol("m")});
        REQUIRE(r.status == SatStatus::Sat);
        CHECK(*r.witness.find(Symbol("n")) == Value::integer(0));
        CHECK(*r.witness.find(Symbol("m")) == Value::literal("ON"));
        CHECK(satisfiable(pred(l.model, "m = ON & m = OFF"), l.domains).status == SatStatus::Unsat);
    }

    TEST_CASE("budget exhaustion is reported as unknown")
    {
        auto l = load_fixture("toy");
        auto p = pred(l.model, "n > 19 & n < 19");
        auto r = satisfiable(p, l.domains, {Symbol("n")}, nullptr, 3);
        CHECK(r.status != SatStatus::Sat);
    }

    TEST_CASE("projection drops quantified variables")
    {
        auto l = load_fixture("toy");
        auto x = l.model.input_var();
        auto p = pred(l.model, "m = ON & x > 2");
        auto q = project_exists(p, {x}, l.domains);
        CHECK(equivalent(q, pred(l.model, "m = ON"), l.domains));
        auto r = project_exists(pred(l.model, "m = ON & x > n"), {x}, l.domains);
        for (const auto& [name, role] : free_vars(*r))
            CHECK(role != VarRole::Input);
    }

    TEST_CASE("sampled witnesses are distinct members")
    {
        auto l = load_fixture("toy");
        auto p = pred(l.model, "n <= 10 & m = ON");
        auto ws = sample_witnesses(p, l.domains, {Symbol("n"), Symbol("m")}, 5, 1);
        REQUIRE(ws.size() == 5);
        std::set<std::string> seen;
        for (const auto& w : ws) {
            CHECK(holds(*p, w));
            seen.insert(w.find(Symbol("n"))->to_string());
        }
        CHECK(seen.size() == 5);
    }
}
