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
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace devs_scc;
using namespace devs_scc::testing;

namespace {

StateVec state_of(const Model& m, const std::map<std::string, Value>& vals)
{
    StateVec s;
    for (const auto& v : m.state)
        s.push_back(vals.at(v.name.str()));
    return s;
}

Value V(std::int64_t n)
{
    return Value::integer(n);
}

Value L(const char* s)
{
    return Value::literal(s);
}

StateVec soda_idle(const Model& m)
{
    return state_of(m, {{"m", L("idle")}, {"d", V(0)}, {"ot", Value::infinity()}, {"np", V(1)}, {"dp", V(1)},
                        {"it", V(10)}, {"ms1", V(0)}, {"ms50", V(0)}, {"ms25", V(0)}, {"om1", V(0)},
                        {"om50", V(0)}, {"om25", V(0)}, {"mr1", V(0)}, {"mr50", V(0)}, {"mr25", V(0)}});
}

StateVec elevator_alarm(const Model& m)
{
    auto inf = Value::infinity();
    return state_of(m, {{"f", V(0)}, {"fc", L("empty")}, {"eng", L("stopped")}, {"d", L("closed")}, {"ws", V(0)},
                        {"ds", V(0)}, {"sw", V(0)}, {"a", V(0)}, {"at", V(5)}, {"dt1", inf}, {"dt2", inf},
                        {"gft", inf}, {"ot", inf}, {"nt", L("A")}});
}

std::size_t idx(const Model& m, const char* n)
{
    return *m.state_index(Symbol(n));
}

} // namespace

TEST_SUITE("simulator")
{
    TEST_CASE("init checks sorts and starts at zero")
    {
        auto l = load_fixture("soda");
        Simulator sim(l.model, l.domains.constants(), l.domains.fn());
        auto s = soda_idle(l.model);
        auto st = sim.init(s);
        CHECK(st.last == Number{0});
        CHECK(sim.ta(s) == V(10));
        s[idx(l.model, "m")] = L("broken");
        CHECK_THROWS_AS(sim.init(s), SimError);
    }

    TEST_CASE("elevator with every timer at infinity is passive")
    {
        auto l = load_fixture("elevator");
        Simulator sim(l.model, l.domains.constants(), l.domains.fn());
        auto s = elevator_alarm(l.model);
        s[idx(l.model, "at")] = Value::infinity();
        CHECK(sim.ta(s).is_infinity());
        try {
            sim.step(sim.init(s), std::nullopt);
            FAIL("expected passive state");
        } catch (const SimError& e) {
            CHECK(e.kind() == SimErrorKind::PassiveState);
        }
    }

    TEST_CASE("coin inserted into the idle machine")
    {
        auto l = load_fixture("soda");
        Simulator sim(l.model, l.domains.constants(), l.domains.fn());
        auto r = sim.step(sim.init(soda_idle(l.model)), InputPair{V(25), V(3)});
        CHECK_FALSE(r.output);
        REQUIRE(r.events.size() == 1);
        CHECK(r.events[0].kind == TraceKind::External);
        CHECK(r.events[0].case_id == 1);
        CHECK(r.next.state[idx(l.model, "m")] == L("operating"));
        CHECK(r.next.state[idx(l.model, "d")] == Value::rational(1, 4));
        CHECK(r.next.state[idx(l.model, "ot")] == V(0));
        CHECK(r.next.state[idx(l.model, "it")] == V(7));
        CHECK(r.next.state[idx(l.model, "om25")] == V(1));
        CHECK(r.next.last == Number{3});
    }

    TEST_CASE("elevator alarm timer fires")
    {
        auto l = load_fixture("elevator");
        Simulator sim(l.model, l.domains.constants(), l.domains.fn());
        auto r = sim.step(sim.init(elevator_alarm(l.model)), std::nullopt);
        REQUIRE(r.output);
        std::vector<Value> leaves;
        flatten_into(*r.output, leaves);
        CHECK(leaves.back() == L("firealarm"));
        REQUIRE(r.events.size() == 2);
        CHECK(r.events[0].kind == TraceKind::Output);
        CHECK(r.events[0].case_id == 24);
        CHECK(r.events[1].case_id == 16);
        CHECK(r.next.state[idx(l.model, "a")] == V(1));
        CHECK(r.events[1].at == Number{5});
    }

    TEST_CASE("events beyond the deadline are rejected and ties are flagged")
    {
        auto l = load_fixture("soda");
        Simulator sim(l.model, l.domains.constants(), l.domains.fn());
        auto st = sim.init(soda_idle(l.model));
        CHECK_THROWS_AS(sim.step(st, InputPair{V(25), V(11)}), SimError);
        auto r = sim.step(st, InputPair{V(25), V(10)});
        CHECK(r.events[0].tie);
    }

    TEST_CASE("internal class configuration on the idle machine")
    {
        auto l = load_fixture("soda");
        Simulator sim(l.model, l.domains.constants(), l.domains.fn());
        auto s = soda_idle(l.model);
        s[idx(l.model, "ot")] = V(2);
        auto t = sim.run_config(SimulationConfig{10, s, {Value::tau(), V(0)}});
        REQUIRE_FALSE(t.failure);
        REQUIRE(t.events.size() == 2);
        CHECK(t.events[1].fn == FnKind::Dint);
        CHECK(t.events[1].case_id == 5);
    }

    TEST_CASE("missing case is an undefined transition")
    {
        auto l = load_fixture("soda");
        Simulator sim(l.model, l.domains.constants(), l.domains.fn());
        auto c = config_from_json(l.model, Json::parse(read_file(fixture("soda_undefined.json"))));
        auto t = sim.run_config(c);
        REQUIRE(t.failure);
        CHECK(t.failure->kind == SimErrorKind::UndefinedTransition);
        CHECK(t.events.empty());
    }

    TEST_CASE("external configuration has no output")
    {
        auto l = load_fixture("elevator");
        auto cat = catalog_from(l, "elevator.crit", "elevator.parts");
        Simulator sim(l.model, l.domains.constants(), l.domains.fn());
        auto t = sim.run_config(select_config(l.model, cat.sccs[0], l.domains));
        REQUIRE_FALSE(t.failure);
        REQUIRE(t.events.size() == 1);
        CHECK(t.events[0].kind == TraceKind::External);
        CHECK(t.events[0].case_id == 1);
    }

    TEST_CASE("property: elapsed time stays within ta over 1000 random steps")
    {
        std::mt19937 rng(424242);
        std::size_t steps = 0;
        for (const char* stem : {"soda", "elevator"}) {
            auto l = load_fixture(stem);
            auto cat = catalog_from(l, std::string(stem) + ".crit", std::string(stem) == "elevator" ? "elevator.parts" : "");
            Simulator sim(l.model, l.domains.constants(), l.domains.fn());
            std::vector<StateVec> starts;
            for (const auto& s : cat.sccs)
                starts.push_back(select_config(l.model, s, l.domains).state);
            const auto& events = *l.domains.values(Symbol("x"));
            std::size_t target = steps + 500;
            SimState st = sim.init(starts[0]);
            std::size_t guard = 0;
            while (steps < target && guard++ < 20000) {
                Value ta = sim.ta(st.state);
                CHECK(compare_ordered(ta, V(0)).value() >= 0);
                std::optional<InputPair> in;
                bool internal = !ta.is_infinity() && rng() % 2 == 0;
                if (!internal) {
                    Number span = ta.is_infinity() ? Number{10} : ta.number();
                    Number e = span * Number{static_cast<std::int64_t>(rng() % 9), 8};
                    Value x = events[rng() % events.size()];
                    if (x.is_tau())
                        continue;
                    in = InputPair{x, Value(st.last + e)};
                }
                try {
                    auto r = sim.step(st, in);
                    for (const auto& ev : r.events) {
                        CHECK(ev.elapsed >= Number{0});
                        if (!ta.is_infinity())
                            CHECK(ev.elapsed <= ta.number());
                        CHECK(ev.at >= st.last);
                        CHECK((ev.kind == TraceKind::Output) == (ev.fn == FnKind::Lambda));
                    }
                    CHECK(r.output.has_value() == internal);
                    st = r.next;
                    ++steps;
                } catch (const SimError& e) {
                    CHECK(e.kind() != SimErrorKind::AfterDeadline);
                    st = sim.init(starts[rng() % starts.size()]);
                }
            }
        }
        CHECK(steps == 1000);
    }

    TEST_CASE("uniformity probe")
    {
        auto l = load_fixture("soda");
        Simulator sim(l.model, l.domains.constants(), l.domains.fn());
        Scc coarse;
        coarse.id = 100;
        coarse.ini_st = pred(l.model, "true");
        coarse.in_pairs = pred(l.model, "x = getNormal");
        auto rep = uniformity_probe(sim, coarse, l.domains, 12);
        CHECK_FALSE(rep.uniform);
        bool undefined = false, case2 = false;
        for (const auto& s : rep.signatures) {
            undefined = undefined || s.find("undefined") != std::string::npos;
            case2 = case2 || s == "dext.2";
        }
        CHECK(undefined);
        CHECK(case2);

        auto cat = catalog_from(l, "soda.crit");
        auto pinned = uniformity_probe(sim, cat.sccs[2], l.domains, 6);
        CHECK(pinned.uniform);
        CHECK(pinned.run == 6);

        auto one = uniformity_probe(sim, cat.sccs[2], l.domains, 1);
        CHECK(one.run < 2);
        CHECK(probe_json(one).at("skipped") == true);
    }
}
