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

using namespace devs_scc;
using namespace devs_scc::testing;

namespace {

Scc make(const Model& m, int id, const std::string& ini, const std::string& pairs)
{
    Scc s;
    s.id = id;
    s.ini_st = pred(m, ini);
    s.in_pairs = pred(m, pairs);
    return s;
}

void check_member(const Loaded& l, const Scc& s, const SimulationConfig& c)
{
    // both halves evaluated separately with the plain evaluator
    Env st = state_env(l.model, c.state);
    CHECK(holds(*s.ini_st, st, &l.domains.constants(), l.domains.fn()));
    Env in;
    in.set(Symbol("x"), c.input.event);
    in.set(Symbol("t"), c.input.time);
    for (const auto& e : st.entries())
        in.set(e.first, e.second);
    CHECK(holds(*s.in_pairs, in, &l.domains.constants(), l.domains.fn()));
    if (s.link)
        CHECK(holds(*s.link, in, &l.domains.constants(), l.domains.fn()));
    CHECK(config_in_class(l.model, s, c, l.domains));
}

} // namespace

TEST_SUITE("selector")
{
    TEST_CASE("toy class picks the least state and input")
    {
        auto l = load_fixture("toy");
        auto c = select_config(l.model, make(l.model, 4, "n <= 10 & m = ON", "x = 1"), l.domains);
        CHECK(c.state == StateVec{Value::integer(0), Value::literal("ON")});
        CHECK(c.input.event == Value::integer(1));
        CHECK(c.input.time == Value::integer(0));
    }

    TEST_CASE("empty class is an error")
    {
        auto l = load_fixture("toy");
        auto s = make(l.model, 9, "false", "true");
        try {
            select_config(l.model, s, l.domains);
            FAIL("expected an error");
        } catch (const SelectionError& e) {
            CHECK(e.kind() == SelectionError::Kind::Empty);
            CHECK(std::string(e.what()).find("no representative within bounds") != std::string::npos);
        }
    }

    TEST_CASE("soda diet class")
    {
        auto l = load_fixture("soda");
        auto cat = catalog_from(l, "soda.crit");
        auto c = select_config(l.model, cat.sccs[2], l.domains);
        auto d = *l.model.state_index(Symbol("d"));
        auto dp = *l.model.state_index(Symbol("dp"));
        CHECK(c.state[d] == Value::integer(0));
        CHECK(c.state[dp] == Value::integer(0));
        CHECK(c.input.event == Value::literal("getDiet"));
        CHECK(c.input.time == Value::integer(0));
    }

    TEST_CASE("property: every selected configuration of both fixtures is a member")
    {
        for (auto [stem, crit, parts] : {std::tuple{"soda", "soda.crit", ""},
                                         std::tuple{"elevator", "elevator.crit", "elevator.parts"}}) {
            CAPTURE(stem);
            auto l = load_fixture(stem);
            auto cat = catalog_from(l, crit, parts);
            std::vector<Scc> all = cat.sccs;
            if (std::string(stem) == "elevator") {
                auto plan = plan_from_json(Json::parse(read_file(fixture("elevator_plan.json"))), cat.sccs);
                all = combine_and_prune(cat.sccs, plan, l.domains).catalog;
            }
            for (const auto& s : all) {
                CAPTURE(s.id);
                auto c = select_config(l.model, s, l.domains);
                check_member(l, s, c);
                auto again = select_config(l.model, s, l.domains);
                CHECK(again.state == c.state);
                CHECK(again.input.event == c.input.event);
            }
        }
    }

    TEST_CASE("sampled configurations are distinct members")
    {
        auto l = load_fixture("soda");
        auto s = make(l.model, 1, "true", "x = getNormal");
        auto cs = sample_configs(l.model, s, l.domains, 8, 0);
        CHECK(cs.size() == 8);
        for (std::size_t i = 0; i < cs.size(); ++i) {
            CHECK(config_in_class(l.model, s, cs[i], l.domains));
            for (std::size_t j = 0; j < i; ++j)
                CHECK_FALSE((cs[i].state == cs[j].state && cs[i].input.time == cs[j].input.time));
        }
    }
}
