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

void check_against_expected(const Loaded& l, const Catalog& cat, const std::string& expected)
{
    auto j = Json::parse(read_file(fixture(expected)));
    for (const auto& e : j.at("sccs")) {
        int id = e.at("id");
        CAPTURE(id);
        const Scc* s = cat.find(id);
        REQUIRE(s);
        auto ini = pred(l.model, e.at("ini_st").get<std::string>());
        auto pairs = pred(l.model, e.at("in_pairs").get<std::string>());
        CHECK(equivalent(s->ini_st, ini, l.domains));
        CHECK(equivalent(s->in_pairs, pairs, l.domains));
    }
}

} // namespace

TEST_SUITE("criteria")
{
    TEST_CASE("soda cases match the expected catalog")
    {
        auto l = load_fixture("soda");
        auto cat = catalog_from(l, "soda.crit");
        REQUIRE(cat.sccs.size() == 11);
        int ext = 0, in = 0;
        for (const auto& s : cat.sccs)
            (s.provenance.target.rfind("dext", 0) == 0 ? ext : in)++;
        CHECK(ext == 5);
        CHECK(in == 6);
        check_against_expected(l, cat, "soda_catalog.expected.json");
        CHECK(same_form(cat.sccs[2].ini_st, pred(l.model, "d >= dp")));
    }

    TEST_CASE("elevator cases with and without otherwise")
    {
        auto l = load_fixture("elevator");
        CHECK(cases_criterion(l.model, l.domains, false).sccs.size() == 35);
        CHECK(cases_criterion(l.model, l.domains, true).sccs.size() == 36);
    }

    TEST_CASE("elevator base catalog")
    {
        auto l = load_fixture("elevator");
        auto cat = catalog_from(l, "elevator.crit", "elevator.parts");
        REQUIRE(cat.sccs.size() == 88);
        CHECK(cat.next_id() == 89);
        std::vector<std::size_t> sizes;
        for (const auto& a : cat.applications)
            sizes.push_back(a.sccs.size());
        CHECK(sizes == std::vector<std::size_t>{35, 31, 6, 6, 10});
        check_against_expected(l, cat, "elevator_catalog.expected.json");
        for (std::size_t i = 0; i < cat.sccs.size(); ++i)
            CHECK(cat.sccs[i].id == static_cast<int>(i + 1));
    }

    TEST_CASE("cases soundness: dext class witnesses admit an elapsed time")
    {
        auto l = load_fixture("soda");
        auto res = cases_criterion(l.model, l.domains, false);
        Simulator sim(l.model, l.domains.constants(), l.domains.fn());
        for (const auto& s : res.sccs) {
            if (s.provenance.target.rfind("dext", 0) != 0)
                continue;
            for (const auto& c : sample_configs(l.model, s, l.domains, 6, 3)) {
                auto t = sim.run_config(c);
                REQUIRE_FALSE(t.events.empty());
                CHECK(std::string(fn_name(t.events[0].fn)) + " case " + std::to_string(t.events[0].case_id)
                      == s.provenance.target);
            }
        }
    }

    TEST_CASE("extensional classes")
    {
        auto l = load_fixture("elevator");
        auto r = extensional_criterion(l.model, {Symbol("eng"), Symbol("fc")});
        // three engine states; fc is nat | empty: one class for the numbers and one for empty
        CHECK(r.sccs.size() == 5);
        CHECK_THROWS_AS(extensional_criterion(l.model, {Symbol("at")}), CriterionError);
    }

    TEST_CASE("intentional criterion splits a comprehension into DNF clauses")
    {
        auto l = load_fixture("soda");
        auto r = intentional_criterion(l.model, l.domains, pred(l.model, "d > 0 => np > 0"));
        CHECK(r.sccs.size() == 2);
    }

    TEST_CASE("built-in tables are partitions of the integer grid")
    {
        std::vector<Value> grid;
        for (int i = -2; i <= 2; ++i)
            grid.push_back(Value::integer(i));
        for (const auto& sp : builtin_partitions()) {
            CAPTURE(sp.name);
            auto h = check_partition(sp, grid);
            CHECK(h.ok());
            CHECK(h.points == 25);
        }
    }

    TEST_CASE("user table for the elevator comparisons is a partition")
    {
        auto parts = parse_partitions(read_file(fixture("elevator.parts")));
        REQUIRE(parts.size() == 1);
        CHECK(parts[0].cells.size() == 9);
        std::vector<Value> grid;
        for (int i = -2; i <= 2; ++i)
            grid.push_back(Value::integer(i));
        CHECK(check_partition(parts[0], grid).ok());
    }

    TEST_CASE("time conditions")
    {
        auto l = load_fixture("elevator");
        auto t = l.model.time_var();
        auto c = [](std::int64_t v) { return Expr::constant(Value::integer(v)); };
        TimeSpec interval;
        interval.intervals.push_back({c(1), c(2)});
        CHECK(time_conditions(interval, t, l.domains.constants()).size() == 5);
        CHECK(time_partition_criterion(l.model, l.domains, interval).sccs.size() == 5);
        TimeSpec point;
        point.points.push_back(c(3));
        CHECK(time_conditions(point, t, l.domains.constants()).size() == 3);
        CHECK(time_partition_criterion(l.model, l.domains, point).sccs.size() == 3);
        TimeSpec empty;
        empty.intervals.push_back({c(2), c(1)});
        CHECK_THROWS_AS(time_conditions(empty, t, l.domains.constants()), CriterionError);
    }

    TEST_CASE("elevator time spec gives the ten relevant conditions")
    {
        auto l = load_fixture("elevator");
        auto cat = catalog_from(l, "elevator.crit", "elevator.parts");
        const char* expected[] = {"t = 0",        "0 < t & t < TD1",   "t = TD1",         "TD1 < t & t < TD2",
                                  "t = TD2",      "TD2 < t & t < TA",  "t = TA",          "TA < t & t < TGF",
                                  "t = TGF",      "t > TGF"};
        const auto& time = cat.applications.back();
        REQUIRE(time.sccs.size() == 10);
        for (std::size_t i = 0; i < 10; ++i) {
            CAPTURE(expected[i]);
            CHECK(same_form(time.sccs[i].in_pairs, pred(l.model, expected[i])));
        }
    }

    TEST_CASE("standard partition keeps the feasible cells")
    {
        auto l = load_fixture("elevator");
        auto cat = catalog_from(l, "elevator.crit", "elevator.parts");
        const auto& first = cat.applications[2];
        CHECK(first.sccs.size() == 6);
        CHECK(first.infeasible == 3);
        for (const auto& s : first.sccs)
            CHECK(satisfiable(s.joint(), l.domains).status == SatStatus::Sat);
    }

    TEST_CASE("criteria file errors")
    {
        auto l = load_fixture("elevator");
        PartitionRegistry reg;
        auto apply = [&](const char* text) {
            for (const auto& s : parse_criteria(text, l.model).selections)
                apply_selection(s, l.model, l.domains, reg);
        };
        CHECK_THROWS(apply("standard dint.99 \">\";"));
        CHECK_THROWS(apply("extensional nosuchvar;"));
        CHECK_THROWS(apply("standard dint.6 \">\" using \"nosuchtable\";"));
        CHECK(parse_criteria("", l.model).selections.empty());
    }
}
