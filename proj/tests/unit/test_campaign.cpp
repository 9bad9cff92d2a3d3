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

CampaignInputs elevator_inputs(const Model& m, unsigned jobs)
{
    CampaignInputs in;
    in.criteria = parse_criteria(read_file(fixture("elevator.crit")), m);
    in.partitions = parse_partitions(read_file(fixture("elevator.parts")));
    in.plan = Json::parse(read_file(fixture("elevator_plan.json")));
    in.probe_k = 3;
    in.jobs = jobs;
    return in;
}

} // namespace

TEST_SUITE("campaign")
{
    TEST_CASE("soda campaign with the cases criterion")
    {
        auto l = load_fixture("soda");
        CampaignInputs in;
        in.criteria = parse_criteria(read_file(fixture("soda.crit")), l.model);
        auto r = run_campaign(l.model, l.bounds, in);
        CHECK(r.base.sccs.size() == 11);
        CHECK(r.catalog_size() == 11);
        CHECK(r.stage_errors.empty());
        auto j = report_json(l.model, r);
        CHECK(j.at("counts").at("reconciled") == true);
        CHECK(j.at("schema") == "devs-scc/1");
    }

    TEST_CASE("empty selection gives an empty report")
    {
        auto l = load_fixture("soda");
        auto r = run_campaign(l.model, l.bounds, CampaignInputs{});
        CHECK(r.catalog_size() == 0);
        CHECK(r.exit_code() == 0);
        CHECK(report_json(l.model, r).at("sccs").empty());
    }

    TEST_CASE("elevator report is reproducible and reconciles")
    {
        auto l = load_fixture("elevator");
        auto a = run_campaign(l.model, l.bounds, elevator_inputs(l.model, 1));
        auto b = run_campaign(l.model, l.bounds, elevator_inputs(l.model, 6));
        auto ja = dump(report_json(l.model, a));
        CHECK(ja == dump(report_json(l.model, b)));
        CHECK(summary_csv(l.model, a) == summary_csv(l.model, b));
        CHECK(traces_jsonl(l.model, a) == traces_jsonl(l.model, b));
        auto j = Json::parse(ja);
        CHECK(j.at("counts").at("base") == 88);
        CHECK(j.at("counts").at("catalog") == 92);
        CHECK(j.at("counts").at("reconciled") == true);
        CHECK(j.at("sccs").at(88).at("id") == 89);
    }

    TEST_CASE("a bad plan is recorded as a stage error")
    {
        auto l = load_fixture("soda");
        CampaignInputs in;
        in.criteria = parse_criteria("cases;", l.model);
        in.plan = Json::parse(R"({"groups": [[1, 400]]})");
        auto r = run_campaign(l.model, l.bounds, in);
        REQUIRE(r.stage_errors.size() == 1);
        CHECK(r.catalog_size() == 11);
        CHECK(r.exit_code() == 4);
    }

    TEST_CASE("configurations survive a JSON round trip")
    {
        auto l = load_fixture("elevator");
        auto cat = catalog_from(l, "elevator.crit", "elevator.parts");
        for (const auto& s : cat.sccs) {
            auto c = select_config(l.model, s, l.domains);
            auto back = config_from_json(l.model, Json::parse(config_json(l.model, c).dump()));
            CHECK(back.scc_id == c.scc_id);
            CHECK(back.state == c.state);
            CHECK(back.input.event == c.input.event);
            CHECK(back.input.time == c.input.time);
        }
        CHECK_THROWS_AS(config_from_json(l.model, Json::parse(R"({"state": {"f": 0}, "input": {"event": 1}})")),
                        SchemaError);
    }

    TEST_CASE("class predicates print in the model syntax")
    {
        auto l = load_fixture("elevator");
        auto cat = catalog_from(l, "elevator.crit", "elevator.parts");
        for (const auto& s : cat.sccs) {
            CAPTURE(s.id);
            CHECK(equivalent(pred(l.model, to_string(s.ini_st)), s.ini_st, l.domains));
            CHECK(equivalent(pred(l.model, to_string(s.in_pairs)), s.in_pairs, l.domains));
        }
    }
}
