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

#include <random>

using namespace devs_scc;
using namespace devs_scc::testing;

namespace {

Scc make(const Model& m, int id, const std::string& ini, const std::string& pairs)
{
    Scc s;
    s.id = id;
    s.ini_st = pred(m, ini);
    s.in_pairs = pred(m, pairs);
    s.provenance = {"test", "toy " + std::to_string(id)};
    return s;
}

std::string canon(const Scc& s)
{
    return to_string(normalize(s.ini_st)) + " | " + to_string(normalize(s.in_pairs)) + " | "
           + (s.link ? to_string(normalize(s.link)) : std::string("-"));
}

// Random classes of the toy model: state part over n and m, pair part over x and t.
class SccGen {
public:
    SccGen(const Model& m, std::uint32_t seed) : m_(m), rng_(seed) {}

    Scc next(int id)
    {
        static const char* ini[] = {"n <= 10", "m = ON", "m = OFF", "n > 3", "n = 0", "true", "n != 5 & m = ON",
                                    "n < 2 \\/ m = OFF", "~(n > 12)"};
        static const char* pairs[] = {"x = 1", "x > 0", "true", "t = 0", "x = tau & t = 0", "t <= 2 & x in nat",
                                      "x != 3"};
        return make(m_, id, ini[pick(9)], pairs[pick(7)]);
    }

    int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

private:
    const Model& m_;
    std::mt19937 rng_;
};

} // namespace

TEST_SUITE("algebra")
{
    TEST_CASE("toy combination keeps two and drops the ON and OFF intersection")
    {
        auto l = load_fixture("toy");
        std::vector<Scc> base{make(l.model, 1, "n <= 10", "x = 1"), make(l.model, 2, "m = ON", "x = 1"),
                              make(l.model, 3, "m = OFF", "x = 1")};
        auto res = combine_and_prune(base, all_pairs({1, 2, 3}), l.domains);
        CHECK(res.report.kept == 2);
        CHECK(res.report.dropped == 1);
        CHECK(res.report.unknown == 0);
        REQUIRE(res.catalog.size() == 5);
        CHECK(res.catalog[3].id == 4);
        CHECK(res.catalog[3].combined_from == std::vector<int>{1, 2});
        CHECK(res.catalog[4].combined_from == std::vector<int>{1, 3});
        CHECK(res.report.outcomes[2].status == SatStatus::Unsat);
        CHECK(equivalent(res.catalog[3].ini_st, pred(l.model, "n <= 10 & m = ON"), l.domains));
    }

    TEST_CASE("elevator plan continues numbering at 89")
    {
        auto l = load_fixture("elevator");
        auto cat = catalog_from(l, "elevator.crit", "elevator.parts");
        auto plan = plan_from_json(Json::parse(read_file(fixture("elevator_plan.json"))), cat.sccs);
        auto res = combine_and_prune(cat.sccs, plan, l.domains, 2);
        REQUIRE(res.catalog.size() == 92);
        CHECK(res.catalog[88].id == 89);
        CHECK(res.catalog[88].combined_from == std::vector<int>{1, 49});
        CHECK(equivalent(res.catalog[88].ini_st, pred(l.model, "eng = stopped & fc = empty & d = open"), l.domains));
        CHECK(res.catalog[91].combined_from == std::vector<int>{13, 59, 85});
        CHECK(res.report.dropped + res.report.kept == 4);
    }

    TEST_CASE("plans are checked")
    {
        auto l = load_fixture("toy");
        std::vector<Scc> base{make(l.model, 1, "true", "true"), make(l.model, 2, "true", "true"),
                              make(l.model, 3, "true", "true")};
        CombinationPlan bad;
        bad.groups = {{1, 7}};
        CHECK_THROWS_AS(check_plan(bad, base), PlanError);
        CombinationPlan triple;
        triple.groups = {{1, 2, 3}};
        CHECK_THROWS_AS(check_plan(triple, base), PlanError);
        triple.max_arity = 3;
        CHECK_NOTHROW(check_plan(triple, base));
        CombinationPlan single;
        single.groups = {{2}};
        CHECK_THROWS_AS(check_plan(single, base), PlanError);
    }

    TEST_CASE("property: intersection is commutative on 200 pairs")
    {
        auto l = load_fixture("toy");
        SccGen gen(l.model, 11);
        for (int k = 0; k < 200; ++k) {
            auto a = gen.next(1), b = gen.next(2);
            auto ab = intersect(a, b), ba = intersect(b, a);
            CHECK(canon(ab) == canon(ba));
            CHECK(ab.ancestry() == ba.ancestry());
        }
    }

    TEST_CASE("property: intersection is associative on 200 triples")
    {
        auto l = load_fixture("toy");
        SccGen gen(l.model, 12);
        for (int k = 0; k < 200; ++k) {
            auto a = gen.next(1), b = gen.next(2), c = gen.next(3);
            auto left = intersect(intersect(a, b), c);
            auto right = intersect(a, intersect(b, c));
            CHECK(canon(left) == canon(right));
            CHECK(left.ancestry() == std::vector<int>{1, 2, 3});
        }
    }

    TEST_CASE("property: kept combinations lie inside every ancestor")
    {
        auto l = load_fixture("toy");
        SccGen gen(l.model, 13);
        std::vector<Scc> base;
        for (int i = 1; i <= 8; ++i)
            base.push_back(gen.next(i));
        std::vector<int> ids{1, 2, 3, 4, 5, 6, 7, 8};
        auto res = combine_and_prune(base, all_pairs(ids), l.domains, 4);
        CHECK(res.report.kept + res.report.dropped == 28);
        for (std::size_t i = base.size(); i < res.catalog.size(); ++i) {
            const auto& s = res.catalog[i];
            for (const auto& w : sample_witnesses(s.joint(), l.domains, selection_order(l.model), 4, 0))
                for (int anc : s.combined_from) {
                    Env full = w;
                    for (const auto& v : l.domains.all())
                        if (!full.find(v.name))
                            full.set(v.name, v.values.front());
                    CHECK(holds(*base[anc - 1].joint(), full, &l.domains.constants()));
                }
        }
    }

    TEST_CASE("parallel and serial combination agree")
    {
        auto l = load_fixture("toy");
        SccGen gen(l.model, 14);
        std::vector<Scc> base;
        for (int i = 1; i <= 10; ++i)
            base.push_back(gen.next(i));
        std::vector<int> ids;
        for (int i = 1; i <= 10; ++i)
            ids.push_back(i);
        auto a = combine_and_prune(base, all_pairs(ids), l.domains, 1);
        auto b = combine_and_prune(base, all_pairs(ids), l.domains, 8);
        REQUIRE(a.catalog.size() == b.catalog.size());
        for (std::size_t i = 0; i < a.catalog.size(); ++i) {
            CHECK(a.catalog[i].id == b.catalog[i].id);
            CHECK(canon(a.catalog[i]) == canon(b.catalog[i]));
        }
    }
}
