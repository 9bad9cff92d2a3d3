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
#include <set>

using namespace devs_scc;
using namespace devs_scc::testing;

namespace {

const char* kToggle = R"(
model toggle {
  state {
    m : enum {A, B};
    k : nat;
  }
  input enum {go};
  output nat;
  ta(s) = infinity;
  dext(s, e, x) {
    case m = A -> (B, k);
    case m = B -> (A, k);
  }
  dint(s) { otherwise -> (m, k); }
  lambda(s) { otherwise -> k; }
}
)";

Scc make(const Model& m, int id, const std::string& ini, const std::string& pairs)
{
    Scc s;
    s.id = id;
    s.ini_st = pred(m, ini);
    s.in_pairs = pred(m, pairs);
    return s;
}

StateVec post_state(const SequenceStep& st)
{
    for (auto it = st.events.rbegin(); it != st.events.rend(); ++it)
        if (it->kind != TraceKind::Output)
            return it->state_after;
    return {};
}

void check_sequences(const Model& m, const Domains& d, const std::vector<Scc>& sccs,
                     const std::vector<SimulationSequence>& seqs)
{
    std::multiset<int> covered;
    for (const auto& q : seqs)
        covered.insert(q.covered.begin(), q.covered.end());
    std::multiset<int> ids;
    for (const auto& s : sccs)
        ids.insert(s.id);
    CHECK(covered == ids);

    for (const auto& q : seqs) {
        for (std::size_t i = 0; i < q.steps.size(); ++i) {
            const auto& step = q.steps[i];
            const Scc* s = nullptr;
            for (const auto& c : sccs)
                if (c.id == step.config.scc_id)
                    s = &c;
            REQUIRE(s);
            CHECK(holds(*s->ini_st, state_env(m, step.config.state), &d.constants(), d.fn()));
            if (i > 0)
                CHECK(step.config.state == post_state(q.steps[i - 1]));
            CHECK(step.config.scc_id == q.covered[i]);
        }
    }
}

} // namespace

TEST_SUITE("sequencer")
{
    TEST_CASE("toggle: reachable class is chained, the other starts its own run")
    {
        auto m = load_model(kToggle);
        auto d = make_domains(m, Bounds{});
        Simulator sim(m, d.constants(), d.fn());
        std::vector<Scc> sccs{make(m, 1, "m = A & k = 0", "x = go"), make(m, 2, "m = B", "x = go"),
                              make(m, 3, "k = 2", "x = go")};
        auto seqs = build_sequences(m, sccs, d, sim);
        REQUIRE(seqs.size() == 2);
        CHECK(seqs[0].covered == std::vector<int>{1, 2});
        CHECK(seqs[1].covered == std::vector<int>{3});
        CHECK(seqs[0].steps.size() == 2);
        CHECK(seqs[1].steps.size() == 1);
        check_sequences(m, d, sccs, seqs);
    }

    TEST_CASE("disjoint classes and empty input")
    {
        auto m = load_model(kToggle);
        auto d = make_domains(m, Bounds{});
        Simulator sim(m, d.constants(), d.fn());
        std::vector<Scc> sccs{make(m, 1, "k = 1", "x = go"), make(m, 2, "k = 2", "x = go"),
                              make(m, 3, "k = 3", "x = go")};
        CHECK(build_sequences(m, sccs, d, sim).size() == 3);
        CHECK(build_sequences(m, {}, d, sim).empty());
    }

    TEST_CASE("failures end a run and are recorded")
    {
        auto l = load_fixture("soda");
        Simulator sim(l.model, l.domains.constants(), l.domains.fn());
        std::vector<Scc> sccs{make(l.model, 1, "m = operating & d < np", "x = getNormal"),
                              make(l.model, 2, "false", "true")};
        auto seqs = build_sequences(l.model, sccs, l.domains, sim);
        REQUIRE(seqs.size() == 2);
        REQUIRE(seqs[0].failure);
        CHECK(seqs[0].failure->kind == "undefined-transition");
        REQUIRE(seqs[1].failure);
        CHECK(seqs[1].failure->kind == "selection");
    }

    TEST_CASE("fixture catalogs are covered exactly once")
    {
        auto l = load_fixture("elevator");
        auto cat = catalog_from(l, "elevator.crit", "elevator.parts");
        Simulator sim(l.model, l.domains.constants(), l.domains.fn());
        auto seqs = build_sequences(l.model, cat.sccs, l.domains, sim);
        check_sequences(l.model, l.domains, cat.sccs, seqs);
        auto again = build_sequences(l.model, cat.sccs, l.domains, sim);
        REQUIRE(again.size() == seqs.size());
        for (std::size_t i = 0; i < seqs.size(); ++i)
            CHECK(again[i].covered == seqs[i].covered);
    }

    TEST_CASE("property: coverage partitions 100 generated class sets")
    {
        auto l = load_fixture("soda");
        auto base = catalog_from(l, "soda.crit").sccs;
        Simulator sim(l.model, l.domains.constants(), l.domains.fn());
        static const char* ini[] = {"true", "m = idle", "m = operating", "d > 0", "d >= np", "ot < it",
                                    "m = finishOp & d > 0.5", "it <= ot", "ms1 > 0", "m = cancelOp"};
        static const char* pairs[] = {"x = 25", "x = getNormal", "x = cancel", "x = tau & t = 0", "x in {50, 100}",
                                      "x = moneyRetreated & t > 1", "true"};
        std::mt19937 rng(5150);
        for (int k = 0; k < 100; ++k) {
            std::vector<Scc> sccs;
            int n = 1 + static_cast<int>(rng() % 10);
            for (int i = 0; i < n; ++i) {
                if (rng() % 3 == 0) {
                    Scc s = base[rng() % base.size()];
                    s.id = i + 1;
                    sccs.push_back(s);
                } else {
                    sccs.push_back(make(l.model, i + 1, ini[rng() % 10], pairs[rng() % 7]));
                }
            }
            auto seqs = build_sequences(l.model, sccs, l.domains, sim);
            check_sequences(l.model, l.domains, sccs, seqs);
        }
    }
}
