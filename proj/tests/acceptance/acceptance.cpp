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
// One line per acceptance criterion: PASS or FAIL, the measured value and the time taken.
#include "devs_scc/campaign.hpp"
#include "devs_scc/parser.hpp"
#include "devs_scc/symbolic.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <sys/wait.h>

using namespace devs_scc;

namespace {

// time limits, seconds
constexpr double kSodaCases = 1.0;
constexpr double kElevatorCases = 1.0;
constexpr double kElevatorBase = 5.0;
constexpr double kLessTable = 1.0;
constexpr double kTime = 1.0;
constexpr double kToy = 1.0;
constexpr double kDnf = 1.0;
constexpr double kUndefined = 1.0;
constexpr double kProperties = 60.0;
constexpr double kDeterminism = 10.0;

std::string fixture(const std::string& name)
{
    return std::string(DEVS_SCC_FIXTURES) + "/" + name;
}

struct Loaded {
    Model model;
    Bounds bounds;
    Domains domains;
};

Loaded load(const std::string& stem)
{
    Loaded l{load_model(read_file(fixture(stem + ".devs"))), parse_bounds(read_file(fixture(stem + ".bounds"))), {}};
    l.domains = make_domains(l.model, l.bounds);
    return l;
}

Catalog catalog(const Loaded& l, const std::string& crit, const std::string& parts)
{
    PartitionRegistry reg;
    if (!parts.empty())
        reg.user = parse_partitions(read_file(fixture(parts)));
    std::vector<CriterionResult> rs;
    for (const auto& s : parse_criteria(read_file(fixture(crit)), l.model).selections)
        rs.push_back(apply_selection(s, l.model, l.domains, reg));
    return build_catalog(std::move(rs));
}

PredPtr pred(const Model& m, const std::string& text)
{
    return parse_predicate(text, model_scope(m, true, true));
}

std::string canon(const PredPtr& p)
{
    return to_string(normalize(p));
}

int run(const std::string& cmd)
{
    int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void criterion(int n, const char* name, double limit, const std::function<Outcome()>& body)
{
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = o.pass && secs < limit;
    if (!pass)
        ++failures;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3fs/%.0fs", secs, limit);
    std::cout << (pass ? "PASS" : "FAIL") << " " << n << " " << name << ": " << o.detail << " [" << buf << "]"
              << std::endl;
}

} // namespace

int main()
{
    criterion(1, "soda cases catalog", kSodaCases, [] {
        auto l = load("soda");
        auto cat = catalog(l, "soda.crit", "");
        auto expected = Json::parse(read_file(fixture("soda_catalog.expected.json"))).at("sccs");
        int ext = 0, in = 0, matched = 0;
        for (const auto& s : cat.sccs)
            (s.provenance.target.rfind("dext", 0) == 0 ? ext : in)++;
        for (const auto& e : expected) {
            const Scc* s = cat.find(e.at("id").get<int>());
            if (!s)
                continue;
            auto ini = pred(l.model, e.at("ini_st").get<std::string>());
            auto pairs = pred(l.model, e.at("in_pairs").get<std::string>());
            bool same = canon(s->ini_st) == canon(ini) && !find_difference(s->in_pairs, pairs, l.domains);
            matched += same;
        }
        std::ostringstream os;
        os << cat.sccs.size() << " classes (" << ext << " external, " << in << " internal), " << matched
           << "/11 match";
        return Outcome{cat.sccs.size() == 11 && ext == 5 && in == 6 && matched == 11, os.str()};
    });

    criterion(2, "elevator cases with and without otherwise", kElevatorCases, [] {
        auto l = load("elevator");
        auto without = cases_criterion(l.model, l.domains, false).sccs.size();
        auto with = cases_criterion(l.model, l.domains, true).sccs.size();
        return Outcome{without == 35 && with == 36,
                       std::to_string(without) + " without, " + std::to_string(with) + " with"};
    });

    criterion(3, "elevator base catalog", kElevatorBase, [] {
        auto l = load("elevator");
        auto cat = catalog(l, "elevator.crit", "elevator.parts");
        std::string parts;
        for (const auto& a : cat.applications)
            parts += (parts.empty() ? "" : "+") + std::to_string(a.sccs.size());
        return Outcome{cat.sccs.size() == 88 && cat.next_id() == 89,
                       parts + " = " + std::to_string(cat.sccs.size()) + ", next id " + std::to_string(cat.next_id())};
    });

    criterion(4, "built-in < partition", kLessTable, [] {
        PartitionRegistry reg;
        const auto* sp = reg.find("<");
        if (!sp)
            return Outcome{false, "no table"};
        // each grid point must satisfy exactly one cell
        std::size_t points = 0, bad = 0;
        for (int a = -2; a <= 2; ++a)
            for (int b = -2; b <= 2; ++b) {
                Env env;
                env.set(sp->params[0]->name, Value::integer(a));
                env.set(sp->params[1]->name, Value::integer(b));
                int hits = 0;
                for (const auto& c : sp->cells)
                    hits += holds(*c, env);
                ++points;
                bad += hits != 1;
            }
        return Outcome{sp->cells.size() == 9 && points == 25 && bad == 0,
                       std::to_string(sp->cells.size()) + " cells, " + std::to_string(points) + " points, "
                           + std::to_string(bad) + " not covered exactly once"};
    });

    criterion(5, "time partition", kTime, [] {
        auto l = load("elevator");
        auto t = l.model.time_var();
        auto c = [](std::int64_t v) { return Expr::constant(Value::integer(v)); };
        bool counts = true;
        for (int a = 1; a <= 4; ++a) {
            TimeSpec iv;
            iv.intervals.push_back({c(a), c(a + 1 + a % 2)});
            counts = counts && time_conditions(iv, t, l.domains.constants()).size() == 5
                     && time_partition_criterion(l.model, l.domains, iv).sccs.size() == 5;
            TimeSpec pt;
            pt.points.push_back(c(a));
            counts = counts && time_conditions(pt, t, l.domains.constants()).size() == 3
                     && time_partition_criterion(l.model, l.domains, pt).sccs.size() == 3;
        }
        auto cat = catalog(l, "elevator.crit", "elevator.parts");
        const auto& time = cat.applications.back();
        const char* expected[] = {"t = 0",   "0 < t & t < TD1",  "t = TD1", "TD1 < t & t < TD2", "t = TD2",
                                  "TD2 < t & t < TA", "t = TA", "TA < t & t < TGF", "t = TGF", "t > TGF"};
        std::size_t same = 0;
        for (std::size_t i = 0; i < 10 && i < time.sccs.size(); ++i)
            same += canon(time.sccs[i].in_pairs) == canon(pred(l.model, expected[i]));
        return Outcome{counts && time.sccs.size() == 10 && same == 10,
                       std::string("interval 5 / point 3: ") + (counts ? "yes" : "no") + ", elevator "
                           + std::to_string(same) + "/10 conditions"};
    });

    criterion(6, "toy combination", kToy, [] {
        auto l = load("toy");
        std::vector<Scc> base;
        const char* inis[] = {"n <= 10", "m = ON", "m = OFF"};
        for (int i = 0; i < 3; ++i) {
            Scc s;
            s.id = i + 1;
            s.ini_st = pred(l.model, inis[i]);
            s.in_pairs = pred(l.model, "x = 1");
            base.push_back(s);
        }
        auto r = combine_and_prune(base, all_pairs({1, 2, 3}), l.domains);
        bool dropped_on_off = !r.report.outcomes.empty() && r.report.outcomes.back().group == std::vector<int>{2, 3}
                              && r.report.outcomes.back().status == SatStatus::Unsat;
        return Outcome{r.report.kept == 2 && r.report.dropped == 1 && dropped_on_off,
                       std::to_string(r.report.kept) + " kept, " + std::to_string(r.report.dropped)
                           + " dropped (ON & OFF " + (dropped_on_off ? "unsat" : "not dropped") + ")"};
    });

    criterion(7, "DNF of n*m > 0 => n > m", kDnf, [] {
        auto n = Expr::var(Symbol("n"), VarRole::State, Sort::integer());
        auto m = Expr::var(Symbol("m"), VarRole::State, Sort::integer());
        auto zero = Expr::constant(Value::integer(0));
        auto prod = Pred::compare(CmpOp::Gt, Expr::binary(ExprKind::Mul, n, m), zero);
        auto gt = Pred::compare(CmpOp::Gt, n, m);
        auto clauses = to_dnf(Pred::implies(prod, gt));
        bool shape = clauses.size() == 2 && clauses[0].literals.size() == 1 && clauses[1].literals.size() == 1
                     && canon(clauses[0].to_pred()) == canon(Pred::negation(prod))
                     && canon(clauses[1].to_pred()) == canon(gt);
        auto back = from_dnf(clauses);
        int wrong = 0;
        for (int i = -3; i <= 3; ++i)
            for (int j = -3; j <= 3; ++j) {
                Env env;
                env.set(Symbol("n"), Value::integer(i));
                env.set(Symbol("m"), Value::integer(j));
                wrong += holds(*back, env) != (!(i * j > 0) || i > j);
            }
        return Outcome{shape && wrong == 0, std::to_string(clauses.size()) + " clauses, "
                                                + std::to_string(wrong) + "/49 truth-table mismatches"};
    });

    criterion(8, "soda missing case is found", kUndefined, [] {
        std::string cmd = std::string(DEVS_SCC_CLI) + " simulate --model " + fixture("soda.devs") + " --bounds "
                          + fixture("soda.bounds") + " " + fixture("soda_undefined.json") + " >/dev/null 2>&1";
        int rc = run(cmd);
        auto l = load("soda");
        Simulator sim(l.model, l.domains.constants(), l.domains.fn());
        auto t = sim.run_config(config_from_json(l.model, Json::parse(read_file(fixture("soda_undefined.json")))));
        bool undefined = t.failure && t.failure->kind == SimErrorKind::UndefinedTransition;
        return Outcome{rc == 3 && undefined, std::string("exit ") + std::to_string(rc) + ", "
                                                 + (undefined ? "undefined transition" : "no finding")};
    });

    criterion(9, "property suites", kProperties, [] {
        int rc = run(std::string(DEVS_SCC_UNIT) + " --test-case='property:*' --no-intro=true >/dev/null 2>&1");
        return Outcome{rc == 0, rc == 0 ? "all properties hold" : "unit_tests exit " + std::to_string(rc)};
    });

    criterion(10, "campaign determinism", kDeterminism, [] {
        namespace fs = std::filesystem;
        auto root = fs::temp_directory_path() / ("devs_scc_accept_" + std::to_string(::getpid()));
        std::string base = std::string(DEVS_SCC_CLI) + " campaign --model " + fixture("elevator.devs") + " --bounds "
                           + fixture("elevator.bounds") + " --criteria " + fixture("elevator.crit") + " --parts "
                           + fixture("elevator.parts") + " --plan " + fixture("elevator_plan.json")
                           + " --probe-k 3 --out ";
        run(base + (root / "a").string() + " >/dev/null 2>&1");
        run(base + (root / "b").string() + " >/dev/null 2>&1");
        auto a = read_file((root / "a" / "report.json").string());
        auto b = read_file((root / "b" / "report.json").string());
        fs::remove_all(root);
        return Outcome{!a.empty() && a == b, std::to_string(a.size()) + " bytes, " + (a == b ? "identical" : "differ")};
    });

    return failures == 0 ? 0 : 1;
}
