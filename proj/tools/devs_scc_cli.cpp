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
#include "devs_scc/campaign.hpp"
#include "devs_scc/parallel.hpp"
#include "devs_scc/parser.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

using namespace devs_scc;

namespace {

enum Exit { kOk = 0, kParse = 2, kFinding = 3, kExec = 4 };

struct Common {
    std::string model;
    std::string bounds;
    std::optional<std::string> criteria;  ///< absent: the cases criterion
    std::string parts;
    std::string plan;
    std::string out;
    bool include_otherwise = false;
    std::size_t probe_k = 0;
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Model load(const std::string& path)
{
    auto text = read_file(path);
    auto r = parse_model(text);
    for (const auto& d : r.diagnostics)
        std::cerr << d.to_string(path) << "\n";
    if (!r.ok())
        throw InputError("model has errors");
    return std::move(*r.model);
}

Bounds load_bounds(const std::string& path)
{
    return path.empty() ? Bounds{} : parse_bounds(read_file(path));
}

// --criteria takes a file, or the statements themselves
CriteriaFile load_criteria(const Common& c, const Model& m)
{
    if (!c.criteria)
        return parse_criteria(c.include_otherwise ? "cases otherwise;" : "cases;", m);
    std::error_code ec;
    if (!c.criteria->empty() && std::filesystem::is_regular_file(*c.criteria, ec))
        return parse_criteria(read_file(*c.criteria), m);
    return parse_criteria(*c.criteria, m);
}

CampaignInputs inputs(const Common& c, const Model& m)
{
    CampaignInputs in;
    in.criteria = load_criteria(c, m);
    if (!c.parts.empty())
        in.partitions = parse_partitions(read_file(c.parts));
    if (!c.plan.empty())
        in.plan = Json::parse(read_file(c.plan));
    in.include_otherwise = c.include_otherwise;
    in.probe_k = c.probe_k;
    in.jobs = default_jobs();
    return in;
}

void emit(const Common& c, const std::string& text)
{
    if (c.out.empty() || c.out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f)
        throw InputError("cannot write " + c.out);
    f << text;
}

int cmd_parse(const Common& c)
{
    auto text = read_file(c.model);
    auto r = parse_model(text);
    for (const auto& d : r.diagnostics)
        std::cerr << d.to_string(c.model) << "\n";
    if (!r.ok())
        return kParse;
    Bounds b;
    if (!c.bounds.empty())
        b = load_bounds(c.bounds);
    auto v = validate_model(*r.model, c.bounds.empty() ? nullptr : &b);
    for (const auto& f : v.errors)
        std::cerr << "error: " << f.to_string() << "\n";
    for (const auto& f : v.warnings)
        std::cerr << "warning: " << f.to_string() << "\n";
    for (const auto& f : v.notes)
        std::cerr << "note: " << f.to_string() << "\n";
    std::cout << r.model->name.str() << ": " << v.summary() << "\n";
    return v.usable() ? kOk : kParse;
}

int cmd_stage(const Common& c, const std::string& stage)
{
    Model m = load(c.model);
    Bounds b = load_bounds(c.bounds);
    auto in = inputs(c, m);
    if (stage == "criteria") {
        in.plan.reset();
        in.until = Stage::Criteria;
    } else if (stage == "combine") {
        in.until = Stage::Combine;
    } else if (stage == "select") {
        in.until = Stage::Select;
    } else {
        in.until = Stage::Sequence;
    }
    auto r = run_campaign(m, b, in);
    for (const auto& e : r.stage_errors)
        std::cerr << "error: " << e << "\n";
    if (stage == "criteria" || stage == "combine") {
        Json j = catalog_json(r);
        if (r.combination)
            j["combination"] = combination_json(*r.combination);
        emit(c, dump(j));
    } else if (stage == "select") {
        Json j = configs_json(m, r);
        if (c.probe_k > 0) {
            j["probes"] = Json::array();
            for (const auto& rec : r.records)
                if (rec.probe)
                    j["probes"].push_back(probe_json(*rec.probe));
        }
        emit(c, dump(j));
    } else {
        emit(c, dump(sequences_json(m, r)));
    }
    return r.stage_errors.empty() ? kOk : kExec;
}

int cmd_campaign(const Common& c)
{
    Model m = load(c.model);
    Bounds b = load_bounds(c.bounds);
    auto r = run_campaign(m, b, inputs(c, m));
    if (c.out.empty()) {
        std::cout << dump(report_json(m, r));
    } else {
        write_campaign(m, r, c.out);
        std::cout << r.model_name << ": " << r.catalog_size() << " classes, " << r.sequences.size() << " sequences, "
                  << r.findings.size() << " findings\n";
    }
    for (const auto& e : r.stage_errors)
        std::cerr << "error: " << e << "\n";
    return r.exit_code();
}

// traces of configs and sequences read back from JSON
int cmd_simulate(const Common& c, const std::string& input)
{
    Model m = load(c.model);
    Bounds b = load_bounds(c.bounds);
    Domains d = make_domains(m, b);
    Simulator sim(m, d.constants(), d.fn());
    Json j = Json::parse(read_file(input));

    std::string lines;
    bool undefined = false, failed = false;
    auto note = [&](const SimFailure& f, int scc) {
        (f.kind == SimErrorKind::UndefinedTransition ? undefined : failed) = true;
        std::cerr << "SCC_" << scc << ": " << sim_error_name(f.kind) << ": " << f.message << "\n";
        Json e = failure_json(f);
        e["scc"] = scc;
        e["error"] = e["kind"];
        e["kind"] = "failure";
        lines += e.dump() + "\n";
    };
    auto record = [&](const TraceEvent& ev, int scc) {
        Json e = trace_event_json(m, ev);
        e["scc"] = scc;
        lines += e.dump() + "\n";
    };

    if (j.contains("sequences")) {
        for (const auto& q : j.at("sequences")) {
            const auto& steps = q.at("steps");
            if (steps.empty())
                continue;
            SimState st;
            bool first = true;
            for (const auto& sj : steps) {
                auto cfg = config_from_json(m, sj);
                try {
                    if (first)
                        st = sim.init(cfg.state);
                    first = false;
                    std::optional<InputPair> in;
                    if (!cfg.input.event.is_tau())
                        in = InputPair{cfg.input.event, Value(st.last + cfg.input.time.number())};
                    auto r = sim.step(st, in);
                    for (const auto& ev : r.events)
                        record(ev, cfg.scc_id);
                    st = r.next;
                } catch (const SimError& e) {
                    note(SimFailure{e.kind(), e.what(), st.last}, cfg.scc_id);
                    break;
                }
            }
        }
    } else {
        std::vector<SimulationConfig> configs;
        if (j.contains("configs"))
            for (const auto& cj : j.at("configs"))
                configs.push_back(config_from_json(m, cj));
        else
            configs.push_back(config_from_json(m, j));
        for (const auto& cfg : configs) {
            auto t = sim.run_config(cfg);
            for (const auto& ev : t.events)
                record(ev, cfg.scc_id);
            if (t.failure)
                note(*t.failure, cfg.scc_id);
        }
    }
    emit(c, lines);
    if (undefined)
        return kFinding;
    return failed ? kExec : kOk;
}

int cmd_report(const std::string& path)
{
    namespace fs = std::filesystem;
    fs::path p(path);
    if (fs::is_directory(p))
        p /= "report.json";
    Json r = Json::parse(read_file(p.string()));
    if (r.value("schema", "") != kSchema)
        throw InputError(p.string() + ": not a devs-scc report");
    const auto& k = r.at("counts");
    std::cout << "model " << r.at("model").get<std::string>() << " (" << r.at("validation").at("cases").get<std::string>()
              << ")\n";
    for (const auto& a : k.at("criteria"))
        std::cout << "  " << a.at("criterion").get<std::string>() << " " << a.at("target").get<std::string>() << ": "
                  << a.at("count") << "\n";
    std::cout << "base " << k.at("base") << ", combined " << k.at("combined") << ", dropped " << k.at("dropped")
              << ", catalog " << k.at("catalog") << (k.at("reconciled").get<bool>() ? "" : " (counts do not reconcile)")
              << "\n";
    std::cout << "sequences " << r.at("sequences").size() << "\n";
    for (const auto& f : r.at("findings"))
        std::cout << "  SCC_" << f.at("scc") << " [" << f.at("source").get<std::string>() << "] "
                  << f.at("kind").get<std::string>() << ": " << f.at("message").get<std::string>() << "\n";
    if (!r.at("non_uniform").empty())
        std::cout << "non-uniform classes: " << r.at("non_uniform").dump() << "\n";
    for (const auto& e : r.at("stage_errors"))
        std::cout << "stage error: " << e.get<std::string>() << "\n";
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Structured simulation classes for DEVS atomic models"};
    app.require_subcommand(1);
    Common c;
    std::string input;

    auto model_opts = [&](CLI::App* sub, bool with_criteria) {
        sub->add_option("--model", c.model, "model file (.devs)")->required()->check(CLI::ExistingFile);
        sub->add_option("--bounds", c.bounds, "bounds file")->check(CLI::ExistingFile);
        if (with_criteria) {
            sub->add_option("--criteria", c.criteria, "criteria file, or statements inline");
            sub->add_option("--parts", c.parts, "partition tables")->check(CLI::ExistingFile);
            sub->add_flag("--include-otherwise", c.include_otherwise, "give the otherwise cases a class too");
        }
        sub->add_option("--out", c.out, "output file or directory");
    };

    auto* parse = app.add_subcommand("parse", "parse and validate a model");
    parse->add_option("model,--model", c.model, "model file")->required()->check(CLI::ExistingFile);
    parse->add_option("--bounds", c.bounds, "bounds file, enables overlap checks")->check(CLI::ExistingFile);

    auto* criteria = app.add_subcommand("criteria", "apply partition criteria");
    model_opts(criteria, true);
    auto* combine = app.add_subcommand("combine", "combine classes and prune empty ones");
    model_opts(combine, true);
    combine->add_option("--plan", c.plan, "combination plan (JSON)")->required()->check(CLI::ExistingFile);
    auto* select = app.add_subcommand("select", "pick one configuration per class");
    model_opts(select, true);
    select->add_option("--plan", c.plan, "combination plan (JSON)")->check(CLI::ExistingFile);
    select->add_option("--probe-k", c.probe_k, "witnesses per class for the uniformity probe");
    auto* sequence = app.add_subcommand("sequence", "chain configurations into simulation sequences");
    model_opts(sequence, true);
    sequence->add_option("--plan", c.plan, "combination plan (JSON)")->check(CLI::ExistingFile);
    auto* simulate = app.add_subcommand("simulate", "run configurations or sequences");
    model_opts(simulate, false);
    simulate->add_option("input", input, "config, configs or sequences (JSON)")->required()->check(CLI::ExistingFile);
    auto* campaign = app.add_subcommand("campaign", "criteria, combination, selection, sequences and report");
    model_opts(campaign, true);
    campaign->add_option("--plan", c.plan, "combination plan (JSON)")->check(CLI::ExistingFile);
    campaign->add_option("--probe-k", c.probe_k, "witnesses per class for the uniformity probe");
    auto* report = app.add_subcommand("report", "summarize a campaign report");
    report->add_option("path", input, "report.json or campaign output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kParse;
    }

    try {
        if (*parse)
            return cmd_parse(c);
        if (*criteria)
            return cmd_stage(c, "criteria");
        if (*combine)
            return cmd_stage(c, "combine");
        if (*select)
            return cmd_stage(c, "select");
        if (*sequence)
            return cmd_stage(c, "sequence");
        if (*simulate)
            return cmd_simulate(c, input);
        if (*campaign)
            return cmd_campaign(c);
        if (*report)
            return cmd_report(input);
    } catch (const SimError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExec;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    }
    return kOk;
}
