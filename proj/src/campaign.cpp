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

#include <filesystem>
#include <fstream>

namespace devs_scc {

int CampaignResult::exit_code() const
{
    bool exec = !stage_errors.empty();
    for (const auto& f : findings) {
        if (f.kind == sim_error_name(SimErrorKind::UndefinedTransition))
            return 3;
        exec = true;
    }
    return exec ? 4 : 0;
}

CampaignResult run_campaign(const Model& m, const Bounds& b, const CampaignInputs& in)
{
    CampaignResult res;
    res.model_name = m.name.str();
    res.validation = validate_model(m, &b);
    Domains d = make_domains(m, b);

    PartitionRegistry registry;
    registry.user = in.partitions;
    for (const auto& p : in.criteria.partitions)
        registry.user.push_back(p);

    // criteria are pure functions of the model, so they run side by side
    const auto& sels = in.criteria.selections;
    std::vector<std::optional<CriterionResult>> applied(sels.size());
    std::vector<std::string> errors(sels.size());
    parallel_for(sels.size(), in.jobs, [&](std::size_t i) {
        auto sel = sels[i];
        if (in.include_otherwise && sel.kind == CriterionSelection::Kind::Cases)
            sel.include_otherwise = true;
        try {
            applied[i] = apply_selection(sel, m, d, registry);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    });
    std::vector<CriterionResult> results;
    for (std::size_t i = 0; i < sels.size(); ++i) {
        if (applied[i])
            results.push_back(std::move(*applied[i]));
        else
            res.stage_errors.push_back("criteria: selection " + std::to_string(i + 1) + ": " + errors[i]);
    }
    res.base = build_catalog(std::move(results));

    std::vector<Scc> catalog = res.base.sccs;
    if (in.plan) {
        try {
            auto plan = plan_from_json(*in.plan, res.base.sccs);
            auto cr = combine_and_prune(res.base.sccs, plan, d, in.jobs);
            catalog = std::move(cr.catalog);
            res.combination = std::move(cr.report);
        } catch (const std::exception& e) {
            res.stage_errors.push_back(std::string("combine: ") + e.what());
        }
    }

    Simulator sim(m, d.constants(), d.fn());
    res.records.resize(catalog.size());
    if (in.until <= Stage::Combine) {
        for (std::size_t i = 0; i < catalog.size(); ++i)
            res.records[i].scc = catalog[i];
        return res;
    }
    parallel_for(catalog.size(), in.jobs, [&](std::size_t i) {
        auto& rec = res.records[i];
        rec.scc = catalog[i];
        try {
            rec.config = select_config(m, rec.scc, d);
            rec.trace = sim.run_config(*rec.config);
        } catch (const SelectionError& e) {
            rec.selection_error = e.what();
        }
        if (in.probe_k > 0 && rec.config)
            rec.probe = uniformity_probe(sim, rec.scc, d, in.probe_k);
    });
    for (const auto& rec : res.records)
        if (rec.trace && rec.trace->failure)
            res.findings.push_back(SimFinding{rec.scc.id, "config", sim_error_name(rec.trace->failure->kind),
                                           rec.trace->failure->message});

    if (in.until == Stage::Select)
        return res;
    res.sequences = build_sequences(m, catalog, d, sim);
    for (const auto& q : res.sequences)
        if (q.failure && q.failure->kind != "selection")
            res.findings.push_back(SimFinding{q.failure->scc_id, "sequence", q.failure->kind, q.failure->message});
    return res;
}

Json catalog_json(const CampaignResult& r)
{
    Json j;
    j["schema"] = kSchema;
    j["model"] = r.model_name;
    j["applications"] = Json::array();
    for (const auto& a : r.base.applications)
        j["applications"].push_back(application_json(a));
    j["sccs"] = Json::array();
    for (const auto& rec : r.records)
        j["sccs"].push_back(scc_json(rec.scc));
    return j;
}

Json configs_json(const Model& m, const CampaignResult& r)
{
    Json j;
    j["schema"] = kSchema;
    j["model"] = r.model_name;
    j["configs"] = Json::array();
    for (const auto& rec : r.records) {
        if (rec.config)
            j["configs"].push_back(config_json(m, *rec.config));
    }
    return j;
}

Json sequences_json(const Model& m, const CampaignResult& r)
{
    Json j;
    j["schema"] = kSchema;
    j["model"] = r.model_name;
    j["sequences"] = Json::array();
    for (const auto& q : r.sequences)
        j["sequences"].push_back(sequence_json(m, q));
    return j;
}

Json report_json(const Model& m, const CampaignResult& r)
{
    Json j;
    j["schema"] = kSchema;
    j["model"] = r.model_name;

    Json counts;
    Json per = Json::array();
    for (const auto& a : r.base.applications)
        per.push_back({{"criterion", a.criterion}, {"target", a.target}, {"count", a.sccs.size()}});
    counts["criteria"] = per;
    counts["base"] = r.base.sccs.size();
    std::size_t attempted = 0, dropped = 0;
    if (r.combination) {
        attempted = r.combination->outcomes.size();
        dropped = r.combination->dropped;
        j["combination"] = combination_json(*r.combination);
    }
    counts["combined"] = attempted;
    counts["dropped"] = dropped;
    counts["catalog"] = r.catalog_size();
    counts["reconciled"] = r.base.sccs.size() + attempted - dropped == r.catalog_size();
    j["counts"] = counts;

    j["validation"] = {{"cases", r.validation.summary()},
                       {"errors", Json::array()},
                       {"warnings", Json::array()},
                       {"notes", Json::array()}};
    for (const auto& f : r.validation.errors)
        j["validation"]["errors"].push_back(f.to_string());
    for (const auto& f : r.validation.warnings)
        j["validation"]["warnings"].push_back(f.to_string());
    for (const auto& f : r.validation.notes)
        j["validation"]["notes"].push_back(f.to_string());

    j["sccs"] = Json::array();
    for (const auto& rec : r.records) {
        Json s = scc_json(rec.scc);
        s["config"] = rec.config ? config_json(m, *rec.config) : Json(nullptr);
        if (!rec.selection_error.empty())
            s["selection_error"] = rec.selection_error;
        if (rec.trace) {
            s["signature"] = trace_signature(*rec.trace);
            s["failure"] = rec.trace->failure ? failure_json(*rec.trace->failure) : Json(nullptr);
        }
        if (rec.probe)
            s["probe"] = probe_json(*rec.probe);
        j["sccs"].push_back(std::move(s));
    }

    Json seqs = Json::array();
    for (const auto& q : r.sequences) {
        Json s = {{"covered", q.covered}, {"steps", q.steps.size()}};
        s["failure"] = q.failure ? Json(q.failure->kind) : Json(nullptr);
        seqs.push_back(std::move(s));
    }
    j["sequences"] = seqs;

    j["findings"] = Json::array();
    for (const auto& f : r.findings)
        j["findings"].push_back({{"scc", f.scc_id}, {"source", f.source}, {"kind", f.kind}, {"message", f.message}});

    Json nonuniform = Json::array();
    for (const auto& rec : r.records)
        if (rec.probe && !rec.probe->uniform)
            nonuniform.push_back(rec.scc.id);
    j["non_uniform"] = nonuniform;
    j["stage_errors"] = r.stage_errors;
    j["exit_code"] = r.exit_code();
    return j;
}

namespace {

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

void write_text(const std::filesystem::path& p, const std::string& text)
{
    std::ofstream f(p, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot write " + p.string());
    f << text;
}

} // namespace

std::string summary_csv(const Model& m, const CampaignResult& r)
{
    std::string out = "id,criterion,target,state,event,time,signature,failure\n";
    for (const auto& rec : r.records) {
        std::string state, event, time, sig, fail;
        if (rec.config) {
            state = "(";
            for (std::size_t i = 0; i < rec.config->state.size(); ++i)
                state += (i ? " " : "") + rec.config->state[i].to_string();
            state += ")";
            event = rec.config->input.event.to_string();
            time = rec.config->input.time.to_string();
        } else {
            fail = "selection: " + rec.selection_error;
        }
        if (rec.trace) {
            sig = trace_signature(*rec.trace);
            if (rec.trace->failure)
                fail = sim_error_name(rec.trace->failure->kind);
        }
        out += std::to_string(rec.scc.id) + "," + csv_field(rec.scc.provenance.criterion) + "," +
               csv_field(rec.scc.provenance.target) + "," + csv_field(state) + "," + csv_field(event) + "," +
               csv_field(time) + "," + csv_field(sig) + "," + csv_field(fail) + "\n";
    }
    (void)m;
    return out;
}

std::string traces_jsonl(const Model& m, const CampaignResult& r)
{
    std::string out;
    for (const auto& rec : r.records) {
        if (!rec.trace)
            continue;
        for (const auto& ev : rec.trace->events) {
            Json j = trace_event_json(m, ev);
            j["scc"] = rec.scc.id;
            out += j.dump() + "\n";
        }
        if (rec.trace->failure) {
            Json j = failure_json(*rec.trace->failure);
            j["scc"] = rec.scc.id;
            j["kind"] = "failure";
            j["error"] = sim_error_name(rec.trace->failure->kind);
            out += j.dump() + "\n";
        }
    }
    return out;
}

void write_campaign(const Model& m, const CampaignResult& r, const std::string& dir)
{
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    fs::path root(dir);
    Json manifest;
    manifest["schema"] = kSchema;
    manifest["files"] = Json::array();
    manifest["failures"] = Json::array();
    auto emit = [&](const char* name, auto&& produce) {
        try {
            write_text(root / name, produce());
            manifest["files"].push_back(name);
        } catch (const std::exception& e) {
            manifest["failures"].push_back({{"file", name}, {"error", e.what()}});
        }
    };
    emit("catalog.json", [&] { return dump(catalog_json(r)); });
    emit("configs.json", [&] { return dump(configs_json(m, r)); });
    emit("sequences.json", [&] { return dump(sequences_json(m, r)); });
    emit("traces.jsonl", [&] { return traces_jsonl(m, r); });
    emit("summary.csv", [&] { return summary_csv(m, r); });
    emit("report.json", [&] { return dump(report_json(m, r)); });
    for (const auto& e : r.stage_errors)
        manifest["failures"].push_back({{"stage", e}});
    write_text(root / "manifest.json", dump(manifest));
}

} // namespace devs_scc
