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
#ifndef DEVS_SCC_CAMPAIGN_HPP
#define DEVS_SCC_CAMPAIGN_HPP

#include "devs_scc/json_io.hpp"
#include "devs_scc/validate.hpp"

#include <optional>
#include <string>
#include <vector>

namespace devs_scc {

enum class Stage { Criteria, Combine, Select, Sequence, All };

struct CampaignInputs {
    CriteriaFile criteria;
    std::vector<StandardPartition> partitions;  ///< user tables besides the inline ones
    std::optional<Json> plan;
    bool include_otherwise = false;  ///< upgrades every `cases` selection
    std::size_t probe_k = 0;         ///< 0 disables the uniformity probe
    unsigned jobs = 1;
    Stage until = Stage::All;  ///< later stages are skipped
};

struct SccRecord {
    Scc scc;
    std::optional<SimulationConfig> config;
    std::string selection_error;
    std::optional<Trace> trace;
    std::optional<ProbeReport> probe;
};

struct SimFinding {
    int scc_id = 0;
    std::string source;  ///< "config" or "sequence"
    std::string kind;
    std::string message;
};

struct CampaignResult {
    std::string model_name;
    ValidationReport validation;
    Catalog base;
    std::optional<CombinationReport> combination;
    std::vector<SccRecord> records;  ///< whole catalog in id order
    std::vector<SimulationSequence> sequences;
    std::vector<SimFinding> findings;
    std::vector<std::string> stage_errors;

    std::size_t catalog_size() const { return records.size(); }
    /// 3 when an undefined transition was found, 4 for other execution or stage errors, else 0.
    int exit_code() const;
};

CampaignResult run_campaign(const Model& m, const Bounds& b, const CampaignInputs& in);

Json catalog_json(const CampaignResult& r);
Json configs_json(const Model& m, const CampaignResult& r);
Json sequences_json(const Model& m, const CampaignResult& r);
Json report_json(const Model& m, const CampaignResult& r);
/// One row per class: id, criterion, config, signature, failure.
std::string summary_csv(const Model& m, const CampaignResult& r);
/// One trace event per line, tagged with its class id.
std::string traces_jsonl(const Model& m, const CampaignResult& r);

/// Writes every artifact under `dir` plus manifest.json listing them.
void write_campaign(const Model& m, const CampaignResult& r, const std::string& dir);

} // namespace devs_scc

#endif
