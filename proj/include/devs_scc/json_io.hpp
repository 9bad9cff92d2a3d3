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
#ifndef DEVS_SCC_JSON_IO_HPP
#define DEVS_SCC_JSON_IO_HPP

#include "devs_scc/algebra.hpp"
#include "devs_scc/selection.hpp"
#include "devs_scc/sequencer.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace devs_scc {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "devs-scc/1";

class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reads the DSL spelling of a value: numbers (`2`, `1.5`, `7/3`), `infinity`, literals, tuples.
Value parse_value(std::string_view text);

Json value_json(const Value& v);
/// Accepts a JSON number, or a string in DSL spelling.
Value value_from_json(const Json& j);

Json scc_json(const Scc& s);
Json state_json(const Model& m, const StateVec& s);
StateVec state_from_json(const Model& m, const Json& j);

Json config_json(const Model& m, const SimulationConfig& c);
SimulationConfig config_from_json(const Model& m, const Json& j);

Json trace_event_json(const Model& m, const TraceEvent& ev);
Json failure_json(const SimFailure& f);
Json trace_json(const Model& m, const Trace& t);
Json sequence_json(const Model& m, const SimulationSequence& q);
Json probe_json(const ProbeReport& p);
Json application_json(const CriterionResult& r);
Json combination_json(const CombinationReport& r);

/// `{"groups": [[1, 49], ...], "max_arity": 3, "budget": n}`, or `{"all_pairs": true}`.
CombinationPlan plan_from_json(const Json& j, const std::vector<Scc>& base);

/// Deterministic text: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);

} // namespace devs_scc

#endif
