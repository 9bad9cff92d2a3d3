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
#ifndef DEVS_SCC_PARSER_HPP
#define DEVS_SCC_PARSER_HPP

#include "devs_scc/bounds.hpp"
#include "devs_scc/model.hpp"
#include "devs_scc/reader.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace devs_scc {

struct Diagnostic {
    enum class Severity { Error, Warning };
    Severity severity = Severity::Error;
    SourcePos pos;
    std::string message;

    std::string to_string(std::string_view path = {}) const;
};

struct ModelParse {
    std::optional<Model> model;
    std::vector<Diagnostic> diagnostics;
    bool ok() const { return model.has_value(); }
};

/// Parses a `.devs` model. Syntax and name errors come back as positioned
/// diagnostics; no exception escapes.
ModelParse parse_model(std::string_view text);

/// Throwing variant for callers that treat a bad model as fatal.
Model load_model(std::string_view text);

std::string render_model(const Model& m);

/// Scope for predicates over a model's state, with x and t when asked.
Scope model_scope(const Model& m, bool with_input, bool with_time);

PredPtr parse_predicate(std::string_view text, const Scope& scope);

Bounds parse_bounds(std::string_view text);

std::string read_file(const std::string& path);

} // namespace devs_scc

#endif
