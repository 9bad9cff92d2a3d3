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
#ifndef DEVS_SCC_VALIDATE_HPP
#define DEVS_SCC_VALIDATE_HPP

#include "devs_scc/bounds.hpp"
#include "devs_scc/model.hpp"

#include <string>
#include <vector>

namespace devs_scc {

struct Finding {
    std::string where;  ///< e.g. "dext case 3", "ta", "state"
    std::string message;

    std::string to_string() const;
};

struct ValidationReport {
    std::vector<Finding> errors;
    std::vector<Finding> warnings;
    std::vector<Finding> notes;
    std::size_t dext_cases = 0;
    std::size_t dint_cases = 0;
    std::size_t lambda_cases = 0;
    /// State variables that look time-interacting but lack `@time`.
    std::vector<Symbol> suggested_time_vars;

    bool usable() const { return errors.empty(); }
    /// "18/18/25 cases"
    std::string summary() const;
};

/// Static checks. With bounds, also reports guard overlap and gaps found by enumeration.
ValidationReport validate_model(const Model& m, const Bounds* bounds = nullptr);

} // namespace devs_scc

#endif
