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
#ifndef DEVS_SCC_SELECTION_HPP
#define DEVS_SCC_SELECTION_HPP

#include "devs_scc/criteria.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace devs_scc {

/// `.parts` text: `partition "<" (a, b) { a < 0 & b < 0; ... }` blocks.
std::vector<StandardPartition> parse_partitions(std::string_view text);

/// One criterion application requested by a `.crit` file or the command line.
struct CriterionSelection {
    enum class Kind { Cases, Extensional, Intentional, Standard, Time };
    Kind kind = Kind::Cases;
    bool include_otherwise = false;
    std::vector<Symbol> targets;  ///< extensional
    PredPtr comprehension;        ///< intentional
    OccurrenceRef occurrence;     ///< standard
    std::string table;            ///< standard; empty selects the table named after the operator
    TimeSpec time;                ///< time
};

struct CriteriaFile {
    std::vector<CriterionSelection> selections;
    std::vector<StandardPartition> partitions;  ///< inline `partition` blocks
};

/// `.crit` text: statements `cases [otherwise];`, `extensional x, eng;`, `intentional <pred>;`,
/// `standard dint.6 ">" [#n] [using "cmp"];`, `time [0, TD1], TA;` and partition blocks.
CriteriaFile parse_criteria(std::string_view text, const Model& m);

CriterionResult apply_selection(const CriterionSelection& sel, const Model& m, const Domains& d,
                                const PartitionRegistry& registry);

/// Classes of all applications with ids 1..n in application order.
struct Catalog {
    std::vector<CriterionResult> applications;  ///< ids filled in
    std::vector<Scc> sccs;

    const Scc* find(int id) const;
    int next_id() const;
};

Catalog build_catalog(std::vector<CriterionResult> results);

} // namespace devs_scc

#endif
