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
#ifndef DEVS_SCC_CRITERIA_HPP
#define DEVS_SCC_CRITERIA_HPP

#include "devs_scc/bounds.hpp"
#include "devs_scc/scc.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace devs_scc {

class CriterionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Output of one criterion application. Ids are assigned when results are merged into a catalog.
struct CriterionResult {
    std::string criterion;
    std::string target;
    std::vector<Scc> sccs;
    std::size_t infeasible = 0;  ///< cells dropped as empty within bounds
    std::size_t duplicates = 0;  ///< classes equal to an earlier one of the same application
    std::vector<std::string> notes;
};

CriterionResult cases_criterion(const Model& m, const Domains& d, bool include_otherwise);

/// One class per element of each target: `x` or a state variable with an enumerated (or extended) sort.
CriterionResult extensional_criterion(const Model& m, const std::vector<Symbol>& targets);

/// One class per DNF clause of a comprehension predicate over state variables, x and t.
CriterionResult intentional_criterion(const Model& m, const Domains& d, const PredPtr& comprehension);

struct StandardPartition {
    std::string name;
    std::vector<ExprPtr> params;  ///< formal operands (Param variables)
    std::vector<PredPtr> cells;

    std::size_t arity() const { return params.size(); }
    std::vector<PredPtr> instantiate(const std::vector<ExprPtr>& operands) const;
};

/// Tables for <, <=, >, >=, =, +, -, *, /, div (nine sign cells) and min (three cells).
const std::vector<StandardPartition>& builtin_partitions();

struct PartitionRegistry {
    std::vector<StandardPartition> user;
    /// User tables shadow built-ins of the same name.
    const StandardPartition* find(std::string_view name) const;
};

struct PartitionHealth {
    bool disjoint = true;
    bool exhaustive = true;
    std::size_t points = 0;
    std::optional<Env> overlap;  ///< a point in two cells
    std::optional<Env> gap;      ///< a point in no cell
    bool ok() const { return disjoint && exhaustive; }
};

/// Every operand ranges over `grid`; each point must fall in exactly one cell.
PartitionHealth check_partition(const StandardPartition& sp, const std::vector<Value>& grid);

/// Where a standard partition is applied: the n-th occurrence of `op` in a case of a function.
struct OccurrenceRef {
    FnKind fn = FnKind::Dint;
    int case_id = 1;
    std::string op;
    std::size_t nth = 1;

    std::string to_string() const;
};

CriterionResult standard_partition_criterion(const Model& m, const Domains& d, const OccurrenceRef& where,
                                             const StandardPartition& table);

/// Product partition of `inner` feeding operand `operand` of `outer` through `composed`
/// (an expression over inner's parameters). With a grid, cells empty on it are pruned.
StandardPartition domain_propagation(const StandardPartition& outer, const StandardPartition& inner,
                                     std::size_t operand, const ExprPtr& composed,
                                     const std::vector<Value>* prune_grid = nullptr);

struct TimeSpec {
    std::vector<std::pair<ExprPtr, ExprPtr>> intervals;
    std::vector<ExprPtr> points;
};

/// 2k+1 conditions on t over the k distinct endpoints, in increasing time order.
/// Throws CriterionError when an interval is empty under the constant bindings.
std::vector<PredPtr> time_conditions(const TimeSpec& spec, const ExprPtr& t, const Env& constants);

/// Time conditions as classes; conditions unsatisfiable for t >= 0 are dropped.
CriterionResult time_partition_criterion(const Model& m, const Domains& d, const TimeSpec& spec);

} // namespace devs_scc

#endif
