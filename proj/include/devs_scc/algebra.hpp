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
#ifndef DEVS_SCC_ALGEBRA_HPP
#define DEVS_SCC_ALGEBRA_HPP

#include "devs_scc/bounds.hpp"
#include "devs_scc/scc.hpp"
#include "devs_scc/symbolic.hpp"

#include <stdexcept>
#include <vector>

namespace devs_scc {

class PlanError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Conjunction of both classes, normalized; ancestry is the sorted union.
Scc intersect(const Scc& a, const Scc& b);

struct CombinationPlan {
    std::vector<std::vector<int>> groups;
    std::size_t max_arity = 2;
    std::size_t budget = 100'000;  ///< combinations attempted at most
};

/// Every pair of the given ids, in lexicographic order.
CombinationPlan all_pairs(const std::vector<int>& ids);

/// Throws PlanError for unknown ids, groups smaller than two or larger than max_arity.
void check_plan(const CombinationPlan& plan, const std::vector<Scc>& base);

struct CombinationOutcome {
    std::vector<int> group;
    SatStatus status = SatStatus::Unknown;
    int id = 0;  ///< id of the kept class; 0 when dropped
};

struct CombinationReport {
    std::size_t kept = 0;
    std::size_t dropped = 0;
    std::size_t unknown = 0;  ///< kept but flagged
    bool partial = false;     ///< budget ran out before every group was tried
    std::vector<CombinationOutcome> outcomes;
};

struct CombineResult {
    std::vector<Scc> catalog;  ///< base classes followed by kept combinations
    CombinationReport report;
};

/// Intersects each group; empty results within bounds are dropped, unknown ones kept and flagged.
/// New ids continue after the largest base id, in plan order.
CombineResult combine_and_prune(const std::vector<Scc>& base, const CombinationPlan& plan, const Domains& d,
                                unsigned jobs = 1);

} // namespace devs_scc

#endif
