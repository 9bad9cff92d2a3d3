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
#ifndef DEVS_SCC_SYMBOLIC_HPP
#define DEVS_SCC_SYMBOLIC_HPP

#include "devs_scc/bounds.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace devs_scc {

/// Conjunction of literals (atoms or negated atoms). Empty means true.
struct DnfClause {
    std::vector<PredPtr> literals;
    PredPtr to_pred() const;
};

class DnfCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

PredPtr to_nnf(const PredPtr& p);

/// Distributive DNF. Clauses containing false or a complementary pair are
/// dropped; an empty result means the predicate is false.
std::vector<DnfClause> to_dnf(const PredPtr& p, std::size_t cap = 4096);

PredPtr from_dnf(const std::vector<DnfClause>& clauses);

enum class SatStatus { Sat, Unsat, Unknown };

const char* sat_status_name(SatStatus s);

struct SatResult {
    SatStatus status = SatStatus::Unknown;
    Env witness;
    std::size_t explored = 0;
};

/// Search order: the given names first, then remaining free variables in
/// domain declaration order. Names without a domain raise DomainError.
std::vector<Symbol> search_order(const PredPtr& p, const Domains& d, const std::vector<Symbol>& preferred = {});

/// Lexicographically least witness of `p` over the free variables in `order`.
/// `fixed` holds variables that are already decided.
SatResult satisfiable(const PredPtr& p, const Domains& d, const std::vector<Symbol>& order, const Env* fixed = nullptr,
                      std::size_t budget = 0);

inline SatResult satisfiable(const PredPtr& p, const Domains& d)
{
    return satisfiable(p, d, search_order(p, d));
}

/// Up to `k` distinct witnesses spread over the grid. Sample j rotates the
/// value order of every variable by a golden-ratio offset derived from
/// `seed` and j, then takes the first witness in that order.
std::vector<Env> sample_witnesses(const PredPtr& p, const Domains& d, const std::vector<Symbol>& order, std::size_t k,
                                  std::uint64_t seed = 0);

/// Exists(drop, p), with the quantifier pushed onto the conjuncts that use
/// the dropped variables. Groups that hold everywhere within bounds become
/// true; closed unsatisfiable groups make the result false.
PredPtr project_exists(const PredPtr& p, const std::vector<ExprPtr>& drop, const Domains& d);

/// Exhaustive comparison of two predicates over the free variables of both.
/// Returns an assignment where they differ, if any.
std::optional<Env> find_difference(const PredPtr& a, const PredPtr& b, const Domains& d, std::size_t limit = 100000);

} // namespace devs_scc

#endif
