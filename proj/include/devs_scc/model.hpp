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
#ifndef DEVS_SCC_MODEL_HPP
#define DEVS_SCC_MODEL_HPP

#include "devs_scc/ast.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace devs_scc {

struct SortAlias {
    Symbol name;
    SortPtr sort;
};

struct Constant {
    Symbol name;
    SortPtr sort;
    std::optional<Value> value;  ///< absent when supplied by a bounds file
};

struct StateVar {
    Symbol name;
    SortPtr sort;
    bool time_var = false;  ///< annotated `@time`: a timer decreased by elapsed time
};

/// Named contiguous range of state variables, e.g. `timers { at; dt1; }`.
struct StateGroup {
    Symbol name;
    std::size_t first = 0;
    std::size_t count = 0;
};

/// One of dext, dint or lambda: shared lets plus guarded cases.
struct TransitionFn {
    std::vector<LetDef> lets;
    std::vector<GuardedCase> cases;

    const GuardedCase* find(int id) const;
    bool has_otherwise() const;
    std::vector<const GuardedCase*> proper_cases() const;
};

enum class FnKind { Dext, Dint, Lambda };

const char* fn_name(FnKind k);
std::optional<FnKind> fn_from_name(std::string_view s);

struct Model {
    Symbol name;
    std::vector<SortAlias> aliases;
    std::vector<Constant> constants;
    std::vector<StateVar> state;
    std::vector<StateGroup> groups;
    SortPtr input;
    SortPtr output;
    std::vector<std::shared_ptr<const OpDef>> ops;
    ExprPtr ta;
    TransitionFn dext;
    TransitionFn dint;
    TransitionFn lambda;

    std::optional<std::size_t> state_index(Symbol name) const;
    const Constant* constant(Symbol name) const;
    const StateGroup* group(Symbol name) const;

    ExprPtr state_expr(std::size_t i) const;
    std::vector<ExprPtr> state_exprs() const;
    ExprPtr input_var() const;    ///< x, ranging over X and tau
    ExprPtr elapsed_var() const;  ///< e
    ExprPtr time_var() const;     ///< t
    SortPtr state_sort() const;   ///< tuple of the variable sorts
    SortPtr input_or_tau() const;

    const TransitionFn& function(FnKind k) const;
    TransitionFn& function(FnKind k);
};

bool models_equal(const Model& a, const Model& b);

/// Substitution replacing e by t in a dext guard.
Substitution elapsed_to_time(const Model& m);

/// Local let bindings of a function inlined into an expression or predicate.
Substitution let_substitution(const TransitionFn& fn);

/// Guard of a case with lets inlined (for symbolic use).
PredPtr inlined_guard(const TransitionFn& fn, const GuardedCase& c);

} // namespace devs_scc

#endif
