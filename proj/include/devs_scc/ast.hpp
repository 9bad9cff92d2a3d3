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
#ifndef DEVS_SCC_AST_HPP
#define DEVS_SCC_AST_HPP

#include "devs_scc/sort.hpp"
#include "devs_scc/value.hpp"

#include <functional>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace devs_scc {

struct Expr;
struct Pred;
struct OpDef;
using ExprPtr = std::shared_ptr<const Expr>;
using PredPtr = std::shared_ptr<const Pred>;

/// Raised when a node cannot be given a sort.
class SortError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class VarRole {
    State,   ///< component of the model state
    Input,   ///< the external event x
    Elapsed, ///< elapsed time e
    Time,    ///< time t of an input pair
    Const,   ///< model constant such as TD1
    Local,   ///< let binding
    Param,   ///< formal parameter (operator definitions, partition tables)
};

const char* role_name(VarRole r);

enum class ExprKind { Const, Var, Neg, Add, Sub, Mul, Div, FloorDiv, Min, Max, Tuple, Proj, Call };

struct Expr {
    ExprKind kind = ExprKind::Const;
    Value value;                      // Const
    Symbol name;                      // Var
    VarRole role = VarRole::State;    // Var
    std::vector<ExprPtr> args;        // operands, tuple items, call arguments
    std::size_t index = 0;            // Proj, 1-based
    std::shared_ptr<const OpDef> op;  // Call
    SortPtr sort;                     // statically inferred

    static ExprPtr constant(Value v);
    static ExprPtr var(Symbol name, VarRole role, SortPtr sort);
    static ExprPtr neg(ExprPtr a);
    static ExprPtr binary(ExprKind k, ExprPtr a, ExprPtr b);
    static ExprPtr minmax(ExprKind k, std::vector<ExprPtr> args);
    static ExprPtr tuple(std::vector<ExprPtr> items);
    /// Tuple standing for a named group of state variables; renders as the name.
    static ExprPtr group(Symbol name, std::vector<ExprPtr> items);
    static ExprPtr proj(ExprPtr a, std::size_t index);
    static ExprPtr call(std::shared_ptr<const OpDef> op, std::vector<ExprPtr> args);

    bool is_const() const { return kind == ExprKind::Const; }
    bool is_var() const { return kind == ExprKind::Var; }
};

enum class PredKind { True, False, Cmp, And, Or, Not, Implies, Member, Exists };
enum class CmpOp { Eq, Ne, Lt, Le, Gt, Ge };

const char* cmp_symbol(CmpOp op);
CmpOp negate_cmp(CmpOp op);

/// Comparison of two concrete values. Ordering relations hold only between
/// numbers and infinity; equality is structural.
bool compare_values(CmpOp op, const Value& a, const Value& b);

struct Pred {
    PredKind kind = PredKind::True;
    CmpOp cmp = CmpOp::Eq;
    std::vector<ExprPtr> operands;  // Cmp: two, Member: one
    std::vector<PredPtr> children;  // And/Or: n, Not: 1, Implies: 2, Exists: 1
    std::vector<Value> members;     // Member over an explicit set
    SortPtr member_sort;            // Member over a basic sort (nat, int, ...)
    std::vector<ExprPtr> bound;     // Exists: bound variables

    static PredPtr truth();
    static PredPtr falsity();
    static PredPtr boolean(bool b) { return b ? truth() : falsity(); }
    static PredPtr compare(CmpOp op, ExprPtr a, ExprPtr b);
    static PredPtr conj(std::vector<PredPtr> cs);
    static PredPtr disj(std::vector<PredPtr> cs);
    static PredPtr conj(PredPtr a, PredPtr b) { return conj(std::vector<PredPtr>{std::move(a), std::move(b)}); }
    static PredPtr disj(PredPtr a, PredPtr b) { return disj(std::vector<PredPtr>{std::move(a), std::move(b)}); }
    static PredPtr negation(PredPtr p);
    static PredPtr implies(PredPtr a, PredPtr b);
    static PredPtr member(ExprPtr a, std::vector<Value> set);
    static PredPtr member_of_sort(ExprPtr a, SortPtr sort);
    static PredPtr exists(std::vector<ExprPtr> vars, PredPtr body);

    bool is_atom() const { return kind == PredKind::Cmp || kind == PredKind::Member; }
};

/// A guarded case: `case guard -> result;` or `otherwise -> result;`.
struct GuardedCase {
    int id = 0;
    PredPtr guard;
    ExprPtr result;
    bool otherwise = false;
};

struct LetDef {
    Symbol name;
    ExprPtr expr;
};

struct Param {
    Symbol name;
    SortPtr sort;
};

/// User-defined operator (⊕, ⊘, nt' ...). The body is a list of cases
/// evaluated first-match, optionally preceded by let bindings.
struct OpDef {
    Symbol name;
    std::vector<Param> params;
    SortPtr result;
    std::vector<LetDef> lets;
    std::vector<GuardedCase> cases;
    bool simple = false;  ///< written as `op f(...) : s = expr;`
};

// ---- rendering -----------------------------------------------------------

/// DSL text of an expression; reparses to a structurally equal node.
std::string to_string(const Expr& e);
std::string to_string(const Pred& p);
inline std::string to_string(const ExprPtr& e) { return to_string(*e); }
inline std::string to_string(const PredPtr& p) { return to_string(*p); }

bool structurally_equal(const Expr& a, const Expr& b);
bool structurally_equal(const Pred& a, const Pred& b);

// ---- traversal -----------------------------------------------------------

/// Free variables (name and role), ordered by spelling.
std::map<Symbol, VarRole> free_vars(const Pred& p);
std::map<Symbol, VarRole> free_vars(const Expr& e);
void collect_free_vars(const Expr& e, std::map<Symbol, VarRole>& out);
void collect_free_vars(const Pred& p, std::map<Symbol, VarRole>& out);

using Substitution = std::map<Symbol, ExprPtr>;
ExprPtr substitute(const ExprPtr& e, const Substitution& s);
PredPtr substitute(const PredPtr& p, const Substitution& s);

/// Replaces the node `target` (by identity) with `with`.
PredPtr replace_node(const PredPtr& p, const Pred* target, const PredPtr& with);

/// Conjuncts of a top-level conjunction (the predicate itself otherwise).
std::vector<PredPtr> conjuncts(const PredPtr& p);

/// One application of an operator inside a predicate.
struct Occurrence {
    std::string op;               ///< "<", "+", "min", user operator name ...
    std::vector<ExprPtr> operands;
    const Pred* atom = nullptr;   ///< enclosing atomic predicate (null inside results)
};

void collect_occurrences(const PredPtr& p, std::vector<Occurrence>& out);
void collect_occurrences(const ExprPtr& e, const Pred* atom, std::vector<Occurrence>& out);

// ---- canonical form ------------------------------------------------------

/// Flattens ∧/∨, removes unit elements, deduplicates and orders children,
/// orients equalities and folds closed comparisons. Idempotent.
PredPtr normalize(const PredPtr& p);

} // namespace devs_scc

#endif
