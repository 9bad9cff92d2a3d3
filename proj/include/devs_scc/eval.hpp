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
#ifndef DEVS_SCC_EVAL_HPP
#define DEVS_SCC_EVAL_HPP

#include "devs_scc/ast.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace devs_scc {

class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Small assignment of values to names. Lookup is linear; environments
/// here hold a few dozen entries at most.
class Env {
public:
    void set(Symbol name, Value v);
    const Value* find(Symbol name) const;
    void erase(Symbol name);
    bool contains(Symbol name) const { return find(name) != nullptr; }
    std::size_t size() const { return slots_.size(); }
    const std::vector<std::pair<Symbol, Value>>& entries() const { return slots_; }
    void pop_back() { slots_.pop_back(); }

private:
    std::vector<std::pair<Symbol, Value>> slots_;
};

/// Enumeration domain lookup used for bounded quantifiers.
using DomainFn = std::function<const std::vector<Value>*(Symbol)>;

/// Evaluation context: variable bindings, global constants, the let block of
/// the enclosing function and quantifier domains.
struct EvalContext {
    const Env* env = nullptr;
    const Env* globals = nullptr;
    const std::vector<LetDef>* lets = nullptr;
    DomainFn domains;
};

Value eval(const Expr& e, const EvalContext& ctx);
bool holds(const Pred& p, const EvalContext& ctx);

inline Value eval(const Expr& e, const Env& env, const Env* globals = nullptr)
{
    EvalContext ctx;
    ctx.env = &env;
    ctx.globals = globals;
    return eval(e, ctx);
}

inline bool holds(const Pred& p, const Env& env, const Env* globals = nullptr, DomainFn domains = {})
{
    EvalContext ctx;
    ctx.env = &env;
    ctx.globals = globals;
    ctx.domains = std::move(domains);
    return holds(p, ctx);
}

enum class Tri { False, True, Unknown };

Tri tri_not(Tri a);

/// Kleene evaluation over a partial assignment. Unbound variables take any
/// value of their domain; ordering atoms are decided early from value
/// intervals when possible. Evaluation errors make an atom false.
Tri kleene(const Pred& p, const EvalContext& ctx);

} // namespace devs_scc

#endif
