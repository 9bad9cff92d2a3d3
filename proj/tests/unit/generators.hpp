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
#ifndef DEVS_SCC_TEST_GENERATORS_HPP
#define DEVS_SCC_TEST_GENERATORS_HPP

#include "devs_scc/bounds.hpp"
#include "devs_scc/eval.hpp"

#include <random>

namespace devs_scc::testing {

/// Random predicates over a, b : int in [-3, 3] and c : {p, q, r}.
class PredGen {
public:
    explicit PredGen(std::uint32_t seed) : rng_(seed)
    {
        auto ints = Sort::integer();
        a_ = Expr::var(Symbol("a"), VarRole::State, ints);
        b_ = Expr::var(Symbol("b"), VarRole::State, ints);
        c_ = Expr::var(Symbol("c"), VarRole::State, colours());
    }

    static SortPtr colours()
    {
        return Sort::enumeration({Value::literal("p"), Value::literal("q"), Value::literal("r")});
    }

    static Domains domains()
    {
        Domains d;
        std::vector<Value> ints;
        for (int i = -3; i <= 3; ++i)
            ints.push_back(Value::integer(i));
        d.add(Symbol("a"), VarRole::State, ints);
        d.add(Symbol("b"), VarRole::State, ints);
        d.add(Symbol("c"), VarRole::State, {Value::literal("p"), Value::literal("q"), Value::literal("r")});
        return d;
    }

    PredPtr atom()
    {
        static const CmpOp ops[] = {CmpOp::Eq, CmpOp::Ne, CmpOp::Lt, CmpOp::Le, CmpOp::Gt, CmpOp::Ge};
        switch (pick(5)) {
        case 0: return Pred::compare(ops[pick(6)], a_, b_);
        case 1: return Pred::compare(ops[pick(6)], a_, constant());
        case 2: return Pred::compare(ops[pick(6)], b_, constant());
        case 3: return Pred::compare(ops[pick(6)], Expr::binary(ExprKind::Mul, a_, b_), constant());
        default: {
            std::vector<Value> set;
            for (const char* l : {"p", "q", "r"})
                if (pick(2))
                    set.push_back(Value::literal(l));
            if (set.empty())
                return Pred::compare(pick(2) ? CmpOp::Eq : CmpOp::Ne, c_, Expr::constant(Value::literal("q")));
            return Pred::member(c_, set);
        }
        }
    }

    PredPtr pred(int depth)
    {
        if (depth == 0 || pick(4) == 0)
            return atom();
        switch (pick(4)) {
        case 0: return Pred::conj(pred(depth - 1), pred(depth - 1));
        case 1: return Pred::disj(pred(depth - 1), pred(depth - 1));
        case 2: return Pred::negation(pred(depth - 1));
        default: return Pred::implies(pred(depth - 1), pred(depth - 1));
        }
    }

    int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

private:
    ExprPtr constant() { return Expr::constant(Value::integer(pick(7) - 3)); }

    std::mt19937 rng_;
    ExprPtr a_, b_, c_;
};

/// Calls f on every assignment of the domains.
template <class F>
void for_each_point(const Domains& d, F&& f)
{
    const auto& vars = d.all();
    Env env;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == vars.size()) {
            f(env);
            return;
        }
        for (const auto& v : vars[i].values) {
            env.set(vars[i].name, v);
            rec(i + 1);
        }
    };
    rec(0);
}

} // namespace devs_scc::testing

#endif
