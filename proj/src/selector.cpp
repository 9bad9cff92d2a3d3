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
#include "devs_scc/selector.hpp"

#include "devs_scc/symbolic.hpp"

namespace devs_scc {

std::vector<Symbol> selection_order(const Model& m)
{
    std::vector<Symbol> order{Symbol("x"), Symbol("t")};
    for (const auto& v : m.state)
        order.push_back(v.name);
    return order;
}

PredPtr horizon(const Model& m)
{
    if (!m.ta)
        return Pred::truth();
    auto tau = Expr::constant(Value::tau());
    auto x = m.input_var();
    auto internal = Pred::conj(Pred::compare(CmpOp::Eq, x, tau),
                               Pred::compare(CmpOp::Lt, m.ta, Expr::constant(Value::infinity())));
    auto external = Pred::conj(Pred::compare(CmpOp::Ne, x, tau), Pred::compare(CmpOp::Le, m.time_var(), m.ta));
    return Pred::disj(internal, external);
}

Env state_env(const Model& m, const StateVec& s)
{
    Env env;
    for (std::size_t i = 0; i < m.state.size() && i < s.size(); ++i)
        env.set(m.state[i].name, s[i]);
    return env;
}

Env config_env(const Model& m, const SimulationConfig& c)
{
    Env env = state_env(m, c.state);
    env.set(Symbol("x"), c.input.event);
    env.set(Symbol("t"), c.input.time);
    return env;
}

namespace {

SimulationConfig from_witness(const Model& m, const Env& w, const Domains& d, int id)
{
    SimulationConfig c;
    c.scc_id = id;
    // variables the class leaves free take their first domain value
    auto pick = [&](Symbol name) {
        if (const auto* v = w.find(name))
            return *v;
        const auto* dom = d.values(name);
        if (!dom || dom->empty())
            throw SelectionError(SelectionError::Kind::Empty, "no values for " + name.str());
        return dom->front();
    };
    for (const auto& v : m.state)
        c.state.push_back(pick(v.name));
    c.input.event = pick(Symbol("x"));
    c.input.time = pick(Symbol("t"));
    return c;
}

SatResult search(const PredPtr& p, const Domains& d, const std::vector<Symbol>& order)
{
    auto fv = free_vars(*p);
    std::vector<Symbol> used;
    for (const auto& s : order)
        if (fv.count(s))
            used.push_back(s);
    return satisfiable(p, d, search_order(p, d, used));
}

} // namespace

SimulationConfig select_config(const Model& m, const Scc& scc, const Domains& d, bool executable)
{
    auto order = selection_order(m);
    auto joint = scc.joint();
    if (executable) {
        auto r = search(Pred::conj(joint, horizon(m)), d, order);
        if (r.status == SatStatus::Sat)
            return from_witness(m, r.witness, d, scc.id);
    }
    auto r = search(joint, d, order);
    if (r.status == SatStatus::Unsat)
        throw SelectionError(SelectionError::Kind::Empty,
                             "SCC_" + std::to_string(scc.id) + ": no representative within bounds");
    if (r.status == SatStatus::Unknown)
        throw SelectionError(SelectionError::Kind::Budget,
                             "SCC_" + std::to_string(scc.id) + ": search budget exhausted");
    return from_witness(m, r.witness, d, scc.id);
}

std::vector<SimulationConfig> sample_configs(const Model& m, const Scc& scc, const Domains& d, std::size_t k,
                                             std::uint64_t seed)
{
    auto p = Pred::conj(scc.joint(), horizon(m));
    auto fv = free_vars(*p);
    std::vector<Symbol> order;
    for (const auto& s : selection_order(m))
        order.push_back(s);  // sample over every variable so free ones vary too
    std::vector<SimulationConfig> out;
    for (const auto& w : sample_witnesses(p, d, order, k, seed))
        out.push_back(from_witness(m, w, d, scc.id));
    return out;
}

bool config_in_class(const Model& m, const Scc& scc, const SimulationConfig& c, const Domains& d)
{
    Env env = config_env(m, c);
    try {
        return holds(*scc.joint(), env, &d.constants(), d.fn());
    } catch (const EvalError&) {
        return false;
    }
}

} // namespace devs_scc
