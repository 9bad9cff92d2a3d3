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
#include "devs_scc/simulator.hpp"

#include <set>

namespace devs_scc {

const char* sim_error_name(SimErrorKind k)
{
    switch (k) {
    case SimErrorKind::UndefinedTransition: return "undefined-transition";
    case SimErrorKind::PassiveState: return "passive-state";
    case SimErrorKind::AfterDeadline: return "after-deadline";
    case SimErrorKind::IllSorted: return "ill-sorted";
    case SimErrorKind::Evaluation: return "evaluation";
    }
    return "?";
}

namespace {

std::size_t leaves_of(const Sort& s)
{
    if (s.kind() != Sort::Kind::Tuple)
        return 1;
    std::size_t n = 0;
    for (const auto& i : s.items())
        n += leaves_of(*i);
    return n;
}

// Regroups flat leaves into the (possibly nested) shape of a sort.
Value rebuild(const Sort& s, const std::vector<Value>& leaves, std::size_t& pos)
{
    if (s.kind() != Sort::Kind::Tuple)
        return leaves[pos++];
    std::vector<Value> items;
    for (const auto& i : s.items())
        items.push_back(rebuild(*i, leaves, pos));
    return Value::tuple(std::move(items));
}

std::string state_text(const StateVec& s)
{
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? ", " : "") + s[i].to_string();
    return out + ")";
}

} // namespace

Simulator::Simulator(const Model& m, Env constants, DomainFn domains)
    : model_(&m), consts_(std::move(constants)), domains_(std::move(domains))
{
}

Env Simulator::bind(const StateVec& s) const
{
    Env env;
    for (std::size_t i = 0; i < model_->state.size(); ++i)
        env.set(model_->state[i].name, s[i]);
    return env;
}

SimState Simulator::init(const StateVec& s0) const
{
    const auto& vars = model_->state;
    if (s0.size() != vars.size())
        throw SimError(SimErrorKind::IllSorted, "initial state has " + std::to_string(s0.size()) +
                                                    " components, expected " + std::to_string(vars.size()));
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (!vars[i].sort->contains(s0[i]))
            throw SimError(SimErrorKind::IllSorted,
                           vars[i].name.str() + " = " + s0[i].to_string() + " is not in " + vars[i].sort->to_string());
    return SimState{s0, Number{0}};
}

Value Simulator::ta(const StateVec& s) const
{
    Env env = bind(s);
    Value v;
    try {
        v = eval(*model_->ta, env, &consts_);
    } catch (const EvalError& e) {
        throw SimError(SimErrorKind::Evaluation, std::string("ta: ") + e.what());
    }
    if (!v.is_ordered() || (v.is_number() && v.number() < 0))
        throw SimError(SimErrorKind::Evaluation, "ta" + state_text(s) + " = " + v.to_string() + " is not a time");
    return v;
}

const GuardedCase* Simulator::choose(const TransitionFn& fn, const Env& env, FnKind k) const
{
    EvalContext ctx;
    ctx.env = &env;
    ctx.globals = &consts_;
    ctx.lets = &fn.lets;
    ctx.domains = domains_;
    const GuardedCase* fallback = nullptr;
    for (const auto& c : fn.cases) {
        if (c.otherwise) {
            fallback = &c;
            continue;
        }
        try {
            if (holds(*c.guard, ctx))
                return &c;
        } catch (const EvalError& e) {
            throw SimError(SimErrorKind::Evaluation,
                           std::string(fn_name(k)) + " case " + std::to_string(c.id) + ": " + e.what());
        }
    }
    return fallback;
}

StateVec Simulator::apply(const TransitionFn& fn, const GuardedCase& c, const Env& env) const
{
    EvalContext ctx;
    ctx.env = &env;
    ctx.globals = &consts_;
    ctx.lets = &fn.lets;
    ctx.domains = domains_;
    Value r;
    try {
        r = eval(*c.result, ctx);
    } catch (const EvalError& e) {
        throw SimError(SimErrorKind::Evaluation, std::string("result: ") + e.what());
    }
    std::vector<Value> leaves;
    flatten_into(r, leaves);
    const auto& vars = model_->state;
    std::size_t want = 0;
    for (const auto& v : vars)
        want += leaves_of(*v.sort);
    if (leaves.size() != want)
        throw SimError(SimErrorKind::IllSorted, "result " + r.to_string() + " has " + std::to_string(leaves.size()) +
                                                    " components, expected " + std::to_string(want));
    StateVec out;
    std::size_t pos = 0;
    for (const auto& v : vars) {
        Value x = rebuild(*v.sort, leaves, pos);
        if (!v.sort->contains(x))
            throw SimError(SimErrorKind::IllSorted,
                           "result gives " + v.name.str() + " = " + x.to_string() + ", not in " + v.sort->to_string());
        out.push_back(std::move(x));
    }
    return out;
}

StepResult Simulator::step(const SimState& st, const std::optional<InputPair>& input) const
{
    const Model& m = *model_;
    StepResult res;
    Value ta_v = ta(st.state);
    Env env = bind(st.state);

    if (!input || input->event.is_tau()) {
        if (ta_v.is_infinity())
            throw SimError(SimErrorKind::PassiveState, "no internal transition from passive state " +
                                                           state_text(st.state));
        Number at = st.last + ta_v.number();
        if (const auto* lc = choose(m.lambda, env, FnKind::Lambda)) {
            EvalContext ctx;
            ctx.env = &env;
            ctx.globals = &consts_;
            ctx.lets = &m.lambda.lets;
            ctx.domains = domains_;
            Value y;
            try {
                y = eval(*lc->result, ctx);
            } catch (const EvalError& e) {
                throw SimError(SimErrorKind::Evaluation, std::string("lambda: ") + e.what());
            }
            if (m.output && !m.output->contains(y))
                throw SimError(SimErrorKind::IllSorted, "output " + y.to_string() + " not in " + m.output->to_string());
            res.output = y;
            TraceEvent o;
            o.kind = TraceKind::Output;
            o.at = at;
            o.fn = FnKind::Lambda;
            o.case_id = lc->otherwise ? 0 : lc->id;
            o.value = y;
            o.elapsed = ta_v.number();
            res.events.push_back(std::move(o));
        } else {
            throw SimError(SimErrorKind::UndefinedTransition,
                           "lambda undefined for state " + state_text(st.state));
        }
        const auto* c = choose(m.dint, env, FnKind::Dint);
        if (!c)
            throw SimError(SimErrorKind::UndefinedTransition, "dint undefined for state " + state_text(st.state));
        TraceEvent ev;
        ev.kind = TraceKind::Internal;
        ev.at = at;
        ev.fn = FnKind::Dint;
        ev.case_id = c->otherwise ? 0 : c->id;
        ev.value = Value::tau();
        ev.elapsed = ta_v.number();
        ev.state_after = apply(m.dint, *c, env);
        res.next = SimState{ev.state_after, at};
        res.events.push_back(std::move(ev));
        return res;
    }

    if (!input->time.is_number())
        throw SimError(SimErrorKind::Evaluation, "event time " + input->time.to_string() + " is not finite");
    Number at = input->time.number();
    Number e = at - st.last;
    if (e < 0)
        throw SimError(SimErrorKind::AfterDeadline, "event at " + number_to_string(at) + " precedes last transition");
    bool tie = false;
    if (!ta_v.is_infinity()) {
        if (e > ta_v.number())
            throw SimError(SimErrorKind::AfterDeadline, "event at " + number_to_string(at) +
                                                            " comes after the internal deadline " +
                                                            number_to_string(st.last + ta_v.number()));
        tie = e == ta_v.number();
    }
    env.set(Symbol("x"), input->event);
    env.set(Symbol("e"), Value(e));
    const auto* c = choose(m.dext, env, FnKind::Dext);
    if (!c)
        throw SimError(SimErrorKind::UndefinedTransition, "dext undefined for state " + state_text(st.state) +
                                                              ", e = " + number_to_string(e) + ", x = " +
                                                              input->event.to_string());
    TraceEvent ev;
    ev.kind = TraceKind::External;
    ev.at = at;
    ev.fn = FnKind::Dext;
    ev.case_id = c->otherwise ? 0 : c->id;
    ev.value = input->event;
    ev.elapsed = e;
    ev.tie = tie;
    ev.state_after = apply(m.dext, *c, env);
    res.next = SimState{ev.state_after, at};
    res.events.push_back(std::move(ev));
    return res;
}

Trace Simulator::run_config(const SimulationConfig& c) const
{
    Trace tr;
    tr.initial = c.state;
    tr.final_state = c.state;
    try {
        SimState st = init(c.state);
        std::optional<InputPair> in;
        if (!c.input.event.is_tau())
            in = c.input;
        auto r = step(st, in);
        tr.events = std::move(r.events);
        tr.final_state = r.next.state;
    } catch (const SimError& e) {
        Number at = c.input.time.is_number() ? c.input.time.number() : Number{0};
        tr.failure = SimFailure{e.kind(), e.what(), at};
    }
    return tr;
}

namespace {

void shape(const Value& v, std::string& out)
{
    switch (v.kind()) {
    case Value::Kind::Tuple:
        out += "(";
        for (std::size_t i = 0; i < v.items().size(); ++i) {
            if (i)
                out += ",";
            shape(v.items()[i], out);
        }
        out += ")";
        break;
    case Value::Kind::Literal: out += v.literal_name().str(); break;
    default: out += "#"; break;
    }
}

} // namespace

std::string trace_signature(const Trace& t)
{
    std::string sig;
    for (const auto& ev : t.events) {
        if (!sig.empty())
            sig += " ";
        sig += fn_name(ev.fn);
        sig += "." + (ev.case_id ? std::to_string(ev.case_id) : std::string("otherwise"));
        if (ev.kind == TraceKind::Output) {
            sig += ":";
            shape(ev.value, sig);
        }
    }
    if (t.failure) {
        if (!sig.empty())
            sig += " ";
        sig += std::string("fail:") + sim_error_name(t.failure->kind);
    }
    return sig;
}

ProbeReport uniformity_probe(const Simulator& sim, const Scc& scc, const Domains& d, std::size_t k,
                             std::uint64_t seed)
{
    ProbeReport rep;
    rep.scc_id = scc.id;
    rep.requested = k;
    auto configs = sample_configs(sim.model(), scc, d, k, seed);
    if (configs.size() < 2) {
        rep.note = "skipped: fewer than 2 witnesses";
        return rep;
    }
    std::set<std::string> seen;
    for (const auto& c : configs) {
        auto sig = trace_signature(sim.run_config(c));
        ++rep.run;
        if (seen.insert(sig).second)
            rep.signatures.push_back(sig);
    }
    rep.uniform = rep.signatures.size() <= 1;
    if (rep.run < k)
        rep.note = "class has " + std::to_string(rep.run) + " executable configurations within bounds";
    else if (!rep.uniform)
        rep.note = "behaviour differs inside the class; consider splitting it";
    return rep;
}

} // namespace devs_scc
