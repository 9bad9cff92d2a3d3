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
#include "devs_scc/sequencer.hpp"

#include "devs_scc/symbolic.hpp"

#include <algorithm>
#include <map>

namespace devs_scc {

namespace {

// Input pair of a class for a fixed state, inside the horizon.
std::optional<InputPair> chain_input(const Model& m, const Scc& scc, const Env& state, const Domains& d)
{
    const auto& consts = d.constants();
    try {
        if (!holds(*scc.ini_st, state, &consts, d.fn()))
            return std::nullopt;
    } catch (const EvalError&) {
        return std::nullopt;
    }
    auto p = Pred::conj(scc.joint(), horizon(m));
    auto r = satisfiable(p, d, {Symbol("x"), Symbol("t")}, &state);
    if (r.status != SatStatus::Sat)
        return std::nullopt;
    InputPair in;
    auto pick = [&](Symbol s) {
        if (const auto* v = r.witness.find(s))
            return *v;
        return d.values(s)->front();
    };
    in.event = pick(Symbol("x"));
    in.time = pick(Symbol("t"));
    return in;
}

} // namespace

std::vector<SimulationSequence> build_sequences(const Model& m, const std::vector<Scc>& sccs, const Domains& d,
                                                const Simulator& sim)
{
    std::map<int, const Scc*> remaining;
    for (const auto& s : sccs)
        remaining.emplace(s.id, &s);

    std::vector<SimulationSequence> out;
    while (!remaining.empty()) {
        SimulationSequence seq;
        const Scc& first = *remaining.begin()->second;
        remaining.erase(remaining.begin());
        seq.covered.push_back(first.id);

        SimulationConfig cfg;
        try {
            cfg = select_config(m, first, d);
        } catch (const SelectionError& e) {
            seq.failure = SequenceFailure{first.id, "selection", e.what()};
            out.push_back(std::move(seq));
            continue;
        }
        seq.initial = cfg.state;

        SimState st;
        try {
            st = sim.init(cfg.state);
        } catch (const SimError& e) {
            seq.failure = SequenceFailure{first.id, sim_error_name(e.kind()), e.what()};
            out.push_back(std::move(seq));
            continue;
        }

        const Scc* current = &first;
        for (;;) {
            std::optional<InputPair> in;
            if (!cfg.input.event.is_tau())
                in = InputPair{cfg.input.event, Value(st.last + cfg.input.time.number())};
            StepResult r;
            try {
                r = sim.step(st, in);
            } catch (const SimError& e) {
                seq.steps.push_back(SequenceStep{cfg, {}});
                seq.failure = SequenceFailure{current->id, sim_error_name(e.kind()), e.what()};
                break;
            }
            seq.steps.push_back(SequenceStep{cfg, r.events});
            st = r.next;

            Env env = state_env(m, st.state);
            const Scc* next = nullptr;
            std::optional<InputPair> next_in;
            for (const auto& [id, s] : remaining) {
                if ((next_in = chain_input(m, *s, env, d))) {
                    next = s;
                    break;
                }
            }
            if (!next)
                break;
            remaining.erase(next->id);
            seq.covered.push_back(next->id);
            cfg = SimulationConfig{next->id, st.state, *next_in};
            current = next;
        }
        out.push_back(std::move(seq));
    }
    return out;
}

} // namespace devs_scc
