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
#ifndef DEVS_SCC_SIMULATOR_HPP
#define DEVS_SCC_SIMULATOR_HPP

#include "devs_scc/selector.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace devs_scc {

enum class SimErrorKind { UndefinedTransition, PassiveState, AfterDeadline, IllSorted, Evaluation };

const char* sim_error_name(SimErrorKind k);

class SimError : public std::runtime_error {
public:
    SimError(SimErrorKind k, const std::string& msg) : std::runtime_error(msg), kind_(k) {}
    SimErrorKind kind() const { return kind_; }

private:
    SimErrorKind kind_;
};

struct SimState {
    StateVec state;
    Number last{0};  ///< time of the last transition
};

enum class TraceKind { External, Internal, Output };

struct TraceEvent {
    TraceKind kind = TraceKind::Internal;
    Number at{0};
    FnKind fn = FnKind::Dint;
    int case_id = 0;       ///< 0 for `otherwise`
    Value value;           ///< input event, or the emitted output
    Number elapsed{0};
    StateVec state_after;  ///< empty for output events
    bool tie = false;      ///< external event at exactly ta
};

struct SimFailure {
    SimErrorKind kind = SimErrorKind::Evaluation;
    std::string message;
    Number at{0};
};

struct Trace {
    StateVec initial;
    std::vector<TraceEvent> events;
    std::optional<SimFailure> failure;
    StateVec final_state;
};

struct StepResult {
    SimState next;
    std::optional<Value> output;
    std::vector<TraceEvent> events;
};

/// Abstract simulator for one atomic model. Cases are tried in declaration order.
class Simulator {
public:
    Simulator(const Model& m, Env constants, DomainFn domains = {});

    SimState init(const StateVec& s0) const;
    Value ta(const StateVec& s) const;

    /// No input: internal transition at last + ta. Otherwise the event (x, absolute time).
    StepResult step(const SimState& st, const std::optional<InputPair>& input) const;

    /// Runs the one step a configuration describes, starting at time 0.
    Trace run_config(const SimulationConfig& c) const;

    const Model& model() const { return *model_; }

private:
    const GuardedCase* choose(const TransitionFn& fn, const Env& env, FnKind k) const;
    StateVec apply(const TransitionFn& fn, const GuardedCase& c, const Env& env) const;
    Env bind(const StateVec& s) const;

    const Model* model_;
    Env consts_;
    DomainFn domains_;
};

/// Sequence of case choices and output shapes, used to compare behaviours.
std::string trace_signature(const Trace& t);

struct ProbeReport {
    int scc_id = 0;
    std::size_t requested = 0;
    std::size_t run = 0;
    bool uniform = true;
    std::vector<std::string> signatures;  ///< distinct ones, first-seen order
    std::string note;
};

/// Runs up to k sampled configurations of a class and compares their signatures.
ProbeReport uniformity_probe(const Simulator& sim, const Scc& scc, const Domains& d, std::size_t k,
                             std::uint64_t seed = 0);

} // namespace devs_scc

#endif
