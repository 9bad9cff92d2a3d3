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
#ifndef DEVS_SCC_SEQUENCER_HPP
#define DEVS_SCC_SEQUENCER_HPP

#include "devs_scc/simulator.hpp"

namespace devs_scc {

struct SequenceStep {
    SimulationConfig config;  ///< input time is relative to the previous transition
    std::vector<TraceEvent> events;
};

struct SequenceFailure {
    int scc_id = 0;
    std::string kind;  ///< sim error name, or "selection"
    std::string message;
};

/// One simulation run covering several classes back to back.
struct SimulationSequence {
    StateVec initial;
    std::vector<SequenceStep> steps;
    std::vector<int> covered;  ///< ids in step order
    std::optional<SequenceFailure> failure;
};

/// Greedy chaining: start from the lowest uncovered class, then keep appending the lowest
/// uncovered class whose initial-state predicate holds in the current state. Every class ends
/// up in exactly one sequence, including the ones whose run failed.
std::vector<SimulationSequence> build_sequences(const Model& m, const std::vector<Scc>& sccs, const Domains& d,
                                                const Simulator& sim);

} // namespace devs_scc

#endif
