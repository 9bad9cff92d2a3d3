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
#ifndef DEVS_SCC_SELECTOR_HPP
#define DEVS_SCC_SELECTOR_HPP

#include "devs_scc/bounds.hpp"
#include "devs_scc/scc.hpp"

#include <stdexcept>
#include <vector>

namespace devs_scc {

using StateVec = std::vector<Value>;

struct InputPair {
    Value event;  ///< element of X, or tau
    Value time;   ///< elapsed time since the initial state
};

struct SimulationConfig {
    int scc_id = 0;
    StateVec state;  ///< in state declaration order
    InputPair input;
};

class SelectionError : public std::runtime_error {
public:
    enum class Kind { Empty, Budget };
    SelectionError(Kind k, const std::string& msg) : std::runtime_error(msg), kind_(k) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// x, t, then the state variables in declaration order.
std::vector<Symbol> selection_order(const Model& m);

/// Configurations the simulator can run: tau needs a finite ta, an event must not come after ta.
PredPtr horizon(const Model& m);

/// Lexicographically least witness of the class. With `executable`, witnesses inside the
/// horizon are preferred when one exists.
SimulationConfig select_config(const Model& m, const Scc& scc, const Domains& d, bool executable = true);

/// Up to k distinct witnesses spread over the grid, deterministic for a seed.
std::vector<SimulationConfig> sample_configs(const Model& m, const Scc& scc, const Domains& d, std::size_t k,
                                             std::uint64_t seed = 0);

Env state_env(const Model& m, const StateVec& s);
Env config_env(const Model& m, const SimulationConfig& c);

/// Re-evaluates the class predicates on the configuration.
bool config_in_class(const Model& m, const Scc& scc, const SimulationConfig& c, const Domains& d);

} // namespace devs_scc

#endif
