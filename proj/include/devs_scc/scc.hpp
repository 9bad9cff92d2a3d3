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
#ifndef DEVS_SCC_SCC_HPP
#define DEVS_SCC_SCC_HPP

#include "devs_scc/model.hpp"

#include <string>
#include <vector>

namespace devs_scc {

struct Provenance {
    std::string criterion;  ///< "cases", "extensional", ..., "combination"
    std::string target;     ///< e.g. "dext case 3", "eng = up", "< at dint case 6"
};

/// A simulation configuration class.
struct Scc {
    int id = 0;
    PredPtr ini_st;    ///< over state variables
    PredPtr in_pairs;  ///< over x and t
    /// Joint constraint over state, x and t, kept when the guard ties them together. May be null.
    PredPtr link;
    Provenance provenance;
    std::vector<int> combined_from;  ///< sorted base ids; empty for base classes

    /// ini_st, in_pairs and link conjoined.
    PredPtr joint() const;
    /// Base ids this class descends from ({id} for a base class).
    std::vector<int> ancestry() const;
    bool is_combination() const { return !combined_from.empty(); }
};

/// x = tau & t = 0
PredPtr tau_pairs(const Model& m);

/// Same class after normalization of all three predicates.
bool same_class(const Scc& a, const Scc& b);

} // namespace devs_scc

#endif
