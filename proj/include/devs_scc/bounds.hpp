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
#ifndef DEVS_SCC_BOUNDS_HPP
#define DEVS_SCC_BOUNDS_HPP

#include "devs_scc/eval.hpp"
#include "devs_scc/model.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace devs_scc {

struct IntRange {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
};

/// Finite search bounds for the unbounded sorts. Everything symbolic is
/// decided by enumeration over these domains.
struct Bounds {
    IntRange nat{0, 3};
    IntRange integer{-2, 2};
    IntRange rational_num{0, 8};
    std::int64_t rational_den = 4;
    std::map<Symbol, IntRange> nat_override;
    /// Explicit time samples; expressions over constants. Empty means derived.
    std::vector<ExprPtr> time_samples;
    std::map<Symbol, std::vector<Value>> var_values;
    std::map<Symbol, Value> constants;
    std::size_t budget = 2'000'000;
    std::size_t tuple_cap = 4096;
};

class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct VarDomain {
    Symbol name;
    VarRole role = VarRole::State;
    std::vector<Value> values;
};

class Domains {
public:
    void add(Symbol name, VarRole role, std::vector<Value> values);
    const VarDomain* find(Symbol name) const;
    const std::vector<Value>* values(Symbol name) const;
    const std::vector<VarDomain>& all() const { return vars_; }

    Env& constants() { return consts_; }
    const Env& constants() const { return consts_; }

    DomainFn fn() const;

    std::size_t budget = 2'000'000;

private:
    std::vector<VarDomain> vars_;
    std::map<Symbol, std::size_t> index_;
    Env consts_;
};

/// Values of a sort under the bounds. `with_infinity` adds infinity to time.
std::vector<Value> enumerate_sort(const Sort& s, const Bounds& b, const std::vector<Value>& time_samples,
                                  bool with_infinity, std::optional<IntRange> nat_range = std::nullopt);

/// Time samples: explicit ones, or {0} plus constants, midpoints and max+1.
std::vector<Value> time_samples(const Bounds& b, const Env& constants);

Env constant_values(const Model& m, const Bounds& b);

/// Domains for the state variables, x (X and tau), e and t.
Domains make_domains(const Model& m, const Bounds& b);

} // namespace devs_scc

#endif
