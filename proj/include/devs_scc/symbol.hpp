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
#ifndef DEVS_SCC_SYMBOL_HPP
#define DEVS_SCC_SYMBOL_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace devs_scc {

/// Interned identifier. Comparing two symbols is an integer comparison.
class Symbol {
public:
    Symbol() = default;
    explicit Symbol(std::string_view name);

    const std::string& str() const;
    std::uint32_t id() const { return id_; }
    bool valid() const { return id_ != 0; }

    friend bool operator==(Symbol a, Symbol b) { return a.id_ == b.id_; }
    friend bool operator!=(Symbol a, Symbol b) { return a.id_ != b.id_; }
    /// Orders by spelling, so containers keyed on symbols iterate deterministically.
    friend bool operator<(Symbol a, Symbol b) { return a.id_ != b.id_ && a.str() < b.str(); }

private:
    std::uint32_t id_ = 0;
};

} // namespace devs_scc

#endif
