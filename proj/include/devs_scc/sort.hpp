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
#ifndef DEVS_SCC_SORT_HPP
#define DEVS_SCC_SORT_HPP

#include "devs_scc/value.hpp"

#include <memory>
#include <string>
#include <vector>

namespace devs_scc {

class Sort;
using SortPtr = std::shared_ptr<const Sort>;

/// The value universe of a variable, input alphabet or output alphabet.
///
/// `Extended` adds one distinguished literal to a base sort (`nat | empty`);
/// chaining extensions builds unions such as `nat | fsig | ws_on`. `Time` is
/// the nonnegative rationals together with infinity.
class Sort {
public:
    enum class Kind { Nat, Int, Rational, Time, Enum, Tuple, Extended };

    static SortPtr nat();
    static SortPtr integer();
    static SortPtr rational();
    static SortPtr time();
    /// Literals are symbol literals or integer numbers (for sets such as {0, 1}).
    static SortPtr enumeration(std::vector<Value> literals);
    static SortPtr tuple(std::vector<SortPtr> items);
    static SortPtr extended(SortPtr base, Symbol bottom);

    Kind kind() const { return kind_; }
    const std::vector<Value>& literals() const { return literals_; }
    const std::vector<SortPtr>& items() const { return items_; }
    const SortPtr& base() const { return base_; }
    Symbol bottom() const { return bottom_; }

    bool contains(const Value& v) const;
    /// Every value of the sort can be listed (enumerations, and tuples/extensions of them).
    bool is_finite() const;
    /// Values of the sort may take part in arithmetic and ordering.
    bool is_numeric() const;
    /// Strips extensions down to the innermost base sort.
    const Sort& root() const;
    /// Extension literals from innermost to outermost.
    std::vector<Symbol> extension_literals() const;

    /// DSL spelling, e.g. `nat | empty` or `enum {up, down}`.
    std::string to_string() const;

    friend bool operator==(const Sort& a, const Sort& b);
    friend bool operator!=(const Sort& a, const Sort& b) { return !(a == b); }

private:
    friend struct SortBuilder;
    Kind kind_ = Kind::Nat;
    std::vector<Value> literals_;
    std::vector<SortPtr> items_;
    SortPtr base_;
    Symbol bottom_;
};

/// True when the two sorts could share at least one value.
bool sorts_overlap(const Sort& a, const Sort& b);

/// Narrowest sort describing a single value.
SortPtr sort_of_value(const Value& v);

} // namespace devs_scc

#endif
