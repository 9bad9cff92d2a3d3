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
#ifndef DEVS_SCC_VALUE_HPP
#define DEVS_SCC_VALUE_HPP

#include "devs_scc/symbol.hpp"

#include <boost/rational.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace devs_scc {

/// Exact rational number. Naturals and integers are rationals with denominator 1.
using Number = boost::rational<std::int64_t>;

/// A concrete element of some sort: a number, the time value infinity, an
/// enumeration/bottom literal, or a tuple. Immutable; tuples share storage.
class Value {
public:
    enum class Kind { Number, Infinity, Literal, Tuple };

    Value() : Value(Number{0}) {}
    explicit Value(Number n) : kind_(Kind::Number), num_(n) {}

    static Value integer(std::int64_t n) { return Value(Number{n}); }
    static Value rational(std::int64_t num, std::int64_t den) { return Value(Number{num, den}); }
    static Value infinity();
    static Value literal(Symbol name);
    static Value literal(std::string_view name) { return literal(Symbol(name)); }
    static Value tuple(std::vector<Value> items);
    /// The "no event" marker of an input pair.
    static Value tau();

    Kind kind() const { return kind_; }
    bool is_number() const { return kind_ == Kind::Number; }
    bool is_infinity() const { return kind_ == Kind::Infinity; }
    bool is_literal() const { return kind_ == Kind::Literal; }
    bool is_tuple() const { return kind_ == Kind::Tuple; }
    bool is_tau() const;
    bool is_integer() const { return is_number() && num_.denominator() == 1; }
    /// Number or infinity.
    bool is_ordered() const { return is_number() || is_infinity(); }

    const Number& number() const { return num_; }
    Symbol literal_name() const { return lit_; }
    const std::vector<Value>& items() const;

    /// Rendering that the DSL parser reads back to an equal value.
    std::string to_string() const;

    friend bool operator==(const Value& a, const Value& b);
    friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }

private:
    Kind kind_;
    Number num_{0};
    Symbol lit_{};
    std::shared_ptr<const std::vector<Value>> items_;
};

/// Three-way comparison of ordered values (numbers and infinity).
/// Returns nullopt when either side is not ordered.
std::optional<int> compare_ordered(const Value& a, const Value& b);

std::string number_to_string(const Number& n);

/// Flattens nested tuples into their scalar leaves, in order.
void flatten_into(const Value& v, std::vector<Value>& out);

} // namespace devs_scc

#endif
