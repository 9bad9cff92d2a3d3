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
#include "devs_scc/value.hpp"

#include <stdexcept>

namespace devs_scc {

Value Value::infinity()
{
    Value v;
    v.kind_ = Kind::Infinity;
    return v;
}

Value Value::literal(Symbol name)
{
    Value v;
    v.kind_ = Kind::Literal;
    v.lit_ = name;
    return v;
}

Value Value::tuple(std::vector<Value> items)
{
    Value v;
    v.kind_ = Kind::Tuple;
    v.items_ = std::make_shared<const std::vector<Value>>(std::move(items));
    return v;
}

Value Value::tau()
{
    static const Symbol name("tau");
    return literal(name);
}

bool Value::is_tau() const
{
    static const Symbol name("tau");
    return kind_ == Kind::Literal && lit_ == name;
}

const std::vector<Value>& Value::items() const
{
    static const std::vector<Value> empty;
    return items_ ? *items_ : empty;
}

bool operator==(const Value& a, const Value& b)
{
    if (a.kind_ != b.kind_)
        return false;
    switch (a.kind_) {
    case Value::Kind::Number:
        return a.num_ == b.num_;
    case Value::Kind::Infinity:
        return true;
    case Value::Kind::Literal:
        return a.lit_ == b.lit_;
    case Value::Kind::Tuple:
        return a.items() == b.items();
    }
    return false;
}

std::optional<int> compare_ordered(const Value& a, const Value& b)
{
    if (!a.is_ordered() || !b.is_ordered())
        return std::nullopt;
    if (a.is_infinity() || b.is_infinity()) {
        if (a.is_infinity() && b.is_infinity())
            return 0;
        return a.is_infinity() ? 1 : -1;
    }
    if (a.number() < b.number())
        return -1;
    if (b.number() < a.number())
        return 1;
    return 0;
}

std::string number_to_string(const Number& n)
{
    std::int64_t num = n.numerator();
    std::int64_t den = n.denominator();
    if (den == 1)
        return std::to_string(num);

    // Finite decimal expansion iff the denominator has only factors 2 and 5.
    std::int64_t d = den;
    int twos = 0, fives = 0;
    while (d % 2 == 0) { d /= 2; ++twos; }
    while (d % 5 == 0) { d /= 5; ++fives; }
    if (d != 1 || std::max(twos, fives) > 12)
        return std::to_string(num) + "/" + std::to_string(den);

    int digits = std::max(twos, fives);
    std::int64_t scale = 1;
    for (int i = 0; i < digits; ++i)
        scale *= 10;
    bool negative = num < 0;
    std::int64_t absnum = negative ? -num : num;
    std::int64_t scaled = absnum * (scale / den);
    std::string frac = std::to_string(scaled % scale);
    frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
    while (!frac.empty() && frac.back() == '0')
        frac.pop_back();
    return (negative ? "-" : "") + std::to_string(scaled / scale) + "." + frac;
}

std::string Value::to_string() const
{
    switch (kind_) {
    case Kind::Number:
        return number_to_string(num_);
    case Kind::Infinity:
        return "infinity";
    case Kind::Literal:
        return lit_.str();
    case Kind::Tuple: {
        std::string out = "(";
        const auto& xs = items();
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (i)
                out += ", ";
            out += xs[i].to_string();
        }
        return out + ")";
    }
    }
    return {};
}

void flatten_into(const Value& v, std::vector<Value>& out)
{
    if (!v.is_tuple()) {
        out.push_back(v);
        return;
    }
    for (const auto& item : v.items())
        flatten_into(item, out);
}

} // namespace devs_scc
