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
#include "devs_scc/sort.hpp"

#include <algorithm>

namespace devs_scc {
namespace {

bool is_numeric_kind(Sort::Kind k)
{
    return k == Sort::Kind::Nat || k == Sort::Kind::Int || k == Sort::Kind::Rational || k == Sort::Kind::Time;
}

} // namespace

// Sort has private members; construct through a local builder.
struct SortBuilder {
    static SortPtr make(Sort::Kind kind, std::vector<Value> lits = {}, std::vector<SortPtr> items = {},
                        SortPtr base = nullptr, Symbol bottom = {})
    {
        auto s = std::make_shared<Sort>();
        auto& m = const_cast<Sort&>(*s);
        m.kind_ = kind;
        m.literals_ = std::move(lits);
        m.items_ = std::move(items);
        m.base_ = std::move(base);
        m.bottom_ = bottom;
        return s;
    }
};

SortPtr Sort::nat()
{
    static const SortPtr s = SortBuilder::make(Kind::Nat);
    return s;
}

SortPtr Sort::integer()
{
    static const SortPtr s = SortBuilder::make(Kind::Int);
    return s;
}

SortPtr Sort::rational()
{
    static const SortPtr s = SortBuilder::make(Kind::Rational);
    return s;
}

SortPtr Sort::time()
{
    static const SortPtr s = SortBuilder::make(Kind::Time);
    return s;
}

SortPtr Sort::enumeration(std::vector<Value> literals)
{
    return SortBuilder::make(Kind::Enum, std::move(literals));
}

SortPtr Sort::tuple(std::vector<SortPtr> items)
{
    return SortBuilder::make(Kind::Tuple, {}, std::move(items));
}

SortPtr Sort::extended(SortPtr base, Symbol bottom)
{
    return SortBuilder::make(Kind::Extended, {}, {}, std::move(base), bottom);
}

bool Sort::contains(const Value& v) const
{
    switch (kind_) {
    case Kind::Nat:
        return v.is_integer() && v.number() >= 0;
    case Kind::Int:
        return v.is_integer();
    case Kind::Rational:
        return v.is_number();
    case Kind::Time:
        return v.is_infinity() || (v.is_number() && v.number() >= 0);
    case Kind::Enum:
        return std::find(literals_.begin(), literals_.end(), v) != literals_.end();
    case Kind::Tuple: {
        if (!v.is_tuple() || v.items().size() != items_.size())
            return false;
        for (std::size_t i = 0; i < items_.size(); ++i)
            if (!items_[i]->contains(v.items()[i]))
                return false;
        return true;
    }
    case Kind::Extended:
        return (v.is_literal() && v.literal_name() == bottom_) || base_->contains(v);
    }
    return false;
}

bool Sort::is_finite() const
{
    switch (kind_) {
    case Kind::Enum:
        return true;
    case Kind::Tuple:
        return std::all_of(items_.begin(), items_.end(), [](const SortPtr& s) { return s->is_finite(); });
    case Kind::Extended:
        return base_->is_finite();
    default:
        return false;
    }
}

bool Sort::is_numeric() const
{
    switch (kind_) {
    case Kind::Enum:
        return std::any_of(literals_.begin(), literals_.end(), [](const Value& v) { return v.is_number(); });
    case Kind::Tuple:
        return false;
    case Kind::Extended:
        return base_->is_numeric();
    default:
        return true;
    }
}

const Sort& Sort::root() const
{
    const Sort* s = this;
    while (s->kind_ == Kind::Extended)
        s = s->base_.get();
    return *s;
}

std::vector<Symbol> Sort::extension_literals() const
{
    std::vector<Symbol> out;
    const Sort* s = this;
    while (s->kind_ == Kind::Extended) {
        out.push_back(s->bottom_);
        s = s->base_.get();
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::string Sort::to_string() const
{
    switch (kind_) {
    case Kind::Nat:
        return "nat";
    case Kind::Int:
        return "int";
    case Kind::Rational:
        return "rational";
    case Kind::Time:
        return "time";
    case Kind::Enum: {
        std::string out = "enum {";
        for (std::size_t i = 0; i < literals_.size(); ++i) {
            if (i)
                out += ", ";
            out += literals_[i].to_string();
        }
        return out + "}";
    }
    case Kind::Tuple: {
        std::string out = "(";
        for (std::size_t i = 0; i < items_.size(); ++i) {
            if (i)
                out += ", ";
            out += items_[i]->to_string();
        }
        return out + ")";
    }
    case Kind::Extended:
        return base_->to_string() + " | " + bottom_.str();
    }
    return {};
}

bool operator==(const Sort& a, const Sort& b)
{
    if (a.kind_ != b.kind_)
        return false;
    switch (a.kind_) {
    case Sort::Kind::Enum:
        return a.literals_ == b.literals_;
    case Sort::Kind::Tuple:
        if (a.items_.size() != b.items_.size())
            return false;
        for (std::size_t i = 0; i < a.items_.size(); ++i)
            if (*a.items_[i] != *b.items_[i])
                return false;
        return true;
    case Sort::Kind::Extended:
        return a.bottom_ == b.bottom_ && *a.base_ == *b.base_;
    default:
        return true;
    }
}

bool sorts_overlap(const Sort& a, const Sort& b)
{
    using K = Sort::Kind;
    if (a.kind() == K::Extended) {
        if (b.contains(Value::literal(a.bottom())))
            return true;
        return sorts_overlap(*a.base(), b);
    }
    if (b.kind() == K::Extended)
        return sorts_overlap(b, a);
    if (a.kind() == K::Tuple || b.kind() == K::Tuple) {
        if (a.kind() != b.kind() || a.items().size() != b.items().size())
            return false;
        for (std::size_t i = 0; i < a.items().size(); ++i)
            if (!sorts_overlap(*a.items()[i], *b.items()[i]))
                return false;
        return true;
    }
    if (a.kind() == K::Enum) {
        return std::any_of(a.literals().begin(), a.literals().end(), [&](const Value& v) { return b.contains(v); });
    }
    if (b.kind() == K::Enum)
        return sorts_overlap(b, a);
    return is_numeric_kind(a.kind()) && is_numeric_kind(b.kind());
}

SortPtr sort_of_value(const Value& v)
{
    switch (v.kind()) {
    case Value::Kind::Number:
        if (v.is_integer())
            return v.number() >= 0 ? Sort::nat() : Sort::integer();
        return Sort::rational();
    case Value::Kind::Infinity:
        return Sort::time();
    case Value::Kind::Literal:
        return Sort::enumeration({v});
    case Value::Kind::Tuple: {
        std::vector<SortPtr> items;
        for (const auto& item : v.items())
            items.push_back(sort_of_value(item));
        return Sort::tuple(std::move(items));
    }
    }
    return Sort::nat();
}

} // namespace devs_scc
