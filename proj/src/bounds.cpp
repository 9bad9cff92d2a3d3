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
#include "devs_scc/bounds.hpp"

#include <algorithm>

namespace devs_scc {

void Domains::add(Symbol name, VarRole role, std::vector<Value> values)
{
    auto it = index_.find(name);
    if (it != index_.end()) {
        vars_[it->second] = VarDomain{name, role, std::move(values)};
        return;
    }
    index_[name] = vars_.size();
    vars_.push_back(VarDomain{name, role, std::move(values)});
}

const VarDomain* Domains::find(Symbol name) const
{
    auto it = index_.find(name);
    return it == index_.end() ? nullptr : &vars_[it->second];
}

const std::vector<Value>* Domains::values(Symbol name) const
{
    const auto* d = find(name);
    return d ? &d->values : nullptr;
}

DomainFn Domains::fn() const
{
    return [this](Symbol s) { return values(s); };
}

namespace {

void push_unique(std::vector<Value>& out, const Value& v)
{
    if (std::find(out.begin(), out.end(), v) == out.end())
        out.push_back(v);
}

} // namespace

std::vector<Value> enumerate_sort(const Sort& s, const Bounds& b, const std::vector<Value>& samples,
                                  bool with_infinity, std::optional<IntRange> nat_range)
{
    std::vector<Value> out;
    switch (s.kind()) {
    case Sort::Kind::Nat: {
        IntRange r = nat_range.value_or(b.nat);
        for (auto i = std::max<std::int64_t>(r.lo, 0); i <= r.hi; ++i)
            out.push_back(Value::integer(i));
        break;
    }
    case Sort::Kind::Int:
        for (auto i = b.integer.lo; i <= b.integer.hi; ++i)
            out.push_back(Value::integer(i));
        break;
    case Sort::Kind::Rational:
        for (auto i = b.rational_num.lo; i <= b.rational_num.hi; ++i)
            push_unique(out, Value::rational(i, b.rational_den));
        break;
    case Sort::Kind::Time:
        out = samples;
        if (with_infinity)
            push_unique(out, Value::infinity());
        break;
    case Sort::Kind::Enum:
        out = s.literals();
        break;
    case Sort::Kind::Extended: {
        out = enumerate_sort(*s.base(), b, samples, with_infinity, nat_range);
        push_unique(out, Value::literal(s.bottom()));
        break;
    }
    case Sort::Kind::Tuple: {
        std::vector<std::vector<Value>> parts;
        std::size_t total = 1;
        for (const auto& item : s.items()) {
            parts.push_back(enumerate_sort(*item, b, samples, with_infinity));
            total *= std::max<std::size_t>(parts.back().size(), 1);
            if (total > b.tuple_cap)
                throw DomainError("tuple sort " + s.to_string() + " exceeds the enumeration cap");
        }
        std::vector<std::size_t> idx(parts.size(), 0);
        if (std::any_of(parts.begin(), parts.end(), [](const auto& p) { return p.empty(); }))
            break;
        while (true) {
            std::vector<Value> items;
            for (std::size_t i = 0; i < parts.size(); ++i)
                items.push_back(parts[i][idx[i]]);
            out.push_back(Value::tuple(std::move(items)));
            std::size_t k = parts.size();
            bool done = true;
            while (k > 0) {
                --k;
                if (++idx[k] < parts[k].size()) {
                    done = false;
                    break;
                }
                idx[k] = 0;
            }
            if (done)
                break;
        }
        break;
    }
    }
    return out;
}

std::vector<Value> time_samples(const Bounds& b, const Env& constants)
{
    std::vector<Number> pts;
    if (!b.time_samples.empty()) {
        std::vector<Value> out;
        for (const auto& e : b.time_samples) {
            Value v = eval(*e, constants, &constants);
            if (!v.is_ordered() || (v.is_number() && v.number() < 0))
                throw DomainError("time sample " + v.to_string() + " is not a time");
            push_unique(out, v);
        }
        return out;
    }
    pts.push_back(Number(0));
    for (const auto& [name, v] : constants.entries())
        if (v.is_number() && v.number() >= 0)
            pts.push_back(v.number());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<Number> all = pts;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        all.push_back((pts[i] + pts[i + 1]) / Number(2));
    all.push_back(pts.back() + Number(1));
    std::sort(all.begin(), all.end());
    std::vector<Value> out;
    for (const auto& n : all)
        out.push_back(Value(n));
    return out;
}

Env constant_values(const Model& m, const Bounds& b)
{
    Env env;
    for (const auto& c : m.constants) {
        auto it = b.constants.find(c.name);
        std::optional<Value> v = it != b.constants.end() ? std::optional<Value>(it->second) : c.value;
        if (!v)
            throw DomainError("constant " + c.name.str() + " has no value; give one in the bounds file");
        if (!c.sort->contains(*v))
            throw DomainError("constant " + c.name.str() + " = " + v->to_string() + " is not in "
                              + c.sort->to_string());
        env.set(c.name, *v);
    }
    for (const auto& [name, v] : b.constants)
        if (!m.constant(name))
            throw DomainError("bounds give a value for unknown constant " + name.str());
    return env;
}

Domains make_domains(const Model& m, const Bounds& b)
{
    Domains d;
    d.budget = b.budget;
    d.constants() = constant_values(m, b);
    // derived samples consider only time-sorted constants
    Env time_consts;
    for (const auto& c : m.constants)
        if (c.sort->kind() == Sort::Kind::Time)
            time_consts.set(c.name, *d.constants().find(c.name));
    std::vector<Value> samples;
    if (!b.time_samples.empty())
        samples = time_samples(b, d.constants());
    else
        samples = time_samples(b, time_consts);

    for (const auto& v : m.state) {
        auto ov = b.var_values.find(v.name);
        if (ov != b.var_values.end()) {
            for (const auto& val : ov->second)
                if (!v.sort->contains(val))
                    throw DomainError("value " + val.to_string() + " for " + v.name.str() + " is not in "
                                      + v.sort->to_string());
            d.add(v.name, VarRole::State, ov->second);
            continue;
        }
        std::optional<IntRange> nr;
        auto no = b.nat_override.find(v.name);
        if (no != b.nat_override.end())
            nr = no->second;
        d.add(v.name, VarRole::State, enumerate_sort(*v.sort, b, samples, v.time_var, nr));
    }
    auto xs = m.input ? enumerate_sort(*m.input, b, samples, false) : std::vector<Value>{};
    auto xo = b.var_values.find(Symbol("x"));
    if (xo != b.var_values.end())
        xs = xo->second;
    push_unique(xs, Value::tau());
    d.add(Symbol("x"), VarRole::Input, std::move(xs));
    d.add(Symbol("e"), VarRole::Elapsed, samples);
    d.add(Symbol("t"), VarRole::Time, samples);
    return d;
}

} // namespace devs_scc
