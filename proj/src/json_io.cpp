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
#include "devs_scc/json_io.hpp"

#include <cctype>

namespace devs_scc {

namespace {

class ValueReader {
public:
    explicit ValueReader(std::string_view s) : s_(s) {}

    Value read()
    {
        Value v = item();
        skip();
        if (i_ != s_.size())
            fail("trailing text");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw SchemaError("bad value '" + std::string(s_) + "': " + what);
    }

    void skip()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
            ++i_;
    }

    std::int64_t digits()
    {
        std::size_t start = i_;
        std::int64_t n = 0;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            n = n * 10 + (s_[i_] - '0');
            ++i_;
        }
        if (i_ == start)
            fail("digit expected");
        return n;
    }

    Value item()
    {
        skip();
        if (i_ >= s_.size())
            fail("value expected");
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            std::vector<Value> items;
            for (;;) {
                items.push_back(item());
                skip();
                if (i_ < s_.size() && s_[i_] == ',') {
                    ++i_;
                    continue;
                }
                if (i_ < s_.size() && s_[i_] == ')') {
                    ++i_;
                    break;
                }
                fail("',' or ')' expected");
            }
            return Value::tuple(std::move(items));
        }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            bool neg = c == '-';
            if (neg)
                ++i_;
            Number n{digits()};
            if (i_ < s_.size() && s_[i_] == '.') {
                ++i_;
                std::size_t start = i_;
                std::int64_t frac = digits();
                std::int64_t scale = 1;
                for (std::size_t k = start; k < i_; ++k)
                    scale *= 10;
                n += Number{frac, scale};
            } else if (i_ < s_.size() && s_[i_] == '/') {
                ++i_;
                std::int64_t den = digits();
                if (den == 0)
                    fail("zero denominator");
                n /= Number{den};
            }
            return Value(neg ? -n : n);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = i_;
            while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
                ++i_;
            auto word = s_.substr(start, i_ - start);
            if (word == "infinity")
                return Value::infinity();
            return Value::literal(word);
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view s_;
    std::size_t i_ = 0;
};

std::string pred_text(const PredPtr& p)
{
    return p ? to_string(p) : std::string();
}

const Json& member(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw SchemaError(std::string("missing field '") + key + "'");
    return j.at(key);
}

} // namespace

Value parse_value(std::string_view text)
{
    return ValueReader(text).read();
}

Json value_json(const Value& v)
{
    if (v.is_integer())
        return v.number().numerator();
    return v.to_string();
}

Value value_from_json(const Json& j)
{
    if (j.is_number_integer())
        return Value::integer(j.get<std::int64_t>());
    if (j.is_string())
        return parse_value(j.get<std::string>());
    throw SchemaError("value must be an integer or a string, got " + j.dump());
}

Json scc_json(const Scc& s)
{
    Json j;
    j["id"] = s.id;
    j["ini_st"] = pred_text(s.ini_st);
    j["in_pairs"] = pred_text(s.in_pairs);
    j["link"] = s.link ? Json(pred_text(s.link)) : Json(nullptr);
    j["criterion"] = s.provenance.criterion;
    j["target"] = s.provenance.target;
    j["combined_from"] = s.combined_from;
    return j;
}

Json state_json(const Model& m, const StateVec& s)
{
    Json j = Json::object();
    for (std::size_t i = 0; i < m.state.size() && i < s.size(); ++i)
        j[m.state[i].name.str()] = value_json(s[i]);
    return j;
}

StateVec state_from_json(const Model& m, const Json& j)
{
    if (!j.is_object())
        throw SchemaError("state must be an object keyed by variable name");
    for (const auto& [k, v] : j.items())
        if (!m.state_index(Symbol(k)))
            throw SchemaError("unknown state variable '" + k + "'");
    StateVec s;
    for (const auto& v : m.state) {
        if (!j.contains(v.name.str()))
            throw SchemaError("state variable '" + v.name.str() + "' missing");
        s.push_back(value_from_json(j.at(v.name.str())));
    }
    return s;
}

Json config_json(const Model& m, const SimulationConfig& c)
{
    Json j;
    j["scc"] = c.scc_id;
    j["state"] = state_json(m, c.state);
    j["input"] = {{"event", value_json(c.input.event)}, {"time", value_json(c.input.time)}};
    return j;
}

SimulationConfig config_from_json(const Model& m, const Json& j)
{
    SimulationConfig c;
    c.scc_id = j.value("scc", 0);
    c.state = state_from_json(m, member(j, "state"));
    const auto& in = member(j, "input");
    c.input.event = value_from_json(member(in, "event"));
    c.input.time = in.contains("time") ? value_from_json(in.at("time")) : Value::integer(0);
    if (!c.input.time.is_ordered())
        throw SchemaError("input time must be a number");
    return c;
}

Json trace_event_json(const Model& m, const TraceEvent& ev)
{
    Json j;
    j["at"] = value_json(Value(ev.at));
    j["kind"] = ev.kind == TraceKind::External ? "external" : ev.kind == TraceKind::Internal ? "internal" : "output";
    j["fn"] = fn_name(ev.fn);
    j["case"] = ev.case_id ? Json(ev.case_id) : Json("otherwise");
    j["value"] = value_json(ev.value);
    j["elapsed"] = value_json(Value(ev.elapsed));
    if (ev.kind != TraceKind::Output)
        j["state_after"] = state_json(m, ev.state_after);
    if (ev.tie)
        j["tie"] = true;
    return j;
}

Json failure_json(const SimFailure& f)
{
    return {{"kind", sim_error_name(f.kind)}, {"message", f.message}, {"at", value_json(Value(f.at))}};
}

Json trace_json(const Model& m, const Trace& t)
{
    Json j;
    j["initial"] = state_json(m, t.initial);
    j["events"] = Json::array();
    for (const auto& ev : t.events)
        j["events"].push_back(trace_event_json(m, ev));
    j["failure"] = t.failure ? failure_json(*t.failure) : Json(nullptr);
    j["final"] = state_json(m, t.final_state);
    j["signature"] = trace_signature(t);
    return j;
}

Json sequence_json(const Model& m, const SimulationSequence& q)
{
    Json j;
    j["initial"] = state_json(m, q.initial);
    j["covered"] = q.covered;
    j["steps"] = Json::array();
    for (const auto& st : q.steps) {
        Json s = config_json(m, st.config);
        s["events"] = Json::array();
        for (const auto& ev : st.events)
            s["events"].push_back(trace_event_json(m, ev));
        j["steps"].push_back(std::move(s));
    }
    if (q.failure)
        j["failure"] = {{"scc", q.failure->scc_id}, {"kind", q.failure->kind}, {"message", q.failure->message}};
    else
        j["failure"] = nullptr;
    return j;
}

Json probe_json(const ProbeReport& p)
{
    Json j;
    j["scc"] = p.scc_id;
    j["requested"] = p.requested;
    j["run"] = p.run;
    j["skipped"] = p.run < 2;
    j["uniform"] = p.uniform;
    j["signatures"] = p.signatures;
    if (!p.note.empty())
        j["note"] = p.note;
    return j;
}

Json application_json(const CriterionResult& r)
{
    Json j;
    j["criterion"] = r.criterion;
    j["target"] = r.target;
    j["count"] = r.sccs.size();
    j["infeasible"] = r.infeasible;
    j["duplicates"] = r.duplicates;
    j["notes"] = r.notes;
    Json ids = Json::array();
    for (const auto& s : r.sccs)
        ids.push_back(s.id);
    j["ids"] = ids;
    return j;
}

Json combination_json(const CombinationReport& r)
{
    Json j;
    j["kept"] = r.kept;
    j["dropped"] = r.dropped;
    j["unknown"] = r.unknown;
    j["partial"] = r.partial;
    j["outcomes"] = Json::array();
    for (const auto& o : r.outcomes) {
        const char* st = o.status == SatStatus::Sat ? "kept" : o.status == SatStatus::Unsat ? "dropped" : "unknown";
        j["outcomes"].push_back({{"group", o.group}, {"status", st}, {"id", o.id}});
    }
    return j;
}

CombinationPlan plan_from_json(const Json& j, const std::vector<Scc>& base)
{
    if (!j.is_object())
        throw SchemaError("plan must be an object");
    if (j.contains("schema") && j.at("schema") != kSchema)
        throw SchemaError("unsupported plan schema " + j.at("schema").dump());
    CombinationPlan plan;
    if (j.value("all_pairs", false)) {
        std::vector<int> ids;
        for (const auto& s : base)
            ids.push_back(s.id);
        plan = all_pairs(ids);
    } else {
        for (const auto& g : member(j, "groups")) {
            if (!g.is_array())
                throw SchemaError("each group must be an array of ids");
            plan.groups.push_back(g.get<std::vector<int>>());
        }
    }
    if (j.contains("max_arity"))
        plan.max_arity = j.at("max_arity").get<std::size_t>();
    if (j.contains("budget"))
        plan.budget = j.at("budget").get<std::size_t>();
    return plan;
}

std::string dump(const Json& j)
{
    return j.dump(2) + "\n";
}

} // namespace devs_scc
