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
#ifndef DEVS_SCC_TEST_SUPPORT_HPP
#define DEVS_SCC_TEST_SUPPORT_HPP

#include "devs_scc/campaign.hpp"
#include "devs_scc/parser.hpp"
#include "devs_scc/symbolic.hpp"

#include <string>

namespace devs_scc::testing {

inline std::string fixture(const std::string& name)
{
    return std::string(DEVS_SCC_FIXTURES) + "/" + name;
}

struct Loaded {
    Model model;
    Bounds bounds;
    Domains domains;
};

inline Loaded load_fixture(const std::string& stem)
{
    Loaded l{load_model(read_file(fixture(stem + ".devs"))), parse_bounds(read_file(fixture(stem + ".bounds"))), {}};
    l.domains = make_domains(l.model, l.bounds);
    return l;
}

inline Catalog catalog_from(const Loaded& l, const std::string& crit, const std::string& parts = {})
{
    PartitionRegistry reg;
    if (!parts.empty())
        reg.user = parse_partitions(read_file(fixture(parts)));
    auto cf = parse_criteria(read_file(fixture(crit)), l.model);
    for (auto& p : cf.partitions)
        reg.user.push_back(p);
    std::vector<CriterionResult> rs;
    for (const auto& s : cf.selections)
        rs.push_back(apply_selection(s, l.model, l.domains, reg));
    return build_catalog(std::move(rs));
}

inline PredPtr pred(const Model& m, const std::string& text)
{
    return parse_predicate(text, model_scope(m, true, true));
}

inline bool same_form(const PredPtr& a, const PredPtr& b)
{
    return to_string(normalize(a)) == to_string(normalize(b));
}

/// Same truth value on every point of the bounded grid.
inline bool equivalent(const PredPtr& a, const PredPtr& b, const Domains& d)
{
    return !find_difference(a, b, d).has_value();
}

} // namespace devs_scc::testing

#endif
