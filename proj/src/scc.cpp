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
#include "devs_scc/scc.hpp"

#include <algorithm>

namespace devs_scc {

PredPtr Scc::joint() const
{
    std::vector<PredPtr> parts{ini_st, in_pairs};
    if (link)
        parts.push_back(link);
    return Pred::conj(std::move(parts));
}

std::vector<int> Scc::ancestry() const
{
    if (!combined_from.empty())
        return combined_from;
    return {id};
}

PredPtr tau_pairs(const Model& m)
{
    return Pred::conj(Pred::compare(CmpOp::Eq, m.input_var(), Expr::constant(Value::tau())),
                      Pred::compare(CmpOp::Eq, m.time_var(), Expr::constant(Value::integer(0))));
}

namespace {

bool same_pred(const PredPtr& a, const PredPtr& b)
{
    if (!a || !b)
        return !a && !b;
    return structurally_equal(*normalize(a), *normalize(b));
}

} // namespace

bool same_class(const Scc& a, const Scc& b)
{
    return same_pred(a.ini_st, b.ini_st) && same_pred(a.in_pairs, b.in_pairs) && same_pred(a.link, b.link);
}

} // namespace devs_scc
