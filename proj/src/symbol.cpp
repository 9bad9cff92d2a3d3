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
#include "devs_scc/symbol.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace devs_scc {
namespace {

struct Interner {
    std::shared_mutex mutex;
    std::deque<std::string> names{std::string{}}; // id 0 is the invalid symbol
    std::unordered_map<std::string_view, std::uint32_t> ids;

    std::uint32_t intern(std::string_view name)
    {
        {
            std::shared_lock lock(mutex);
            if (auto it = ids.find(name); it != ids.end())
                return it->second;
        }
        std::unique_lock lock(mutex);
        if (auto it = ids.find(name); it != ids.end())
            return it->second;
        names.emplace_back(name);
        auto id = static_cast<std::uint32_t>(names.size() - 1);
        ids.emplace(names.back(), id);
        return id;
    }

    const std::string& lookup(std::uint32_t id)
    {
        std::shared_lock lock(mutex);
        return names[id];
    }
};

Interner& interner()
{
    static Interner instance;
    return instance;
}

} // namespace

Symbol::Symbol(std::string_view name) : id_(interner().intern(name)) {}

const std::string& Symbol::str() const { return interner().lookup(id_); }

} // namespace devs_scc
