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
#include "support.hpp"

#include <doctest.h>

using namespace devs_scc;
using namespace devs_scc::testing;

TEST_SUITE("parser")
{
    TEST_CASE("fixtures parse and render back to an equal model")
    {
        for (const char* stem : {"soda", "elevator", "toy"}) {
            CAPTURE(stem);
            auto text = read_file(fixture(std::string(stem) + ".devs"));
            auto r = parse_model(text);
            REQUIRE(r.ok());
            auto again = parse_model(render_model(*r.model));
            REQUIRE(again.ok());
            CHECK(models_equal(*r.model, *again.model));
        }
    }

    TEST_CASE("elevator case counts per function")
    {
        auto m = load_model(read_file(fixture("elevator.devs")));
        CHECK(m.dext.proper_cases().size() == 17);
        CHECK(m.dext.has_otherwise());
        CHECK(m.dint.cases.size() == 18);
        CHECK(m.lambda.cases.size() == 25);
        CHECK(validate_model(m).summary() == "18/18/25 cases");
    }

    TEST_CASE("syntax errors carry a position")
    {
        auto r = parse_model("model broken {\n  state { a : nat; }\n  ta(s) = a +;\n}\n");
        REQUIRE_FALSE(r.ok());
        REQUIRE_FALSE(r.diagnostics.empty());
        CHECK(r.diagnostics.front().pos.line == 3);
    }

    TEST_CASE("unknown names are reported")
    {
        auto r = parse_model("model m { state { a : nat; } input nat; output nat; ta(s) = b;"
                             " dext(s, e, x) { otherwise -> a; } dint(s) { otherwise -> a; }"
                             " lambda(s) { otherwise -> a; } }");
        bool seen = r.ok() ? !validate_model(*r.model).usable() : true;
        CHECK(seen);
    }

    TEST_CASE("bounds entries")
    {
        auto b = parse_bounds("nat = 0..5; int = -1..1; rational = 0..4 / 2; const T = 3; budget = 10;");
        CHECK(b.nat.hi == 5);
        CHECK(b.integer.lo == -1);
        CHECK(b.rational_den == 2);
        CHECK(b.constants.at(Symbol("T")) == Value::integer(3));
        CHECK(b.budget == 10);
        CHECK_THROWS(parse_bounds("nat = 3..1;"));
    }

    TEST_CASE("value spelling round trips")
    {
        for (const auto& v : {Value::integer(-3), Value::rational(7, 4), Value::rational(1, 3), Value::infinity(),
                              Value::literal("open"),
                              Value::tuple({Value::integer(1), Value::tuple({Value::literal("bot")})})})
            CHECK(parse_value(v.to_string()) == v);
        CHECK_THROWS_AS(parse_value("(1, 2"), SchemaError);
    }
}
