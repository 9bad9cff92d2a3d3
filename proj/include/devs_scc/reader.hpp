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
#ifndef DEVS_SCC_READER_HPP
#define DEVS_SCC_READER_HPP

#include "devs_scc/model.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace devs_scc {

struct SourcePos {
    int line = 1;
    int col = 1;
};

class ParseError : public std::runtime_error {
public:
    ParseError(SourcePos pos, const std::string& msg)
        : std::runtime_error(std::to_string(pos.line) + ":" + std::to_string(pos.col) + ": " + msg), pos_(pos),
          bare_(msg)
    {
    }
    SourcePos pos() const { return pos_; }
    const std::string& bare_message() const { return bare_; }

private:
    SourcePos pos_;
    std::string bare_;
};

enum class TokKind { Ident, Number, String, Punct, End };

struct Token {
    TokKind kind = TokKind::End;
    std::string text;
    SourcePos pos;
};

/// Splits DSL text into tokens. `--` starts a comment; a few Unicode
/// operators are mapped to their ASCII spelling.
std::vector<Token> tokenize(std::string_view text);

/// Name resolution context for predicates and expressions.
struct Scope {
    enum class Unknown { Error, ConstVar, Literal, Param };

    const Model* model = nullptr;
    bool allow_state = true;
    bool allow_x = false;
    bool allow_e = false;
    bool allow_t = false;
    std::vector<std::pair<Symbol, ExprPtr>> locals;
    std::map<Symbol, std::shared_ptr<const OpDef>> ops;
    std::map<Symbol, SortPtr> aliases;
    std::vector<Symbol> literals;
    Unknown unknown = Unknown::Error;
    SortPtr unknown_sort;  ///< sort given to names created for unknown identifiers
};

/// Recursive-descent reader shared by every DSL file kind.
class Reader {
public:
    explicit Reader(std::string_view text);

    const Token& peek(std::size_t ahead = 0) const;
    bool at_end() const { return peek().kind == TokKind::End; }
    bool is(std::string_view punct_or_keyword, std::size_t ahead = 0) const;
    bool accept(std::string_view punct_or_keyword);
    void expect(std::string_view punct_or_keyword);
    Token advance();
    Symbol ident(const char* what = "identifier");
    std::string string_literal();
    std::int64_t signed_integer();
    [[noreturn]] void fail(const std::string& msg) const;
    [[noreturn]] void fail_at(const Token& t, const std::string& msg) const;

    std::size_t mark() const { return pos_; }
    void reset(std::size_t m) { pos_ = m; }

    PredPtr predicate(const Scope& s);
    ExprPtr expression(const Scope& s);
    SortPtr sort(const Scope& s);
    /// Closed value: number, rational, literal, infinity, tau or tuple.
    Value value(const Scope& s);
    std::vector<Value> value_set(const Scope& s);

private:
    PredPtr implies(const Scope& s);
    PredPtr disjunction(const Scope& s);
    PredPtr conjunction(const Scope& s);
    PredPtr unary_pred(const Scope& s);
    PredPtr atom(const Scope& s);
    ExprPtr additive(const Scope& s);
    ExprPtr multiplicative(const Scope& s);
    ExprPtr unary_expr(const Scope& s);
    ExprPtr postfix(const Scope& s);
    ExprPtr primary(const Scope& s);
    ExprPtr resolve(const Token& t, const Scope& s);
    SortPtr sort_alt(const Scope& s);
    std::vector<ExprPtr> args(const Scope& s);

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

} // namespace devs_scc

#endif
