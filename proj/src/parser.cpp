#include "crystallo/parser.hpp"
#include "crystallo/errors.hpp"
#include "crystallo/util.hpp"

#include <cctype>
#include <optional>

namespace crystallo {

namespace {

    struct Token {
        enum class Kind { Ident, Number, Punct, End };
        Kind kind = Kind::End;
        std::string text;
        int line = 1;
        int column = 1;
    };

    struct Lexer {
        const std::string & src;
        std::size_t pos = 0;
        int line = 1;
        int column = 1;

        explicit Lexer(const std::string & s) : src(s) {}

        void advance()
        {
            if (src[pos] == '\n') {
                ++line;
                column = 1;
            }
            else {
                ++column;
            }
            ++pos;
        }

        Token next()
        {
            while (pos < src.size()) {
                char c = src[pos];
                if (c == '#') {
                    while (pos < src.size() && src[pos] != '\n')
                        advance();
                }
                else if (std::isspace(static_cast<unsigned char>(c))) {
                    advance();
                }
                else {
                    break;
                }
            }
            Token t;
            t.line = line;
            t.column = column;
            if (pos >= src.size())
                return t;
            char c = src[pos];
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                t.kind = Token::Kind::Ident;
                while (pos < src.size()
                       && (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_')) {
                    t.text += src[pos];
                    advance();
                }
                return t;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                t.kind = Token::Kind::Number;
                while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
                    t.text += src[pos];
                    advance();
                }
                return t;
            }
            static const std::string puncts = "{}()[],;:/=";
            if (puncts.find(c) != std::string::npos) {
                t.kind = Token::Kind::Punct;
                t.text = c;
                advance();
                return t;
            }
            throw ParseError(line, column, std::string("unexpected character '") + c + "'");
        }
    };

    struct Parser {
        Lexer lexer;
        Token tok;

        explicit Parser(const std::string & src) : lexer(src) { tok = lexer.next(); }

        [[noreturn]] void fail(const std::string & expected) const
        {
            std::string got = tok.kind == Token::Kind::End ? "end of input"
                                                           : "'" + tok.text + "'";
            throw ParseError(tok.line, tok.column, "expected " + expected + ", got " + got);
        }

        void bump() { tok = lexer.next(); }

        bool at_punct(char c) const
        {
            return tok.kind == Token::Kind::Punct && tok.text[0] == c;
        }

        void expect_punct(char c)
        {
            if (! at_punct(c))
                fail(std::string("'") + c + "'");
            bump();
        }

        void expect_keyword(const std::string & kw)
        {
            if (tok.kind != Token::Kind::Ident || tok.text != kw)
                fail("'" + kw + "'");
            bump();
        }

        bool at_keyword(const std::string & kw) const
        {
            return tok.kind == Token::Kind::Ident && tok.text == kw;
        }

        // identifier or bare numeral
        std::string expect_name()
        {
            if (tok.kind != Token::Kind::Ident && tok.kind != Token::Kind::Number)
                fail("a name");
            std::string name = tok.text;
            bump();
            return name;
        }

        int expect_int()
        {
            if (tok.kind != Token::Kind::Number)
                fail("an integer");
            long value = std::stol(tok.text);
            if (value > 1'000'000'000)
                throw ParseError(tok.line, tok.column, "integer too large");
            bump();
            return static_cast<int>(value);
        }

        void expect_end()
        {
            if (tok.kind != Token::Kind::End)
                fail("end of input");
        }

        Term parse_term(const Signature & sig)
        {
            Token name_tok = tok;
            std::string name = expect_name();
            if (at_punct('(')) {
                bump();
                std::vector<Term> args;
                args.push_back(parse_term(sig));
                while (at_punct(',')) {
                    bump();
                    args.push_back(parse_term(sig));
                }
                expect_punct(')');
                int op = sig.op_index(name);
                if (op < 0) {
                    if (sig.const_index(name) >= 0)
                        throw ParseError(name_tok.line, name_tok.column,
                                         "arity mismatch: constant '" + name
                                             + "' used with arguments");
                    throw ParseError(name_tok.line, name_tok.column,
                                     "unknown operation '" + name + "'");
                }
                if (static_cast<int>(args.size()) != sig.ops[op].arity)
                    throw ParseError(name_tok.line, name_tok.column,
                                     "arity mismatch: '" + name + "' takes "
                                         + std::to_string(sig.ops[op].arity)
                                         + " arguments, got " + std::to_string(args.size()));
                return Term::apply(name, std::move(args));
            }
            if (sig.const_index(name) >= 0)
                return Term::cons(name);
            if (sig.op_index(name) >= 0)
                throw ParseError(name_tok.line, name_tok.column,
                                 "arity mismatch: operation '" + name + "' used without arguments");
            return Term::var(name);
        }
    };

}

VarietyPresentation parse_variety(const std::string & text)
{
    // Two passes: declarations may follow the equations that use them, so
    // the signature is collected first and equation bodies are parsed on
    // the second sweep.
    VarietyPresentation v;
    {
        Parser p(text);
        p.expect_keyword("variety");
        v.name = p.expect_name();
        p.expect_punct('{');
        while (! p.at_punct('}')) {
            if (p.at_keyword("op")) {
                p.bump();
                Token name_tok = p.tok;
                std::string name = p.expect_name();
                p.expect_punct('/');
                int arity = p.expect_int();
                p.expect_punct(';');
                if (arity < 1)
                    throw ParseError(name_tok.line, name_tok.column,
                                     "operation '" + name + "' must have arity >= 1");
                if (v.signature.has_name(name))
                    throw ParseError(name_tok.line, name_tok.column,
                                     "duplicate name '" + name + "'");
                v.signature.ops.push_back({name, arity});
            }
            else if (p.at_keyword("const")) {
                p.bump();
                Token name_tok = p.tok;
                std::string name = p.expect_name();
                p.expect_punct(';');
                if (v.signature.has_name(name))
                    throw ParseError(name_tok.line, name_tok.column,
                                     "duplicate name '" + name + "'");
                v.signature.consts.push_back(name);
            }
            else if (p.at_keyword("eq")) {
                p.bump();
                while (! p.at_punct(';')) {
                    if (p.tok.kind == Token::Kind::End)
                        p.fail("';'");
                    p.bump();
                }
                p.bump();
            }
            else {
                p.fail("'op', 'const', 'eq' or '}'");
            }
        }
        p.expect_punct('}');
        p.expect_end();
    }
    {
        Parser p(text);
        p.expect_keyword("variety");
        p.expect_name();
        p.expect_punct('{');
        while (! p.at_punct('}')) {
            if (p.at_keyword("op")) {
                p.bump();
                p.expect_name();
                p.expect_punct('/');
                p.expect_int();
                p.expect_punct(';');
            }
            else if (p.at_keyword("const")) {
                p.bump();
                p.expect_name();
                p.expect_punct(';');
            }
            else {
                p.expect_keyword("eq");
                Term lhs = p.parse_term(v.signature);
                p.expect_punct('=');
                Term rhs = p.parse_term(v.signature);
                p.expect_punct(';');
                v.equations.push_back({std::move(lhs), std::move(rhs)});
            }
        }
    }
    v.validate();
    return v;
}

FiniteAlgebra parse_algebra(const std::string & text, const VarietyPresentation & v)
{
    Parser p(text);
    p.expect_keyword("algebra");

    FiniteAlgebra a;
    a.signature = v.signature;
    a.name = p.expect_name();
    p.expect_punct(':');
    Token vtok = p.tok;
    std::string vname = p.expect_name();
    if (vname != v.name)
        throw ParseError(vtok.line, vtok.column, "algebra declares variety '" + vname
                                                     + "', expected '" + v.name + "'");
    p.expect_punct('{');
    p.expect_keyword("size");
    a.size = p.expect_int();
    p.expect_punct(';');

    std::vector<std::optional<std::vector<int>>> tables(v.signature.ops.size());
    std::vector<std::optional<int>> consts(v.signature.consts.size());

    while (! p.at_punct('}')) {
        Token name_tok = p.tok;
        std::string name = p.expect_name();
        if (p.at_punct(':')) {
            p.bump();
            p.expect_punct('[');
            std::vector<int> entries;
            if (! p.at_punct(']')) {
                entries.push_back(p.expect_int());
                while (p.at_punct(',')) {
                    p.bump();
                    entries.push_back(p.expect_int());
                }
            }
            p.expect_punct(']');
            p.expect_punct(';');
            int op = v.signature.op_index(name);
            if (op < 0)
                throw ParseError(name_tok.line, name_tok.column,
                                 "unknown operation '" + name + "'");
            if (tables[op])
                throw ParseError(name_tok.line, name_tok.column,
                                 "duplicate table for '" + name + "'");
            std::size_t want = table_size(a.size, v.signature.ops[op].arity);
            if (entries.size() != want)
                throw ParseError(name_tok.line, name_tok.column,
                                 "table '" + name + "' has " + std::to_string(entries.size())
                                     + " entries, expected " + std::to_string(want));
            for (int e : entries)
                if (e < 0 || e >= a.size)
                    throw ParseError(name_tok.line, name_tok.column,
                                     "entry " + std::to_string(e) + " out of range in table '"
                                         + name + "'");
            tables[op] = std::move(entries);
        }
        else if (p.at_punct('=')) {
            p.bump();
            int value = p.expect_int();
            p.expect_punct(';');
            int c = v.signature.const_index(name);
            if (c < 0)
                throw ParseError(name_tok.line, name_tok.column,
                                 "unknown constant '" + name + "'");
            if (consts[c])
                throw ParseError(name_tok.line, name_tok.column,
                                 "duplicate assignment for '" + name + "'");
            if (value < 0 || value >= a.size)
                throw ParseError(name_tok.line, name_tok.column,
                                 "constant value " + std::to_string(value) + " out of range");
            consts[c] = value;
        }
        else {
            p.fail("':' or '='");
        }
    }
    p.expect_punct('}');
    p.expect_end();

    for (std::size_t op = 0; op < tables.size(); ++op) {
        if (! tables[op])
            throw Error("missing table for '" + v.signature.ops[op].name + "'");
        a.tables.push_back(std::move(*tables[op]));
    }
    for (std::size_t c = 0; c < consts.size(); ++c) {
        if (! consts[c])
            throw Error("missing assignment for constant '" + v.signature.consts[c] + "'");
        a.consts.push_back(*consts[c]);
    }
    a.validate();
    return a;
}

}
